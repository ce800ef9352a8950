#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "chatmine/digest.hpp"

namespace chatmine {

struct ManifestFile {
    std::string path;
    std::string digest; // "fnv1a64:<16 hex digits>"
    std::uint64_t bytes = 0;
};

// Record of one CLI run: the resolved configuration snapshot plus input and
// output digests. Re-running the recorded argv reproduces the listed outputs
// byte-for-byte; the manifest itself is the run record, not a data output.
struct RunManifest {
    std::string command;
    std::vector<std::string> argv;
    std::uint64_t seed = 0;
    int threads = 1;
    nlohmann::ordered_json config; // all resolved settings
    std::vector<ManifestFile> inputs;
    std::vector<ManifestFile> outputs;
    double duration_seconds = 0.0;
};

ManifestFile describe_file(const std::string& path);

void write_manifest(const RunManifest& m, const std::string& path);
RunManifest read_manifest(const std::string& path);

// "<stem>.manifest.json" next to the given output path.
std::string manifest_path_for(const std::string& output_path);

} // namespace chatmine
