#include "chatmine/manifest.hpp"

#include <filesystem>
#include <fstream>

#include "chatmine/digest.hpp"
#include "chatmine/error.hpp"
#include "chatmine/version.hpp"

namespace chatmine {

using nlohmann::ordered_json;

ManifestFile describe_file(const std::string& path) {
    ManifestFile f;
    f.path = path;
    f.digest = digest_string(fnv1a64_file(path));
    std::error_code ec;
    const auto size = std::filesystem::file_size(path, ec);
    f.bytes = ec ? 0 : static_cast<std::uint64_t>(size);
    return f;
}

void write_manifest(const RunManifest& m, const std::string& path) {
    ordered_json j;
    j["tool"] = kToolName;
    j["tool_version"] = kToolVersion;
    j["command"] = m.command;
    j["argv"] = m.argv;
    j["seed"] = m.seed;
    j["threads"] = m.threads;
    j["config"] = m.config;
    auto files = [](const std::vector<ManifestFile>& fs) {
        ordered_json arr = ordered_json::array();
        for (const ManifestFile& f : fs)
            arr.push_back({{"path", f.path}, {"digest", f.digest}, {"bytes", f.bytes}});
        return arr;
    };
    j["inputs"] = files(m.inputs);
    j["outputs"] = files(m.outputs);
    j["duration_seconds"] = m.duration_seconds;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IngestError("cannot open manifest output: " + path);
    out << j.dump(2) << '\n';
    out.flush();
    if (!out) throw IngestError("write failure: " + path);
}

RunManifest read_manifest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestError("cannot open manifest: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IngestError("bad manifest JSON in " + path + ": " + e.what());
    }
    RunManifest m;
    m.command = j.value("command", "");
    if (j.contains("argv"))
        for (const auto& a : j["argv"]) m.argv.push_back(a.get<std::string>());
    m.seed = j.value("seed", std::uint64_t{0});
    m.threads = j.value("threads", 1);
    if (j.contains("config")) m.config = j["config"];
    auto files = [&](const char* key, std::vector<ManifestFile>& out) {
        if (!j.contains(key)) return;
        for (const auto& f : j[key])
            out.push_back({f.value("path", ""), f.value("digest", ""),
                           f.value("bytes", std::uint64_t{0})});
    };
    files("inputs", m.inputs);
    files("outputs", m.outputs);
    m.duration_seconds = j.value("duration_seconds", 0.0);
    return m;
}

std::string manifest_path_for(const std::string& output_path) {
    std::filesystem::path p(output_path);
    p.replace_extension();
    return p.string() + ".manifest.json";
}

} // namespace chatmine
