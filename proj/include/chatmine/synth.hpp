#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "chatmine/corpus.hpp"

namespace chatmine {

// Injection bias for valence-bearing slot words, per (anchor group, speaker,
// step). Per-rating tables interpolate between the satisfied and dissatisfied
// anchors.
struct SentimentTrajectory {
    std::array<double, 4> satisfied_customer{0.12, 0.18, 0.22, 0.32};
    std::array<double, 4> satisfied_agent{0.15, 0.15, 0.20, 0.30};
    std::array<double, 4> dissatisfied_customer{0.12, -0.18, -0.40, -0.60};
    std::array<double, 4> dissatisfied_agent{0.15, 0.12, 0.02, -0.10};
};

struct SynthConfig {
    std::size_t n_sessions = 25000;
    double duration_median_min = 14.2;
    double duration_mean_min = 17.5;
    double survey_response_rate = 0.16;
    // index 0 = VeryDissatisfied .. index 4 = VerySatisfied; sums to 1
    std::array<double, 5> rating_distribution{0.14, 0.05, 0.12, 0.24, 0.45};
    int utterance_count_p75 = 45;
    SentimentTrajectory trajectory;
    double label_signal_strength = 0.9; // in [0, 1]
    std::uint64_t seed = 42;

    static SynthConfig paper_defaults() { return SynthConfig{}; }

    // Throws ConfigError naming the violated invariant.
    void validate() const;

    // Canonical key=value dump; identical configs produce identical text.
    // Hashed into corpus provenance.
    std::string canonical_text() const;
};

// Key-value text document; '#' starts a comment, unknown keys are errors.
SynthConfig load_synth_config(std::istream& in);
SynthConfig load_synth_config_file(const std::string& path);

// Deterministic for a fixed config (seed included). Each session is generated
// from its own (seed, index)-derived stream, so any thread count produces the
// same corpus.
Corpus synthesize_corpus(const SynthConfig& cfg, int threads = 1);

} // namespace chatmine
