#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chatmine/time.hpp"

namespace chatmine {

enum class Speaker { Customer, Agent };

enum class Disconnector { Customer, Agent, System, Unknown };

// 5-point survey scale; numeric values match the JSONL "overall" field.
enum class Rating : int {
    VeryDissatisfied = 1,
    Dissatisfied = 2,
    Average = 3,
    Satisfied = 4,
    VerySatisfied = 5,
};

const char* to_string(Speaker s);
const char* to_string(Disconnector d);
std::optional<Disconnector> disconnector_from_string(const std::string& s);

// Smallest chat unit: text sent by one press of enter.
struct Utterance {
    Speaker speaker = Speaker::Customer;
    TimeMs timestamp = 0;
    std::string text;
};

struct SurveyResult {
    Rating overall_satisfaction = Rating::Average;
    std::optional<bool> prefer_chat;
    std::optional<Rating> knowledge_rating;
    std::optional<std::string> dissatisfaction_reason;
};

// One complete customer-agent chat, greeting to disconnect.
struct Session {
    std::string session_id;
    std::string product_type;
    std::string agent_id;
    std::string customer_id;
    int timezone_offset_minutes = 0;
    TimeMs start_time = 0;
    TimeMs end_time = 0;
    Disconnector disconnected_by = Disconnector::Unknown;
    std::vector<Utterance> utterances;
    std::optional<SurveyResult> survey;

    double duration_minutes() const {
        return static_cast<double>(end_time - start_time) / 60000.0;
    }
};

struct Provenance {
    enum class Kind { Ingested, Synthetic } kind = Kind::Ingested;
    std::uint64_t seed = 0;     // Synthetic only
    std::string config_hash;    // Synthetic only
};

struct Corpus {
    std::vector<Session> sessions;
    Provenance provenance;
};

// One invariant breach found by validate_session().
struct Violation {
    std::string field;
    std::string rule;
};

// Total function: empty result iff every Session/Utterance/SurveyResult
// invariant holds. Violations name the offending field and rule.
std::vector<Violation> validate_session(const Session& s);

struct CorpusStats {
    std::size_t n_sessions = 0;
    double duration_mean_min = 0.0;
    double duration_median_min = 0.0;
    double duration_std_min = 0.0;
    // nearest-rank percentiles of per-session utterance counts
    std::size_t utt_p25 = 0;
    std::size_t utt_p50 = 0;
    std::size_t utt_p75 = 0;
    std::size_t utt_p95 = 0;
    double survey_response_rate = 0.0;
    std::array<std::size_t, 5> rating_histogram{}; // index 0 = VeryDissatisfied
    std::size_t surveyed_sessions() const;
};

// Exact arithmetic over the corpus; empty corpus yields the zeroed stats
// value with n_sessions = 0.
CorpusStats corpus_stats(const Corpus& c);

// Nearest-rank percentile: value at 1-based index ceil(p/100 * n) of the
// sorted list; p in (0, 100].
double percentile_nearest_rank(std::vector<double> values, double p);

} // namespace chatmine
