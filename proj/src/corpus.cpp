#include "chatmine/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

namespace chatmine {

const char* to_string(Speaker s) {
    return s == Speaker::Customer ? "customer" : "agent";
}

const char* to_string(Disconnector d) {
    switch (d) {
    case Disconnector::Customer: return "customer";
    case Disconnector::Agent: return "agent";
    case Disconnector::System: return "system";
    case Disconnector::Unknown: return "unknown";
    }
    return "unknown";
}

std::optional<Disconnector> disconnector_from_string(const std::string& s) {
    if (s == "customer") return Disconnector::Customer;
    if (s == "agent") return Disconnector::Agent;
    if (s == "system") return Disconnector::System;
    if (s == "unknown") return Disconnector::Unknown;
    return std::nullopt;
}

namespace {

bool is_blank(const std::string& text) {
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

std::vector<Violation> validate_session(const Session& s) {
    std::vector<Violation> out;
    if (s.session_id.empty())
        out.push_back({"session_id", "session_id is empty"});
    if (s.end_time < s.start_time)
        out.push_back({"end_time", "end_time precedes start_time"});
    if (s.utterances.empty())
        out.push_back({"utterances", "utterances list is empty"});

    TimeMs prev = std::numeric_limits<TimeMs>::min();
    for (std::size_t i = 0; i < s.utterances.size(); ++i) {
        const Utterance& u = s.utterances[i];
        const std::string where = "utterances[" + std::to_string(i) + "]";
        if (is_blank(u.text))
            out.push_back({where + ".text", "utterance text is empty"});
        if (u.timestamp < s.start_time || u.timestamp > s.end_time)
            out.push_back({where + ".timestamp",
                           "timestamp outside session [start, end] range"});
        if (u.timestamp < prev)
            out.push_back({where + ".timestamp", "unsorted utterances"});
        prev = u.timestamp;
    }
    return out;
}

std::size_t CorpusStats::surveyed_sessions() const {
    std::size_t total = 0;
    for (std::size_t b : rating_histogram) total += b;
    return total;
}

double percentile_nearest_rank(std::vector<double> values, double p) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    std::size_t rank = static_cast<std::size_t>(
        std::ceil(p / 100.0 * static_cast<double>(values.size())));
    if (rank < 1) rank = 1;
    if (rank > values.size()) rank = values.size();
    return values[rank - 1];
}

CorpusStats corpus_stats(const Corpus& c) {
    CorpusStats st;
    st.n_sessions = c.sessions.size();
    if (c.sessions.empty()) return st;

    std::vector<double> durations;
    std::vector<double> counts;
    durations.reserve(c.sessions.size());
    counts.reserve(c.sessions.size());
    std::size_t surveyed = 0;

    for (const Session& s : c.sessions) {
        durations.push_back(s.duration_minutes());
        counts.push_back(static_cast<double>(s.utterances.size()));
        if (s.survey) {
            ++surveyed;
            int bin = static_cast<int>(s.survey->overall_satisfaction) - 1;
            st.rating_histogram[static_cast<std::size_t>(bin)] += 1;
        }
    }

    double sum = 0.0;
    for (double d : durations) sum += d;
    st.duration_mean_min = sum / static_cast<double>(durations.size());

    double sq = 0.0;
    for (double d : durations) {
        const double dev = d - st.duration_mean_min;
        sq += dev * dev;
    }
    // sample standard deviation; 0 for a single session
    st.duration_std_min =
        durations.size() > 1 ? std::sqrt(sq / static_cast<double>(durations.size() - 1)) : 0.0;

    st.duration_median_min = percentile_nearest_rank(durations, 50.0);
    st.utt_p25 = static_cast<std::size_t>(percentile_nearest_rank(counts, 25.0));
    st.utt_p50 = static_cast<std::size_t>(percentile_nearest_rank(counts, 50.0));
    st.utt_p75 = static_cast<std::size_t>(percentile_nearest_rank(counts, 75.0));
    st.utt_p95 = static_cast<std::size_t>(percentile_nearest_rank(counts, 95.0));
    st.survey_response_rate =
        static_cast<double>(surveyed) / static_cast<double>(c.sessions.size());
    return st;
}

} // namespace chatmine
