#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "chatmine/corpus.hpp"
#include "chatmine/lexicon.hpp"

namespace chatmine {

struct Token {
    std::string text;     // lowercased; emoticons kept verbatim
    bool all_caps = false; // original form had letters, all uppercase
};

// Lowercased word tokens split on non-alphanumeric boundaries. Internal
// apostrophes are kept ("can't" stays one token) and emoticons from a fixed
// table survive as single tokens.
std::vector<Token> tokenize(const std::string& text);

struct SentimentScore {
    double valence = 0.0;   // in [-1, 1]; exactly 0 when nothing matched
    int matched_tokens = 0; // lexicon entry hits
};

// Scoring rule constants.
inline constexpr int kNegationWindow = 3;
inline constexpr double kNegationScale = 0.74;
inline constexpr double kAllCapsScale = 1.25;
inline constexpr double kNormalizationAlpha = 15.0;

// x / sqrt(x^2 + alpha); strictly increasing, range (-1, 1).
double normalize_valence(double raw_sum);

// Sums matched-token contributions: all-caps tokens scale magnitude by 1.25,
// a booster immediately before adds its delta toward the token's sign, and a
// negator within the previous 3 tokens flips the sign and scales by 0.74.
// The raw sum is then normalized to (-1, 1).
SentimentScore score_utterance(const std::string& text, const SentimentLexicon& lex);

struct IndexRange {
    std::size_t begin = 0;
    std::size_t end = 0; // half-open
    std::size_t size() const { return end - begin; }
    bool contains(std::size_t i) const { return i >= begin && i < end; }
    bool operator==(const IndexRange&) const = default;
};

// Splits [0, m) into four contiguous steps: step k covers
// [floor(k*m/4), floor((k+1)*m/4)).
std::array<IndexRange, 4> segment_stages(std::size_t n_utterances);
std::array<IndexRange, 4> segment_stages(const Session& s);

// Index is the default (deterministic under irregular typing gaps); Time
// quarters the [start_time, end_time] span instead.
enum class StageMethod { Index, Time };

std::array<IndexRange, 4> segment_stages(const Session& s, StageMethod method);

struct StageSentiment {
    std::array<double, 4> customer_by_step{};
    std::array<double, 4> agent_by_step{};
    std::array<std::array<std::size_t, 4>, 2> counts{}; // [speaker][step]

    double cell(Speaker sp, int step) const {
        return sp == Speaker::Customer ? customer_by_step[static_cast<std::size_t>(step)]
                                       : agent_by_step[static_cast<std::size_t>(step)];
    }
    std::size_t count(Speaker sp, int step) const {
        return counts[sp == Speaker::Customer ? 0 : 1][static_cast<std::size_t>(step)];
    }
};

// Per-(speaker, step) arithmetic mean of utterance valences; empty cells are
// filled with exactly 0.
StageSentiment stage_sentiment(const Session& s, const SentimentLexicon& lex,
                               StageMethod method = StageMethod::Index);

struct DynamicsCell {
    std::string group;
    Speaker speaker = Speaker::Customer;
    int step = 0; // 1..4 in output
    double mean = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::size_t n = 0; // sessions in the group
};

using SessionPredicate = std::function<bool(const Session&)>;

struct DynamicsGroup {
    std::string name;
    SessionPredicate member;
};

struct DynamicsResult {
    std::vector<DynamicsCell> cells; // group-major, speaker (C then A), step
    std::vector<std::string> warnings;
};

// Mean-of-session-means per (group, speaker, step) with a normal-approximation
// 95% CI. Groups with zero member sessions are omitted with a warning.
DynamicsResult sentiment_dynamics(const Corpus& c, const SentimentLexicon& lex,
                                  const std::vector<DynamicsGroup>& groups, int threads = 1,
                                  StageMethod method = StageMethod::Index);

// The Figure-4 style split: VS = VerySatisfied survey, VD = VeryDissatisfied.
std::vector<DynamicsGroup> vs_vd_groups();

void write_dynamics_csv(const DynamicsResult& r, std::ostream& out);

} // namespace chatmine
