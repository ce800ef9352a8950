#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "chatmine/corpus.hpp"
#include "chatmine/lexicon.hpp"

namespace chatmine {

enum class SpeakerScope { Customer, Agent, Both };

// 0 selects the whole session, 1..4 one conversation step.
struct NgramConfig {
    std::vector<int> n_values = {1, 2}; // subset of {1, 2}, non-empty
    SpeakerScope speaker = SpeakerScope::Both;
    int stage = 0;
    std::size_t min_session_support = 20;

    void validate() const; // throws ConfigError
};

// Tokens joined by single spaces; tokens themselves never contain spaces.
using Gram = std::string;

// Distinct n-grams spoken by the configured speaker within the configured
// stage. Grams never cross utterance boundaries.
std::set<Gram> session_ngrams(const Session& s, const NgramConfig& cfg);

// 2x2 gram-presence x label counts.
//   a = present & TRUE, b = present & FALSE, c = absent & TRUE, d = absent & FALSE
struct ContingencyTable {
    std::uint64_t a = 0, b = 0, c = 0, d = 0;
    std::uint64_t n() const { return a + b + c + d; }
};

// Pearson chi-squared without continuity correction:
//   N(ad - bc)^2 / ((a+b)(c+d)(a+c)(b+d));  0 when any margin is empty.
double chi_squared(const ContingencyTable& t);

// sqrt(chi2 / N) for the 2x2 case; in [0, 1].
double cramers_v(const ContingencyTable& t);

struct NgramStat {
    Gram gram;
    int n = 1; // gram order
    double v = 0.0;
    double chi2 = 0.0;
    double freq_true = 0.0;  // a / (a + c): TRUE-session presence fraction
    double freq_false = 0.0; // b / (b + d)
    std::uint64_t support = 0; // a + b
    ContingencyTable table;
};

struct NgramRanking {
    std::vector<NgramStat> stats; // v descending, ties lexicographic by gram
    std::size_t n_true_sessions = 0;
    std::size_t n_false_sessions = 0;
    std::vector<std::string> warnings;
};

// One contingency table per gram meeting min_session_support, over labeled
// sessions only. Empty ranking with a warning when no sessions are labeled.
NgramRanking rank_ngrams(const Corpus& c, const NgramConfig& cfg);

void write_ngram_csv(const NgramRanking& r, std::ostream& out);

enum class PmiWindow { Utterance, Session };

struct PmiConfig {
    PmiWindow window = PmiWindow::Utterance;
    std::size_t min_count = 5;      // windows a token must appear in
    double polarity_threshold = 1.0; // |score| needed for expansion, > 0
    double smoothing = 0.5;          // additive count smoothing, >= 0

    void validate() const; // throws ConfigError
};

// log2(p(a,b) / (p(a) p(b))) with p(x) = (count(x) + smoothing) / (W + smoothing)
// over window-presence counts. Unsmoothed never-co-occurring pairs yield
// -infinity. Throws ConfigError when either token is below min_count.
double pmi(const std::string& token_a, const std::string& token_b, const Corpus& c,
           const PmiConfig& cfg);

struct ExpansionEntry {
    std::string token;
    double score = 0.0;   // sum of PMI with positive seeds minus negative seeds
    double valence = 0.0; // valence assigned in the expanded lexicon
    std::uint64_t count = 0;
};

struct ExpansionResult {
    SentimentLexicon lexicon;           // seed plus additions
    std::vector<ExpansionEntry> added;  // |score| descending, ties by token
    std::size_t n_candidates = 0;       // tokens that met min_count
    std::size_t n_windows = 0;
};

// For each out-of-seed token meeting min_count, polarity score =
// sum_{s in positive seeds} PMI(t,s) - sum_{s in negative seeds} PMI(t,s)
// restricted to seeds meeting min_count; |score| >= polarity_threshold adds
// the token with valence sign(score) * min(|score|, cap) scaled into the seed
// valence range (cap = 4 * polarity_threshold). Throws ConfigError when the
// seed has no entries.
ExpansionResult expand_lexicon(const Corpus& c, const SentimentLexicon& seed,
                               const PmiConfig& cfg);

// Fraction of utterances containing at least one lex.entries token.
// Empty corpus => 0.
double lexicon_coverage(const Corpus& c, const SentimentLexicon& lex);

} // namespace chatmine
