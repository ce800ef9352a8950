#include "chatmine/textstats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <unordered_map>

#include "chatmine/csv.hpp"
#include "chatmine/error.hpp"
#include "chatmine/features.hpp"
#include "chatmine/sentiment.hpp"

namespace chatmine {

void NgramConfig::validate() const {
    if (n_values.empty()) throw ConfigError("ngram config needs at least one n value");
    for (int n : n_values)
        if (n != 1 && n != 2)
            throw ConfigError("ngram config supports n in {1, 2}, got " + std::to_string(n));
    if (stage < 0 || stage > 4)
        throw ConfigError("ngram stage must be 0 (all) or 1..4");
    if (min_session_support < 1)
        throw ConfigError("min_session_support must be >= 1");
}

std::set<Gram> session_ngrams(const Session& s, const NgramConfig& cfg) {
    cfg.validate();
    IndexRange scope{0, s.utterances.size()};
    if (cfg.stage != 0) {
        const auto stages = segment_stages(s);
        scope = stages[static_cast<std::size_t>(cfg.stage - 1)];
    }

    const bool want_uni =
        std::find(cfg.n_values.begin(), cfg.n_values.end(), 1) != cfg.n_values.end();
    const bool want_bi =
        std::find(cfg.n_values.begin(), cfg.n_values.end(), 2) != cfg.n_values.end();

    std::set<Gram> grams;
    for (std::size_t i = scope.begin; i < scope.end; ++i) {
        const Utterance& u = s.utterances[i];
        if (cfg.speaker == SpeakerScope::Customer && u.speaker != Speaker::Customer) continue;
        if (cfg.speaker == SpeakerScope::Agent && u.speaker != Speaker::Agent) continue;
        const auto tokens = tokenize(u.text);
        if (want_uni)
            for (const Token& t : tokens) grams.insert(t.text);
        if (want_bi)
            for (std::size_t j = 0; j + 1 < tokens.size(); ++j)
                grams.insert(tokens[j].text + " " + tokens[j + 1].text);
    }
    return grams;
}

double chi_squared(const ContingencyTable& t) {
    const double a = static_cast<double>(t.a), b = static_cast<double>(t.b),
                 c = static_cast<double>(t.c), d = static_cast<double>(t.d);
    const double r1 = a + b, r2 = c + d, c1 = a + c, c2 = b + d;
    if (r1 <= 0.0 || r2 <= 0.0 || c1 <= 0.0 || c2 <= 0.0) return 0.0;
    const double n = a + b + c + d;
    const double det = a * d - b * c;
    return n * det * det / (r1 * r2 * c1 * c2);
}

double cramers_v(const ContingencyTable& t) {
    const std::uint64_t n = t.n();
    if (n == 0) return 0.0;
    return std::sqrt(chi_squared(t) / static_cast<double>(n));
}

NgramRanking rank_ngrams(const Corpus& c, const NgramConfig& cfg) {
    cfg.validate();
    NgramRanking out;

    // presence counts per gram, split by label
    std::unordered_map<Gram, std::pair<std::uint64_t, std::uint64_t>> counts;
    for (const Session& s : c.sessions) {
        if (!s.survey) continue;
        const bool dissatisfied = label_dissatisfaction(*s.survey);
        if (dissatisfied) ++out.n_true_sessions;
        else ++out.n_false_sessions;
        for (const Gram& g : session_ngrams(s, cfg)) {
            auto& e = counts[g];
            if (dissatisfied) ++e.first;
            else ++e.second;
        }
    }

    if (out.n_true_sessions + out.n_false_sessions == 0) {
        out.warnings.push_back("corpus has no labeled sessions; ranking is empty");
        return out;
    }

    out.stats.reserve(counts.size());
    for (const auto& [gram, presence] : counts) {
        const std::uint64_t support = presence.first + presence.second;
        if (support < cfg.min_session_support) continue;
        NgramStat st;
        st.gram = gram;
        st.n = static_cast<int>(std::count(gram.begin(), gram.end(), ' ')) + 1;
        st.table.a = presence.first;
        st.table.b = presence.second;
        st.table.c = out.n_true_sessions - presence.first;
        st.table.d = out.n_false_sessions - presence.second;
        st.chi2 = chi_squared(st.table);
        st.v = cramers_v(st.table);
        st.freq_true = out.n_true_sessions
                           ? static_cast<double>(st.table.a) /
                                 static_cast<double>(out.n_true_sessions)
                           : 0.0;
        st.freq_false = out.n_false_sessions
                            ? static_cast<double>(st.table.b) /
                                  static_cast<double>(out.n_false_sessions)
                            : 0.0;
        st.support = support;
        out.stats.push_back(std::move(st));
    }

    std::sort(out.stats.begin(), out.stats.end(), [](const NgramStat& x, const NgramStat& y) {
        if (x.v != y.v) return x.v > y.v;
        return x.gram < y.gram;
    });
    return out;
}

void write_ngram_csv(const NgramRanking& r, std::ostream& out) {
    out << "# freq_true/freq_false are per-class session-presence fractions: a/(a+c), b/(b+d)\n";
    out << "rank,gram,n,v,chi2,freq_true,freq_false,support\n";
    for (std::size_t i = 0; i < r.stats.size(); ++i) {
        const NgramStat& st = r.stats[i];
        out << (i + 1) << ',' << csv_escape(st.gram) << ',' << st.n << ','
            << format_double(st.v) << ',' << format_double(st.chi2) << ','
            << format_double(st.freq_true) << ',' << format_double(st.freq_false) << ','
            << st.support << '\n';
    }
}

// --- PMI ---------------------------------------------------------------------

void PmiConfig::validate() const {
    if (min_count < 1) throw ConfigError("pmi min_count must be >= 1");
    if (polarity_threshold <= 0.0) throw ConfigError("pmi polarity_threshold must be > 0");
    if (smoothing < 0.0) throw ConfigError("pmi smoothing must be >= 0");
}

namespace {

struct WindowSets {
    std::vector<std::set<std::string>> windows; // distinct tokens per window
    std::unordered_map<std::string, std::uint64_t> token_count;
};

WindowSets collect_windows(const Corpus& c, PmiWindow window) {
    WindowSets ws;
    for (const Session& s : c.sessions) {
        if (window == PmiWindow::Utterance) {
            for (const Utterance& u : s.utterances) {
                std::set<std::string> toks;
                for (const Token& t : tokenize(u.text)) toks.insert(t.text);
                ws.windows.push_back(std::move(toks));
            }
        } else {
            std::set<std::string> toks;
            for (const Utterance& u : s.utterances)
                for (const Token& t : tokenize(u.text)) toks.insert(t.text);
            ws.windows.push_back(std::move(toks));
        }
    }
    for (const auto& w : ws.windows)
        for (const auto& t : w) ++ws.token_count[t];
    return ws;
}

// Shared by pmi() and expand_lexicon() so the two always agree. Marginals are
// exact count fractions; the joint is smoothed toward the independence
// product, so a never-co-occurring pair is -inf unsmoothed and finite
// negative for any smoothing > 0.
double pmi_from_counts(std::uint64_t c_a, std::uint64_t c_b, std::uint64_t c_ab,
                       std::uint64_t n_windows, double smoothing) {
    const double w = static_cast<double>(n_windows);
    const double pa = static_cast<double>(c_a) / w;
    const double pb = static_cast<double>(c_b) / w;
    const double prior = pa * pb;
    const double pab = (static_cast<double>(c_ab) + smoothing * prior) / (w + smoothing);
    if (pab <= 0.0) return -std::numeric_limits<double>::infinity();
    return std::log2(pab / prior);
}

} // namespace

double pmi(const std::string& token_a, const std::string& token_b, const Corpus& c,
           const PmiConfig& cfg) {
    cfg.validate();
    const WindowSets ws = collect_windows(c, cfg.window);

    auto count_of = [&](const std::string& t) -> std::uint64_t {
        auto it = ws.token_count.find(t);
        return it == ws.token_count.end() ? 0 : it->second;
    };
    const std::uint64_t c_a = count_of(token_a);
    const std::uint64_t c_b = count_of(token_b);
    if (c_a < cfg.min_count)
        throw ConfigError("pmi: token '" + token_a + "' is below min_count (" +
                          std::to_string(c_a) + " < " + std::to_string(cfg.min_count) + ")");
    if (c_b < cfg.min_count)
        throw ConfigError("pmi: token '" + token_b + "' is below min_count (" +
                          std::to_string(c_b) + " < " + std::to_string(cfg.min_count) + ")");

    std::uint64_t c_ab = 0;
    for (const auto& w : ws.windows)
        if (w.count(token_a) && w.count(token_b)) ++c_ab;
    return pmi_from_counts(c_a, c_b, c_ab, ws.windows.size(), cfg.smoothing);
}

ExpansionResult expand_lexicon(const Corpus& c, const SentimentLexicon& seed,
                               const PmiConfig& cfg) {
    cfg.validate();
    if (seed.entries.empty())
        throw ConfigError("expand_lexicon: seed lexicon has no entries");

    const WindowSets ws = collect_windows(c, cfg.window);

    // seeds present in the corpus at min_count, split by polarity
    std::vector<std::pair<std::string, double>> pos_seeds, neg_seeds;
    double max_seed_abs = 0.0;
    for (const auto& [token, valence] : seed.entries) {
        max_seed_abs = std::max(max_seed_abs, std::abs(valence));
        auto it = ws.token_count.find(token);
        if (it == ws.token_count.end() || it->second < cfg.min_count) continue;
        if (valence > 0.0) pos_seeds.emplace_back(token, valence);
        else if (valence < 0.0) neg_seeds.emplace_back(token, valence);
    }
    if (max_seed_abs <= 0.0) max_seed_abs = 1.0;

    // candidates: frequent tokens not claimed by any seed section
    std::vector<std::string> candidates;
    for (const auto& [token, count] : ws.token_count) {
        if (count < cfg.min_count) continue;
        if (seed.entries.count(token) || seed.negators.count(token) ||
            seed.boosters.count(token))
            continue;
        candidates.push_back(token);
    }
    std::sort(candidates.begin(), candidates.end());

    // co-occurrence counts candidate x seed in one pass over windows
    std::unordered_map<std::string, std::size_t> cand_index;
    for (std::size_t i = 0; i < candidates.size(); ++i) cand_index[candidates[i]] = i;
    std::unordered_map<std::string, std::size_t> seed_index;
    std::vector<std::string> seed_tokens;
    for (const auto& [t, v] : pos_seeds) { seed_index[t] = seed_tokens.size(); seed_tokens.push_back(t); }
    for (const auto& [t, v] : neg_seeds) { seed_index[t] = seed_tokens.size(); seed_tokens.push_back(t); }

    std::vector<std::uint64_t> cooc(candidates.size() * seed_tokens.size(), 0);
    for (const auto& w : ws.windows) {
        std::vector<std::size_t> cands, seeds;
        for (const auto& t : w) {
            auto ci = cand_index.find(t);
            if (ci != cand_index.end()) cands.push_back(ci->second);
            auto si = seed_index.find(t);
            if (si != seed_index.end()) seeds.push_back(si->second);
        }
        for (std::size_t ci : cands)
            for (std::size_t si : seeds) ++cooc[ci * seed_tokens.size() + si];
    }

    const double cap = 4.0 * cfg.polarity_threshold;
    ExpansionResult result;
    result.n_candidates = candidates.size();
    result.n_windows = ws.windows.size();
    result.lexicon = seed;

    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
        const std::string& token = candidates[ci];
        const std::uint64_t c_t = ws.token_count.at(token);
        double score = 0.0;
        for (const auto& [s_token, valence] : pos_seeds)
            score += pmi_from_counts(c_t, ws.token_count.at(s_token),
                                     cooc[ci * seed_tokens.size() + seed_index.at(s_token)],
                                     ws.windows.size(), cfg.smoothing);
        for (const auto& [s_token, valence] : neg_seeds)
            score -= pmi_from_counts(c_t, ws.token_count.at(s_token),
                                     cooc[ci * seed_tokens.size() + seed_index.at(s_token)],
                                     ws.windows.size(), cfg.smoothing);
        if (std::abs(score) < cfg.polarity_threshold) continue;
        if (!std::isfinite(score)) continue; // unsmoothed never-co-occurring seeds

        ExpansionEntry entry;
        entry.token = token;
        entry.score = score;
        entry.count = c_t;
        const double magnitude = std::min(std::abs(score), cap) / cap * max_seed_abs;
        entry.valence = score > 0.0 ? magnitude : -magnitude;
        result.lexicon.entries[token] = entry.valence;
        result.added.push_back(std::move(entry));
    }

    std::sort(result.added.begin(), result.added.end(),
              [](const ExpansionEntry& x, const ExpansionEntry& y) {
                  if (std::abs(x.score) != std::abs(y.score))
                      return std::abs(x.score) > std::abs(y.score);
                  return x.token < y.token;
              });

    result.lexicon.meta.name = seed.meta.name;
    result.lexicon.meta.version = seed.meta.version + "+pmi";
    result.lexicon.meta.provenance =
        "pmi-expansion window=" +
        std::string(cfg.window == PmiWindow::Utterance ? "utterance" : "session") +
        " min_count=" + std::to_string(cfg.min_count) +
        " threshold=" + format_double(cfg.polarity_threshold) +
        " smoothing=" + format_double(cfg.smoothing) +
        " added=" + std::to_string(result.added.size());
    return result;
}

double lexicon_coverage(const Corpus& c, const SentimentLexicon& lex) {
    std::uint64_t utterances = 0;
    std::uint64_t hits = 0;
    for (const Session& s : c.sessions) {
        for (const Utterance& u : s.utterances) {
            ++utterances;
            for (const Token& t : tokenize(u.text)) {
                if (lex.entries.count(t.text)) {
                    ++hits;
                    break;
                }
            }
        }
    }
    if (utterances == 0) return 0.0;
    return static_cast<double>(hits) / static_cast<double>(utterances);
}

} // namespace chatmine
