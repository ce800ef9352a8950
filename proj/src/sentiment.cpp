#include "chatmine/sentiment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>

#include "chatmine/csv.hpp"
#include "chatmine/parallel.hpp"

namespace chatmine {

namespace {

// Fixed emoticon table; longest match wins at any non-word position.
const std::vector<std::string>& emoticon_table() {
    static const std::vector<std::string> kEmoticons = {
        ":-)", ":)", ":-(", ":(", ":-D", ":D", ":-P", ":P", ":-/", ":/",
        ";-)", ";)", ":'(", ":|", ":O", "=)", "=(", "<3", "</3", "^_^",
        "-_-", "T_T", "D:", "XD", "xD",
    };
    return kEmoticons;
}

bool is_word_char(unsigned char c) {
    // bytes >= 0x80 keep multi-byte UTF-8 sequences inside one token
    return std::isalnum(c) || c >= 0x80;
}

bool match_emoticon(const std::string& text, std::size_t pos, std::string& out) {
    std::size_t best = 0;
    for (const std::string& e : emoticon_table()) {
        if (e.size() > best && text.compare(pos, e.size(), e) == 0) {
            // never split a longer word-run: emoticons start at non-word chars
            best = e.size();
            out = e;
        }
    }
    return best > 0;
}

} // namespace

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    const std::size_t n = text.size();
    std::size_t i = 0;
    while (i < n) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (is_word_char(c)) {
            std::size_t start = i;
            bool has_alpha = false;
            bool has_lower = false;
            std::string word;
            while (i < n) {
                const unsigned char wc = static_cast<unsigned char>(text[i]);
                if (is_word_char(wc)) {
                    if (std::isalpha(wc)) {
                        has_alpha = true;
                        if (std::islower(wc)) has_lower = true;
                    }
                    word += static_cast<char>(std::tolower(wc));
                    ++i;
                } else if (text[i] == '\'' && i + 1 < n && i > start &&
                           is_word_char(static_cast<unsigned char>(text[i + 1]))) {
                    // internal apostrophe: keep contractions as one token
                    word += '\'';
                    ++i;
                } else {
                    break;
                }
            }
            tokens.push_back({std::move(word), has_alpha && !has_lower});
        } else {
            std::string emo;
            if (match_emoticon(text, i, emo)) {
                tokens.push_back({emo, false});
                i += emo.size();
            } else {
                ++i;
            }
        }
    }
    return tokens;
}

double normalize_valence(double raw_sum) {
    return raw_sum / std::sqrt(raw_sum * raw_sum + kNormalizationAlpha);
}

SentimentScore score_utterance(const std::string& text, const SentimentLexicon& lex) {
    const std::vector<Token> tokens = tokenize(text);
    double sum = 0.0;
    int matched = 0;

    for (std::size_t i = 0; i < tokens.size(); ++i) {
        auto it = lex.entries.find(tokens[i].text);
        if (it == lex.entries.end()) continue;
        ++matched;
        double v = it->second;

        if (tokens[i].all_caps) v *= kAllCapsScale;

        if (i > 0) {
            auto b = lex.boosters.find(tokens[i - 1].text);
            if (b != lex.boosters.end()) {
                if (v > 0.0) v += b->second;
                else if (v < 0.0) v -= b->second;
            }
        }

        for (std::size_t back = 1; back <= static_cast<std::size_t>(kNegationWindow) && back <= i;
             ++back) {
            if (lex.negators.count(tokens[i - back].text)) {
                v = -v * kNegationScale;
                break;
            }
        }
        sum += v;
    }

    SentimentScore score;
    score.matched_tokens = matched;
    score.valence = matched == 0 ? 0.0 : normalize_valence(sum);
    return score;
}

std::array<IndexRange, 4> segment_stages(std::size_t m) {
    std::array<IndexRange, 4> ranges;
    for (std::size_t k = 0; k < 4; ++k)
        ranges[k] = {k * m / 4, (k + 1) * m / 4};
    return ranges;
}

std::array<IndexRange, 4> segment_stages(const Session& s) {
    return segment_stages(s.utterances.size());
}

std::array<IndexRange, 4> segment_stages(const Session& s, StageMethod method) {
    if (method == StageMethod::Index) return segment_stages(s);

    // quarter the wall-clock span; utterances are sorted, so each quarter is
    // a contiguous index range
    const std::size_t m = s.utterances.size();
    const double span = static_cast<double>(s.end_time - s.start_time);
    std::array<IndexRange, 4> ranges;
    std::size_t i = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        ranges[k].begin = i;
        if (k == 3) {
            i = m; // final quarter is inclusive of end_time
        } else {
            const TimeMs boundary =
                s.start_time + static_cast<TimeMs>(span * static_cast<double>(k + 1) / 4.0);
            while (i < m && s.utterances[i].timestamp < boundary) ++i;
        }
        ranges[k].end = i;
    }
    return ranges;
}

StageSentiment stage_sentiment(const Session& s, const SentimentLexicon& lex,
                               StageMethod method) {
    StageSentiment out;
    const auto stages = segment_stages(s, method);
    for (std::size_t step = 0; step < 4; ++step) {
        double sums[2] = {0.0, 0.0}; // [customer, agent]
        std::size_t counts[2] = {0, 0};
        for (std::size_t i = stages[step].begin; i < stages[step].end; ++i) {
            const Utterance& u = s.utterances[i];
            const std::size_t sp = u.speaker == Speaker::Customer ? 0 : 1;
            sums[sp] += score_utterance(u.text, lex).valence;
            counts[sp] += 1;
        }
        out.customer_by_step[step] = counts[0] ? sums[0] / static_cast<double>(counts[0]) : 0.0;
        out.agent_by_step[step] = counts[1] ? sums[1] / static_cast<double>(counts[1]) : 0.0;
        out.counts[0][step] = counts[0];
        out.counts[1][step] = counts[1];
    }
    return out;
}

DynamicsResult sentiment_dynamics(const Corpus& c, const SentimentLexicon& lex,
                                  const std::vector<DynamicsGroup>& groups, int threads,
                                  StageMethod method) {
    // stage sentiments once per session, shared across groups
    std::vector<StageSentiment> per_session(c.sessions.size());
    parallel_for(c.sessions.size(), threads, [&](std::size_t i) {
        per_session[i] = stage_sentiment(c.sessions[i], lex, method);
    });

    DynamicsResult result;
    for (const DynamicsGroup& g : groups) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < c.sessions.size(); ++i)
            if (g.member(c.sessions[i])) members.push_back(i);
        if (members.empty()) {
            result.warnings.push_back("group '" + g.name + "' has no sessions; omitted");
            continue;
        }
        for (Speaker sp : {Speaker::Customer, Speaker::Agent}) {
            for (int step = 0; step < 4; ++step) {
                double sum = 0.0;
                for (std::size_t i : members) sum += per_session[i].cell(sp, step);
                const double n = static_cast<double>(members.size());
                const double mean = sum / n;

                double sq = 0.0;
                for (std::size_t i : members) {
                    const double dev = per_session[i].cell(sp, step) - mean;
                    sq += dev * dev;
                }
                // normal-approximation 95% CI; degenerate (width 0) for n = 1
                double half = 0.0;
                if (members.size() > 1) {
                    const double stderr_ = std::sqrt(sq / (n - 1.0)) / std::sqrt(n);
                    half = 1.96 * stderr_;
                }
                result.cells.push_back(
                    {g.name, sp, step + 1, mean, mean - half, mean + half, members.size()});
            }
        }
    }
    return result;
}

std::vector<DynamicsGroup> vs_vd_groups() {
    return {
        {"VS",
         [](const Session& s) {
             return s.survey && s.survey->overall_satisfaction == Rating::VerySatisfied;
         }},
        {"VD",
         [](const Session& s) {
             return s.survey && s.survey->overall_satisfaction == Rating::VeryDissatisfied;
         }},
    };
}

void write_dynamics_csv(const DynamicsResult& r, std::ostream& out) {
    out << "group,speaker,step,mean,ci_low,ci_high,n\n";
    for (const DynamicsCell& cell : r.cells) {
        out << csv_escape(cell.group) << ',' << to_string(cell.speaker) << ',' << cell.step
            << ',' << format_double(cell.mean) << ',' << format_double(cell.ci_low) << ','
            << format_double(cell.ci_high) << ',' << cell.n << '\n';
    }
}

} // namespace chatmine
