#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "chatmine/lexicon.hpp"
#include "chatmine/rng.hpp"
#include "chatmine/sentiment.hpp"
#include "test_util.hpp"

#ifndef CHATMINE_DATA_DIR
#define CHATMINE_DATA_DIR "data"
#endif

using namespace chatmine;
using namespace chatmine::testutil;

namespace {

const SentimentLexicon& shipped_lexicon() {
    static const SentimentLexicon lex =
        load_lexicon_file(std::string(CHATMINE_DATA_DIR) + "/lexicon/chatmine-v1.tsv");
    return lex;
}

std::vector<std::string> token_texts(const std::string& text) {
    std::vector<std::string> out;
    for (const Token& t : tokenize(text)) out.push_back(t.text);
    return out;
}

} // namespace

TEST_CASE("tokenize: caps flags survive lowercasing") {
    auto toks = tokenize("YEAH RIGHT.");
    REQUIRE(toks.size() == 2);
    CHECK(toks[0].text == "yeah");
    CHECK(toks[1].text == "right");
    CHECK(toks[0].all_caps);
    CHECK(toks[1].all_caps);
}

TEST_CASE("tokenize: empty and punctuation-only input") {
    CHECK(tokenize("").empty());
    CHECK(tokenize("... !!! ---").empty());
}

TEST_CASE("tokenize: contractions stay whole, mixed case is not all-caps") {
    auto toks = token_texts("can't sign into Google accounts");
    CHECK(toks == std::vector<std::string>{"can't", "sign", "into", "google", "accounts"});
    auto full = tokenize("can't sign into Google accounts");
    for (const Token& t : full) CHECK_FALSE(t.all_caps);
}

TEST_CASE("tokenize: trailing apostrophes are not kept") {
    CHECK(token_texts("the boys' phone") ==
          std::vector<std::string>{"the", "boys", "phone"});
}

TEST_CASE("tokenize: emoticons from the fixed table survive as tokens") {
    CHECK(token_texts("works now :)") == std::vector<std::string>{"works", "now", ":)"});
    CHECK(token_texts("ugh :-( again") == std::vector<std::string>{"ugh", ":-(", "again"});
    // longest match wins
    CHECK(token_texts(":-)") == std::vector<std::string>{":-)"});
}

TEST_CASE("tokenize: digits are word characters") {
    CHECK(token_texts("error 404 on s3") == std::vector<std::string>{"error", "404", "on", "s3"});
}

TEST_CASE("normalization is strictly increasing and bounded") {
    CHECK(normalize_valence(0.0) == 0.0);
    Rng rng(3);
    for (int i = 0; i < 500; ++i) {
        const double x1 = rng.uniform(-30.0, 30.0);
        const double x2 = x1 + rng.uniform(0.001, 5.0);
        CHECK(normalize_valence(x1) < normalize_valence(x2));
        CHECK(std::abs(normalize_valence(x1)) < 1.0);
    }
}

TEST_CASE("score_utterance: no lexicon hits means exactly zero") {
    auto s = score_utterance("the quick brown fox", mini_lexicon());
    CHECK(s.valence == 0.0);
    CHECK(s.matched_tokens == 0);
}

TEST_CASE("score_utterance: negation flips and scales by 0.74") {
    auto lex = mini_lexicon(); // good = +1.9
    const double raw = -(1.9 * 0.74);
    const double expected = raw / std::sqrt(raw * raw + 15.0);
    auto s = score_utterance("not good", lex);
    CHECK(s.matched_tokens == 1);
    CHECK(s.valence == doctest::Approx(expected).epsilon(1e-12));
    CHECK(s.valence < 0.0);
}

TEST_CASE("score_utterance: negation window reaches exactly 3 tokens back") {
    auto lex = mini_lexicon();
    const double plain = score_utterance("good", lex).valence;
    CHECK(score_utterance("not good", lex).valence < 0.0);
    CHECK(score_utterance("not that good", lex).valence < 0.0);
    CHECK(score_utterance("not all that good", lex).valence < 0.0);
    // 4 tokens back: out of window
    CHECK(score_utterance("not sure about all good", lex).valence ==
          doctest::Approx(plain));
}

TEST_CASE("score_utterance: all-caps match scales magnitude by 1.25") {
    auto lex = mini_lexicon();
    const double caps_raw = 1.9 * 1.25;
    CHECK(score_utterance("GOOD", lex).valence ==
          doctest::Approx(caps_raw / std::sqrt(caps_raw * caps_raw + 15.0)));
    const double neg_raw = -2.5 * 1.25;
    CHECK(score_utterance("BAD", lex).valence ==
          doctest::Approx(neg_raw / std::sqrt(neg_raw * neg_raw + 15.0)));
}

TEST_CASE("score_utterance: booster immediately before adds toward the sign") {
    auto lex = mini_lexicon();
    const double boosted = 1.9 + 0.293;
    CHECK(score_utterance("very good", lex).valence ==
          doctest::Approx(boosted / std::sqrt(boosted * boosted + 15.0)));
    // dampener moves toward zero
    const double damped = 1.9 - 0.293;
    CHECK(score_utterance("slightly good", lex).valence ==
          doctest::Approx(damped / std::sqrt(damped * damped + 15.0)));
    // negative match: delta is subtracted, growing the magnitude
    const double negb = -(2.5 + 0.293);
    CHECK(score_utterance("very bad", lex).valence ==
          doctest::Approx(negb / std::sqrt(negb * negb + 15.0)));
    // booster two tokens away does not fire
    CHECK(score_utterance("very much good", lex).valence ==
          doctest::Approx(score_utterance("good", lex).valence));
}

TEST_CASE("score_utterance: filler tokens beyond the window are inert") {
    auto lex = mini_lexicon();
    const double a = score_utterance("alpha beta gamma delta epsilon not good", lex).valence;
    const double b = score_utterance("epsilon delta alpha gamma beta not good", lex).valence;
    CHECK(a == b);
}

TEST_CASE("score_utterance: paper sign anchors under the shipped lexicon") {
    const auto& lex = shipped_lexicon();
    auto neg = score_utterance(
        "I purchased phone and then I noticed a terrible scuff on my screen.", lex);
    CHECK(neg.valence < 0.0);
    auto pos = score_utterance(
        "It was a pleasure assisting you, thank you for contacting Samsung Technical Support.",
        lex);
    CHECK(pos.valence > 0.0);
}

TEST_CASE("shipped lexicon: sarcasm stays a documented failure mode") {
    // "YEAH RIGHT" reads positive to a rule-based scorer; the toolkit does
    // not attempt sarcasm detection
    CHECK(score_utterance("YEAH RIGHT.", shipped_lexicon()).valence > 0.0);
}

TEST_CASE("shipped lexicon loads with disjoint sections") {
    const auto& lex = shipped_lexicon();
    CHECK(lex.entries.size() > 4000);
    CHECK(lex.negators.size() >= 50);
    CHECK(lex.boosters.size() >= 40);
    CHECK(lex.meta.name == "chatmine-default");
    for (const auto& n : lex.negators) {
        CHECK(lex.entries.count(n) == 0);
        CHECK(lex.boosters.count(n) == 0);
    }
    for (const auto& [b, d] : lex.boosters) CHECK(lex.entries.count(b) == 0);
}

TEST_CASE("segment_stages: worked examples") {
    auto r8 = segment_stages(8);
    CHECK(r8 == std::array<IndexRange, 4>{{{0, 2}, {2, 4}, {4, 6}, {6, 8}}});
    auto r10 = segment_stages(10);
    CHECK(r10 == std::array<IndexRange, 4>{{{0, 2}, {2, 5}, {5, 7}, {7, 10}}});
    auto r1 = segment_stages(1);
    CHECK(r1 == std::array<IndexRange, 4>{{{0, 0}, {0, 0}, {0, 0}, {0, 1}}});
}

TEST_CASE("segment_stages partitions [0, m) for every m up to 10000") {
    for (std::size_t m = 1; m <= 10000; ++m) {
        auto r = segment_stages(m);
        CHECK(r[0].begin == 0);
        CHECK(r[3].end == m);
        for (int k = 0; k < 3; ++k) CHECK(r[k].end == r[k + 1].begin);
        std::size_t total = 0;
        for (const auto& range : r) total += range.size();
        if (total != m) {
            REQUIRE(total == m); // fail loudly with the offending m visible
        }
        if (m >= 4)
            for (const auto& range : r) CHECK(range.size() >= 1);
    }
}

TEST_CASE("segment_stages by wall-clock time quarters the session span") {
    // four utterances bunched into the first quarter, one at the very end
    Session s = session("t",
                        {utt(Speaker::Agent, 0, "a"), utt(Speaker::Customer, 10, "b"),
                         utt(Speaker::Agent, 20, "c"), utt(Speaker::Customer, 24, "d"),
                         utt(Speaker::Agent, 400, "e")},
                        0, 400);
    auto by_index = segment_stages(s, StageMethod::Index);
    CHECK(by_index == std::array<IndexRange, 4>{{{0, 1}, {1, 2}, {2, 3}, {3, 5}}});

    auto by_time = segment_stages(s, StageMethod::Time);
    // quarters are [0,100), [100,200), [200,300), [300,400]
    CHECK(by_time == std::array<IndexRange, 4>{{{0, 4}, {4, 4}, {4, 4}, {4, 5}}});

    // time stages still partition [0, m)
    CHECK(by_time[0].begin == 0);
    CHECK(by_time[3].end == 5);
    for (int k = 0; k < 3; ++k) CHECK(by_time[k].end == by_time[k + 1].begin);
}

TEST_CASE("segment_stages by time handles a zero-length span") {
    Session s = session("t", {utt(Speaker::Agent, 5, "a"), utt(Speaker::Customer, 5, "b")}, 5, 5);
    auto r = segment_stages(s, StageMethod::Time);
    CHECK(r[0].begin == 0);
    CHECK(r[3].end == 2);
    std::size_t total = 0;
    for (const auto& range : r) total += range.size();
    CHECK(total == 2);
}

TEST_CASE("stage_sentiment honors the stage method switch") {
    auto lex = mini_lexicon();
    Session s = session("t",
                        {utt(Speaker::Customer, 0, "good"), utt(Speaker::Customer, 1, "bad"),
                         utt(Speaker::Customer, 2, "good"), utt(Speaker::Customer, 398, "bad")},
                        0, 400);
    StageSentiment idx = stage_sentiment(s, lex); // one utterance per step
    CHECK(idx.count(Speaker::Customer, 0) == 1);
    CHECK(idx.count(Speaker::Customer, 3) == 1);

    StageSentiment tm = stage_sentiment(s, lex, StageMethod::Time);
    CHECK(tm.count(Speaker::Customer, 0) == 3); // first quarter holds three
    CHECK(tm.count(Speaker::Customer, 1) == 0);
    CHECK(tm.count(Speaker::Customer, 3) == 1);
    CHECK(tm.customer_by_step[1] == 0.0);
}

TEST_CASE("stage_sentiment: neutral speaker yields zero cells") {
    auto lex = mini_lexicon();
    Session s = session("t", {utt(Speaker::Agent, 0, "hello there"),
                              utt(Speaker::Customer, 1, "good"),
                              utt(Speaker::Agent, 2, "one moment"),
                              utt(Speaker::Customer, 3, "bad")},
                        0, 10);
    StageSentiment ss = stage_sentiment(s, lex);
    for (int k = 0; k < 4; ++k) CHECK(ss.agent_by_step[k] == 0.0);
}

TEST_CASE("stage_sentiment: alternating session places one utterance per step") {
    auto lex = mini_lexicon();
    Session s = session("t", {utt(Speaker::Customer, 0, "good"),     // step 1
                              utt(Speaker::Agent, 1, "ok"),          // step 2
                              utt(Speaker::Customer, 2, "not good"), // step 3
                              utt(Speaker::Agent, 3, "ok")},         // step 4
                        0, 10);
    StageSentiment ss = stage_sentiment(s, lex);
    const double good = score_utterance("good", lex).valence;
    const double notgood = score_utterance("not good", lex).valence;
    CHECK(ss.customer_by_step[0] == doctest::Approx(good));
    CHECK(ss.customer_by_step[1] == 0.0); // empty cell fill
    CHECK(ss.customer_by_step[2] == doctest::Approx(notgood));
    CHECK(ss.customer_by_step[3] == 0.0);
    CHECK(ss.agent_by_step[1] == 0.0);
    CHECK(ss.count(Speaker::Customer, 0) == 1);
    CHECK(ss.count(Speaker::Agent, 3) == 1);
}

TEST_CASE("stage_sentiment: cells stay within [-1, 1] and shuffles within a stage are inert") {
    auto lex = mini_lexicon();
    std::vector<Utterance> utts;
    Rng rng(9);
    const char* words[] = {"good", "bad", "terrible", "love", "meh", "ok"};
    for (int i = 0; i < 40; ++i) {
        Speaker sp = rng.bernoulli(0.5) ? Speaker::Customer : Speaker::Agent;
        utts.push_back(utt(sp, i, words[rng.below(6)]));
    }
    Session s = session("t", utts, 0, 100);
    StageSentiment before = stage_sentiment(s, lex);
    for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(before.customer_by_step[k]) <= 1.0);
        CHECK(std::abs(before.agent_by_step[k]) <= 1.0);
    }

    // shuffle texts among same-speaker utterances within each stage
    auto stages = segment_stages(s);
    for (const auto& range : stages) {
        for (Speaker sp : {Speaker::Customer, Speaker::Agent}) {
            std::vector<std::size_t> slots;
            for (std::size_t i = range.begin; i < range.end; ++i)
                if (s.utterances[i].speaker == sp) slots.push_back(i);
            for (std::size_t i = slots.size(); i > 1; --i)
                std::swap(s.utterances[slots[i - 1]].text,
                          s.utterances[slots[rng.below(i)]].text);
        }
    }
    StageSentiment after = stage_sentiment(s, lex);
    for (int k = 0; k < 4; ++k) {
        CHECK(after.customer_by_step[k] == doctest::Approx(before.customer_by_step[k]));
        CHECK(after.agent_by_step[k] == doctest::Approx(before.agent_by_step[k]));
    }
}

TEST_CASE("sentiment_dynamics: singleton group reports degenerate CI") {
    auto lex = mini_lexicon();
    Corpus c;
    c.sessions.push_back(surveyed(session("v", {utt(Speaker::Customer, 0, "love"),
                                                utt(Speaker::Agent, 1, "ok"),
                                                utt(Speaker::Customer, 2, "good"),
                                                utt(Speaker::Agent, 3, "ok")},
                                          0, 10),
                                  Rating::VerySatisfied));
    DynamicsResult r = sentiment_dynamics(c, lex, vs_vd_groups());
    // VD group empty: omitted with a warning
    CHECK(r.cells.size() == 8);
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings[0].find("VD") != std::string::npos);

    StageSentiment ss = stage_sentiment(c.sessions[0], lex);
    for (const DynamicsCell& cell : r.cells) {
        CHECK(cell.group == "VS");
        CHECK(cell.n == 1);
        CHECK(cell.ci_low == cell.mean);
        CHECK(cell.ci_high == cell.mean);
        const double want = cell.speaker == Speaker::Customer
                                ? ss.customer_by_step[cell.step - 1]
                                : ss.agent_by_step[cell.step - 1];
        CHECK(cell.mean == doctest::Approx(want));
    }
}
