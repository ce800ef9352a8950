#include <doctest.h>

#include <sstream>

#include "chatmine/corpus.hpp"
#include "chatmine/corpus_io.hpp"
#include "chatmine/error.hpp"
#include "chatmine/synth.hpp"
#include "test_util.hpp"

using namespace chatmine;
using namespace chatmine::testutil;

namespace {

const char* kOneSessionJsonl =
    R"({"session_id":"s1","product":"smartphone","agent_id":"a1","customer_id":"c1",)"
    R"("tz_offset_min":-300,"start":"2014-03-01T12:00:00.000Z","end":"2014-03-01T12:10:00.000Z",)"
    R"("disconnected_by":"customer","utterances":[)"
    R"({"who":"A","t":"2014-03-01T12:00:00.000Z","text":"hello"},)"
    R"({"who":"C","t":"2014-03-01T12:01:00.000Z","text":"my phone broke"},)"
    R"({"who":"A","t":"2014-03-01T12:02:00.000Z","text":"let me check"},)"
    R"({"who":"C","t":"2014-03-01T12:03:00.000Z","text":"ok"}],)"
    R"("survey":{"overall":5,"prefer_chat":true,"knowledge":4,"reason":null}})";

bool sessions_equal(const Session& a, const Session& b) {
    if (a.session_id != b.session_id || a.product_type != b.product_type ||
        a.agent_id != b.agent_id || a.customer_id != b.customer_id ||
        a.timezone_offset_minutes != b.timezone_offset_minutes ||
        a.start_time != b.start_time || a.end_time != b.end_time ||
        a.disconnected_by != b.disconnected_by ||
        a.utterances.size() != b.utterances.size() ||
        a.survey.has_value() != b.survey.has_value())
        return false;
    for (std::size_t i = 0; i < a.utterances.size(); ++i) {
        const Utterance& x = a.utterances[i];
        const Utterance& y = b.utterances[i];
        if (x.speaker != y.speaker || x.timestamp != y.timestamp || x.text != y.text)
            return false;
    }
    if (a.survey) {
        if (a.survey->overall_satisfaction != b.survey->overall_satisfaction ||
            a.survey->prefer_chat != b.survey->prefer_chat ||
            a.survey->knowledge_rating != b.survey->knowledge_rating ||
            a.survey->dissatisfaction_reason != b.survey->dissatisfaction_reason)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("rfc3339 round trip") {
    const std::string s = "2014-03-01T12:34:56.789Z";
    auto t = parse_rfc3339(s);
    REQUIRE(t.has_value());
    CHECK(format_rfc3339(*t) == s);

    auto off = parse_rfc3339("2014-03-01T12:00:00+02:00");
    REQUIRE(off.has_value());
    CHECK(format_rfc3339(*off) == "2014-03-01T10:00:00.000Z");

    CHECK_FALSE(parse_rfc3339("2014-03-01").has_value());
    CHECK_FALSE(parse_rfc3339("2014-03-01T12:00:00").has_value()); // offset required
    CHECK_FALSE(parse_rfc3339("garbage").has_value());
}

TEST_CASE("validate_session reports invariant breaches by field") {
    Session ok = session("s1",
                         {utt(Speaker::Agent, 1000, "hi"), utt(Speaker::Customer, 2000, "yo")},
                         1000, 5000);
    CHECK(validate_session(ok).empty());

    SUBCASE("end before start") {
        Session s = ok;
        s.end_time = 500;
        auto v = validate_session(s);
        bool found = false;
        for (const auto& viol : v)
            if (viol.field == "end_time" && viol.rule == "end_time precedes start_time")
                found = true;
        CHECK(found);
    }

    SUBCASE("third utterance past end names index 2") {
        Session s = ok;
        s.utterances.push_back(utt(Speaker::Agent, 99999, "late"));
        auto v = validate_session(s);
        REQUIRE(v.size() == 1);
        CHECK(v[0].field == "utterances[2].timestamp");
    }

    SUBCASE("empty utterance list") {
        Session s = ok;
        s.utterances.clear();
        auto v = validate_session(s);
        REQUIRE(v.size() == 1);
        CHECK(v[0].field == "utterances");
    }

    SUBCASE("whitespace-only text") {
        Session s = ok;
        s.utterances[1].text = "   ";
        auto v = validate_session(s);
        REQUIRE(v.size() == 1);
        CHECK(v[0].field == "utterances[1].text");
    }
}

TEST_CASE("parse_sessions reads a well-formed JSONL session") {
    std::istringstream in(std::string(kOneSessionJsonl) + "\n");
    ParseResult r = parse_sessions(in, CorpusFormat::SessionJsonl);
    REQUIRE(r.corpus.sessions.size() == 1);
    CHECK(r.report.skipped.empty());
    const Session& s = r.corpus.sessions[0];
    CHECK(s.utterances.size() == 4);
    REQUIRE(s.survey.has_value());
    CHECK(s.survey->overall_satisfaction == Rating::VerySatisfied);
    CHECK(s.survey->prefer_chat == true);
    CHECK(s.timezone_offset_minutes == -300);
}

TEST_CASE("parse_sessions skips sessions with unsorted utterances") {
    std::string line = kOneSessionJsonl;
    // swap the two middle timestamps
    auto pos = line.find("12:02:00");
    line.replace(pos, 8, "12:00:30");
    std::istringstream in(line + "\n");
    ParseResult r = parse_sessions(in, CorpusFormat::SessionJsonl);
    CHECK(r.corpus.sessions.empty());
    REQUIRE(r.report.skipped.size() == 1);
    CHECK(r.report.skipped[0].position == 1);
    CHECK(r.report.skipped[0].reason.find("unsorted") != std::string::npos);
}

TEST_CASE("per-session schema violations never abort the ingest") {
    std::string bad = kOneSessionJsonl;
    auto pos = bad.find("\"my phone broke\"");
    bad.replace(pos, 16, "\"\"");
    bad.replace(bad.find("\"session_id\":\"s1\""), 17, "\"session_id\":\"s2\"");

    std::ostringstream doc;
    doc << kOneSessionJsonl << "\n" << bad << "\n";
    std::string third = kOneSessionJsonl;
    third.replace(third.find("\"session_id\":\"s1\""), 17, "\"session_id\":\"s3\"");
    doc << third << "\n" << "this is not json\n";

    std::istringstream in(doc.str());
    ParseResult r = parse_sessions(in, CorpusFormat::SessionJsonl);
    CHECK(r.corpus.sessions.size() == 2);
    REQUIRE(r.report.skipped.size() == 2);
    CHECK(r.report.skipped[0].position == 2);
    CHECK(r.report.skipped[0].session_id == "s2");
    CHECK(r.report.skipped[1].position == 4);
}

TEST_CASE("duplicate session ids are skipped to keep the corpus invariant") {
    std::ostringstream doc;
    doc << kOneSessionJsonl << "\n" << kOneSessionJsonl << "\n";
    std::istringstream in(doc.str());
    ParseResult r = parse_sessions(in, CorpusFormat::SessionJsonl);
    CHECK(r.corpus.sessions.size() == 1);
    REQUIRE(r.report.skipped.size() == 1);
    CHECK(r.report.skipped[0].position == 2);
    CHECK(r.report.skipped[0].reason == "duplicate session_id");
}

TEST_CASE("xml reader accepts attribute and element field spellings") {
    const char* xml = R"(<?xml version="1.0"?>
<sessions>
  <session session_id="x1" product="tablet" agent_id="a9" customer_id="c9"
           tz_offset_min="-360" start="2014-05-01T08:00:00Z" end="2014-05-01T08:05:00Z"
           disconnected_by="agent">
    <utterances>
      <utterance who="A" t="2014-05-01T08:00:00Z">hello there</utterance>
      <utterance who="C" t="2014-05-01T08:01:00Z"><text>it broke &amp; died</text></utterance>
    </utterances>
    <survey overall="2"><reason>issue was not resolved</reason></survey>
  </session>
  <session>
    <SESSION_ID>x2</SESSION_ID>
    <START>2014-05-02T09:00:00Z</START>
    <END>2014-05-02T09:09:00Z</END>
    <utterance who="customer" timestamp="2014-05-02T09:00:30Z">hi</utterance>
  </session>
</sessions>)";
    std::istringstream in(xml);
    ParseResult r = parse_sessions(in, CorpusFormat::SessionXml);
    REQUIRE(r.corpus.sessions.size() == 2);
    const Session& s1 = r.corpus.sessions[0];
    CHECK(s1.session_id == "x1");
    CHECK(s1.product_type == "tablet");
    REQUIRE(s1.utterances.size() == 2);
    CHECK(s1.utterances[1].text == "it broke & died");
    REQUIRE(s1.survey.has_value());
    CHECK(s1.survey->overall_satisfaction == Rating::Dissatisfied);
    const Session& s2 = r.corpus.sessions[1];
    CHECK(s2.session_id == "x2");
    CHECK(s2.utterances.size() == 1);
    CHECK(s2.utterances[0].speaker == Speaker::Customer);
}

TEST_CASE("xml reader rejects a non-sessions document outright") {
    std::istringstream in("<data></data>");
    CHECK_THROWS_AS(parse_sessions(in, CorpusFormat::SessionXml), IngestError);
}

TEST_CASE("parse -> serialize -> parse is the identity on well-formed corpora") {
    SynthConfig cfg;
    cfg.n_sessions = 60;
    cfg.seed = 1234;
    Corpus original = synthesize_corpus(cfg);

    std::ostringstream first;
    write_jsonl(original, first);
    std::istringstream back(first.str());
    ParseResult r = parse_sessions(back, CorpusFormat::SessionJsonl);
    CHECK(r.report.skipped.empty());
    REQUIRE(r.corpus.sessions.size() == original.sessions.size());
    for (std::size_t i = 0; i < original.sessions.size(); ++i)
        CHECK(sessions_equal(original.sessions[i], r.corpus.sessions[i]));

    std::ostringstream second;
    write_jsonl(r.corpus, second);
    CHECK(first.str() == second.str());
}

TEST_CASE("corpus_stats hand-checked on two sessions") {
    Corpus c;
    c.sessions.push_back(
        session("a", {utt(Speaker::Agent, 0, "hi")}, 0, 10 * 60000)); // 10 min
    c.sessions.push_back(surveyed(
        session("b", {utt(Speaker::Agent, 0, "hi"), utt(Speaker::Customer, 1000, "yo")}, 0,
                20 * 60000),
        Rating::Satisfied)); // 20 min

    CorpusStats st = corpus_stats(c);
    CHECK(st.n_sessions == 2);
    CHECK(st.duration_mean_min == doctest::Approx(15.0));
    // nearest-rank median of {10, 20} picks the first element
    CHECK(st.duration_median_min == doctest::Approx(10.0));
    CHECK(st.survey_response_rate == doctest::Approx(0.5));
    CHECK(st.rating_histogram[3] == 1);
    CHECK(st.surveyed_sessions() == 1);
}

TEST_CASE("corpus_stats: every-session-surveyed rate is exactly 1") {
    Corpus c;
    for (int i = 0; i < 5; ++i)
        c.sessions.push_back(surveyed(
            session("s" + std::to_string(i), {utt(Speaker::Agent, 0, "hi")}, 0, 60000),
            Rating::Average));
    CHECK(corpus_stats(c).survey_response_rate == 1.0);
}

TEST_CASE("corpus_stats on an empty corpus is the zero value") {
    CorpusStats st = corpus_stats(Corpus{});
    CHECK(st.n_sessions == 0);
    CHECK(st.duration_mean_min == 0.0);
    CHECK(st.survey_response_rate == 0.0);
}

TEST_CASE("nearest-rank percentile") {
    std::vector<double> v = {15.0, 20.0, 35.0, 40.0, 50.0};
    CHECK(percentile_nearest_rank(v, 30.0) == 20.0);
    CHECK(percentile_nearest_rank(v, 40.0) == 20.0);
    CHECK(percentile_nearest_rank(v, 50.0) == 35.0);
    CHECK(percentile_nearest_rank(v, 100.0) == 50.0);
    CHECK(percentile_nearest_rank({7.0}, 50.0) == 7.0);
}
