#include "chatmine/corpus_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "chatmine/error.hpp"

namespace chatmine {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

TimeMs require_time(const std::string& raw, const char* field) {
    auto t = parse_rfc3339(raw);
    if (!t) throw std::runtime_error(std::string(field) + ": invalid RFC 3339 timestamp");
    return *t;
}

Rating rating_from_int(int v, const char* field) {
    if (v < 1 || v > 5) throw std::runtime_error(std::string(field) + ": rating outside 1..5");
    return static_cast<Rating>(v);
}

Session session_from_json(const json& j) {
    if (!j.is_object()) throw std::runtime_error("session is not a JSON object");
    Session s;
    s.session_id = j.at("session_id").get<std::string>();
    s.product_type = j.value("product", "");
    s.agent_id = j.value("agent_id", "");
    s.customer_id = j.value("customer_id", "");
    s.timezone_offset_minutes = j.value("tz_offset_min", 0);
    s.start_time = require_time(j.at("start").get<std::string>(), "start");
    s.end_time = require_time(j.at("end").get<std::string>(), "end");
    {
        const std::string d = j.value("disconnected_by", "unknown");
        auto dc = disconnector_from_string(lower(d));
        if (!dc) throw std::runtime_error("disconnected_by: unknown value '" + d + "'");
        s.disconnected_by = *dc;
    }
    const json& utts = j.at("utterances");
    if (!utts.is_array()) throw std::runtime_error("utterances: not an array");
    for (const json& ju : utts) {
        Utterance u;
        const std::string who = ju.at("who").get<std::string>();
        if (who == "C" || who == "c") u.speaker = Speaker::Customer;
        else if (who == "A" || who == "a") u.speaker = Speaker::Agent;
        else throw std::runtime_error("utterance who: expected \"C\" or \"A\"");
        u.timestamp = require_time(ju.at("t").get<std::string>(), "utterance t");
        u.text = ju.at("text").get<std::string>();
        s.utterances.push_back(std::move(u));
    }
    if (j.contains("survey") && !j.at("survey").is_null()) {
        const json& js = j.at("survey");
        SurveyResult sv;
        sv.overall_satisfaction = rating_from_int(js.at("overall").get<int>(), "survey overall");
        if (js.contains("prefer_chat") && !js.at("prefer_chat").is_null())
            sv.prefer_chat = js.at("prefer_chat").get<bool>();
        if (js.contains("knowledge") && !js.at("knowledge").is_null())
            sv.knowledge_rating =
                rating_from_int(js.at("knowledge").get<int>(), "survey knowledge");
        if (js.contains("reason") && !js.at("reason").is_null())
            sv.dissatisfaction_reason = js.at("reason").get<std::string>();
        s.survey = std::move(sv);
    }
    return s;
}

std::string first_violation_text(const std::vector<Violation>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += "; ";
        out += vs[i].field + ": " + vs[i].rule;
    }
    return out;
}

// Accepts the session if every invariant holds, otherwise records a skip.
// session_id uniqueness is a corpus invariant, so repeats are skips too.
void admit_session(Session&& s, std::size_t position, ParseResult& result,
                   std::unordered_set<std::string>& seen_ids) {
    auto violations = validate_session(s);
    if (!violations.empty()) {
        result.report.skipped.push_back(
            {position, s.session_id, first_violation_text(violations)});
        return;
    }
    if (!seen_ids.insert(s.session_id).second) {
        result.report.skipped.push_back(
            {position, s.session_id, "duplicate session_id"});
        return;
    }
    result.corpus.sessions.push_back(std::move(s));
    ++result.report.sessions_read;
}

ParseResult parse_jsonl(std::istream& in) {
    ParseResult result;
    result.corpus.provenance.kind = Provenance::Kind::Ingested;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            result.report.skipped.push_back({line_no, "", std::string("bad JSON: ") + e.what()});
            continue;
        }
        try {
            admit_session(session_from_json(j), line_no, result, seen_ids);
        } catch (const std::exception& e) {
            std::string id;
            if (j.is_object() && j.contains("session_id") && j["session_id"].is_string())
                id = j["session_id"].get<std::string>();
            result.report.skipped.push_back({line_no, id, e.what()});
        }
    }
    if (in.bad()) throw IngestError("stream read failure while parsing JSONL");
    return result;
}

// --- minimal permissive XML ------------------------------------------------

struct XmlNode {
    std::string name; // lowercased
    std::unordered_map<std::string, std::string> attrs; // lowercased keys
    std::vector<XmlNode> children;
    std::string text;

    const XmlNode* child(const std::string& n) const {
        for (const auto& c : children)
            if (c.name == n) return &c;
        return nullptr;
    }
};

std::string xml_unescape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size();) {
        if (s[i] == '&') {
            auto semi = s.find(';', i);
            if (semi != std::string::npos && semi - i <= 6) {
                const std::string ent = s.substr(i + 1, semi - i - 1);
                if (ent == "amp") { out += '&'; i = semi + 1; continue; }
                if (ent == "lt") { out += '<'; i = semi + 1; continue; }
                if (ent == "gt") { out += '>'; i = semi + 1; continue; }
                if (ent == "quot") { out += '"'; i = semi + 1; continue; }
                if (ent == "apos") { out += '\''; i = semi + 1; continue; }
            }
        }
        out += s[i++];
    }
    return out;
}

class XmlParser {
public:
    explicit XmlParser(std::string text) : s_(std::move(text)) {}

    XmlNode parse_document() {
        skip_prolog();
        XmlNode root = parse_element();
        skip_ws();
        return root;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void skip_prolog() {
        skip_ws();
        while (pos_ + 1 < s_.size() && s_[pos_] == '<' &&
               (s_[pos_ + 1] == '?' || s_[pos_ + 1] == '!')) {
            auto close = s_.find('>', pos_);
            if (close == std::string::npos) fail("unterminated prolog");
            pos_ = close + 1;
            skip_ws();
        }
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw IngestError("XML parse error at offset " + std::to_string(pos_) + ": " + why);
    }

    std::string read_name() {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                s_[pos_] == '-' || s_[pos_] == ':'))
            ++pos_;
        if (pos_ == start) fail("expected a name");
        return lower(s_.substr(start, pos_ - start));
    }

    XmlNode parse_element() {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != '<') fail("expected '<'");
        ++pos_;
        XmlNode node;
        node.name = read_name();
        for (;;) {
            skip_ws();
            if (pos_ >= s_.size()) fail("unterminated tag");
            if (s_[pos_] == '/') {
                if (pos_ + 1 >= s_.size() || s_[pos_ + 1] != '>') fail("malformed self-close");
                pos_ += 2;
                return node;
            }
            if (s_[pos_] == '>') {
                ++pos_;
                break;
            }
            std::string key = read_name();
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] != '=') fail("expected '=' in attribute");
            ++pos_;
            skip_ws();
            if (pos_ >= s_.size() || (s_[pos_] != '"' && s_[pos_] != '\''))
                fail("expected quoted attribute value");
            const char quote = s_[pos_++];
            auto end = s_.find(quote, pos_);
            if (end == std::string::npos) fail("unterminated attribute value");
            node.attrs[key] = xml_unescape(s_.substr(pos_, end - pos_));
            pos_ = end + 1;
        }
        // content
        for (;;) {
            if (pos_ >= s_.size()) fail("unterminated element <" + node.name + ">");
            if (s_[pos_] == '<') {
                if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '/') {
                    pos_ += 2;
                    std::string closing = read_name();
                    if (closing != node.name)
                        fail("mismatched closing tag </" + closing + ">");
                    skip_ws();
                    if (pos_ >= s_.size() || s_[pos_] != '>') fail("malformed closing tag");
                    ++pos_;
                    return node;
                }
                if (pos_ + 3 < s_.size() && s_.compare(pos_, 4, "<!--") == 0) {
                    auto end = s_.find("-->", pos_);
                    if (end == std::string::npos) fail("unterminated comment");
                    pos_ = end + 3;
                    continue;
                }
                node.children.push_back(parse_element());
            } else {
                auto next = s_.find('<', pos_);
                if (next == std::string::npos) fail("unterminated element content");
                node.text += xml_unescape(s_.substr(pos_, next - pos_));
                pos_ = next;
            }
        }
    }

    std::string s_;
    std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Field lookup: attribute first, then child element text. Case-insensitive.
std::optional<std::string> xml_field(const XmlNode& n, std::initializer_list<const char*> names) {
    for (const char* name : names) {
        auto it = n.attrs.find(name);
        if (it != n.attrs.end()) return it->second;
        if (const XmlNode* c = n.child(name)) return trim(c->text);
    }
    return std::nullopt;
}

Session session_from_xml(const XmlNode& n) {
    Session s;
    if (auto v = xml_field(n, {"session_id", "id"})) s.session_id = *v;
    else throw std::runtime_error("session_id: missing");
    if (auto v = xml_field(n, {"product", "product_type"})) s.product_type = *v;
    if (auto v = xml_field(n, {"agent_id"})) s.agent_id = *v;
    if (auto v = xml_field(n, {"customer_id"})) s.customer_id = *v;
    if (auto v = xml_field(n, {"tz_offset_min", "timezone_offset_minutes"}))
        s.timezone_offset_minutes = std::stoi(*v);
    if (auto v = xml_field(n, {"start", "start_time"}))
        s.start_time = require_time(*v, "start");
    else throw std::runtime_error("start: missing");
    if (auto v = xml_field(n, {"end", "end_time"})) s.end_time = require_time(*v, "end");
    else throw std::runtime_error("end: missing");
    if (auto v = xml_field(n, {"disconnected_by"})) {
        auto dc = disconnector_from_string(lower(*v));
        if (!dc) throw std::runtime_error("disconnected_by: unknown value '" + *v + "'");
        s.disconnected_by = *dc;
    }

    const XmlNode* utts = n.child("utterances");
    auto parse_utterance = [&](const XmlNode& cu) {
        Utterance u;
        auto who = xml_field(cu, {"who", "speaker"});
        if (!who) throw std::runtime_error("utterance who: missing");
        const std::string w = lower(*who);
        if (w == "c" || w == "customer") u.speaker = Speaker::Customer;
        else if (w == "a" || w == "agent") u.speaker = Speaker::Agent;
        else throw std::runtime_error("utterance who: unknown value '" + *who + "'");
        auto t = xml_field(cu, {"t", "timestamp"});
        if (!t) throw std::runtime_error("utterance t: missing");
        u.timestamp = require_time(*t, "utterance t");
        if (auto tx = cu.attrs.find("text"); tx != cu.attrs.end()) u.text = tx->second;
        else if (const XmlNode* tc = cu.child("text")) u.text = trim(tc->text);
        else u.text = trim(cu.text);
        s.utterances.push_back(std::move(u));
    };
    if (utts) {
        for (const XmlNode& cu : utts->children)
            if (cu.name == "utterance") parse_utterance(cu);
    } else {
        for (const XmlNode& cu : n.children)
            if (cu.name == "utterance") parse_utterance(cu);
    }

    if (const XmlNode* sv = n.child("survey")) {
        SurveyResult r;
        auto overall = xml_field(*sv, {"overall", "overall_satisfaction"});
        if (!overall) throw std::runtime_error("survey overall: missing");
        r.overall_satisfaction = rating_from_int(std::stoi(*overall), "survey overall");
        if (auto v = xml_field(*sv, {"prefer_chat"}))
            r.prefer_chat = (lower(*v) == "true" || *v == "1");
        if (auto v = xml_field(*sv, {"knowledge", "knowledge_rating"}))
            r.knowledge_rating = rating_from_int(std::stoi(*v), "survey knowledge");
        if (auto v = xml_field(*sv, {"reason", "dissatisfaction_reason"}))
            r.dissatisfaction_reason = *v;
        s.survey = std::move(r);
    }
    return s;
}

ParseResult parse_xml(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IngestError("stream read failure while parsing XML");
    XmlParser parser(buf.str());
    XmlNode root = parser.parse_document();
    if (root.name != "sessions")
        throw IngestError("XML root element must be <sessions>, got <" + root.name + ">");

    ParseResult result;
    result.corpus.provenance.kind = Provenance::Kind::Ingested;
    std::unordered_set<std::string> seen_ids;
    std::size_t index = 0;
    for (const XmlNode& child : root.children) {
        if (child.name != "session") continue;
        ++index;
        try {
            admit_session(session_from_xml(child), index, result, seen_ids);
        } catch (const std::exception& e) {
            auto id = xml_field(child, {"session_id", "id"});
            result.report.skipped.push_back({index, id ? *id : "", e.what()});
        }
    }
    return result;
}

} // namespace

ParseResult parse_sessions(std::istream& in, CorpusFormat format) {
    return format == CorpusFormat::SessionJsonl ? parse_jsonl(in) : parse_xml(in);
}

ParseResult parse_sessions_file(const std::string& path, CorpusFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestError("cannot open corpus file: " + path);
    return parse_sessions(in, format);
}

CorpusFormat infer_format(const std::string& path) {
    auto dot = path.rfind('.');
    if (dot != std::string::npos && lower(path.substr(dot)) == ".xml")
        return CorpusFormat::SessionXml;
    return CorpusFormat::SessionJsonl;
}

std::string session_to_jsonl(const Session& s) {
    ordered_json j;
    j["session_id"] = s.session_id;
    j["product"] = s.product_type;
    j["agent_id"] = s.agent_id;
    j["customer_id"] = s.customer_id;
    j["tz_offset_min"] = s.timezone_offset_minutes;
    j["start"] = format_rfc3339(s.start_time);
    j["end"] = format_rfc3339(s.end_time);
    j["disconnected_by"] = to_string(s.disconnected_by);
    ordered_json utts = ordered_json::array();
    for (const Utterance& u : s.utterances) {
        ordered_json ju;
        ju["who"] = u.speaker == Speaker::Customer ? "C" : "A";
        ju["t"] = format_rfc3339(u.timestamp);
        ju["text"] = u.text;
        utts.push_back(std::move(ju));
    }
    j["utterances"] = std::move(utts);
    if (s.survey) {
        ordered_json js;
        js["overall"] = static_cast<int>(s.survey->overall_satisfaction);
        js["prefer_chat"] =
            s.survey->prefer_chat ? ordered_json(*s.survey->prefer_chat) : ordered_json(nullptr);
        js["knowledge"] = s.survey->knowledge_rating
                              ? ordered_json(static_cast<int>(*s.survey->knowledge_rating))
                              : ordered_json(nullptr);
        js["reason"] = s.survey->dissatisfaction_reason
                           ? ordered_json(*s.survey->dissatisfaction_reason)
                           : ordered_json(nullptr);
        j["survey"] = std::move(js);
    } else {
        j["survey"] = nullptr;
    }
    return j.dump();
}

void write_jsonl(const Corpus& c, std::ostream& out) {
    for (const Session& s : c.sessions) out << session_to_jsonl(s) << '\n';
}

void write_jsonl_file(const Corpus& c, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IngestError("cannot open output file: " + path);
    write_jsonl(c, out);
    out.flush();
    if (!out) throw IngestError("write failure: " + path);
}

} // namespace chatmine
