#include "chatmine/lexicon.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "chatmine/csv.hpp"
#include "chatmine/error.hpp"

namespace chatmine {

namespace {

// Parses "#key=value" pairs from a metadata/header line. Values run to the
// next " #" or end of line.
void parse_meta_line(const std::string& line, LexiconMeta& meta, std::string* section) {
    std::size_t pos = 0;
    while ((pos = line.find('#', pos)) != std::string::npos) {
        std::size_t eq = line.find('=', pos);
        if (eq == std::string::npos) break;
        std::string key = line.substr(pos + 1, eq - pos - 1);
        std::size_t end = line.find(" #", eq);
        std::string value =
            end == std::string::npos ? line.substr(eq + 1) : line.substr(eq + 1, end - eq - 1);
        while (!value.empty() && (value.back() == ' ' || value.back() == '\r')) value.pop_back();
        if (key == "name") meta.name = value;
        else if (key == "version") meta.version = value;
        else if (key == "provenance") meta.provenance = value;
        else if (key == "section" && section) *section = value;
        pos = eq;
    }
}

void check_unique(const SentimentLexicon& lex, const std::string& token, int line_no) {
    int homes = 0;
    homes += lex.entries.count(token) ? 1 : 0;
    homes += lex.negators.count(token) ? 1 : 0;
    homes += lex.boosters.count(token) ? 1 : 0;
    if (homes)
        throw ConfigError("lexicon line " + std::to_string(line_no) + ": token '" + token +
                          "' already defined; a token may appear in only one section, once");
}

} // namespace

SentimentLexicon load_lexicon(std::istream& in) {
    SentimentLexicon lex;
    std::string line;
    std::string section = "entries";
    int line_no = 0;
    bool saw_meta = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            parse_meta_line(line, lex.meta, &section);
            if (!lex.meta.name.empty() && !lex.meta.version.empty()) saw_meta = true;
            continue;
        }
        if (section != "entries" && section != "negators" && section != "boosters")
            throw ConfigError("lexicon line " + std::to_string(line_no) + ": unknown section '" +
                              section + "'");

        auto tab = line.find('\t');
        std::string token = tab == std::string::npos ? line : line.substr(0, tab);
        if (token.empty())
            throw ConfigError("lexicon line " + std::to_string(line_no) + ": empty token");
        check_unique(lex, token, line_no);

        if (section == "negators") {
            lex.negators.insert(token);
            continue;
        }
        if (tab == std::string::npos)
            throw ConfigError("lexicon line " + std::to_string(line_no) +
                              ": expected token<TAB>value");
        double value = 0.0;
        try {
            value = std::stod(line.substr(tab + 1));
        } catch (const std::exception&) {
            throw ConfigError("lexicon line " + std::to_string(line_no) + ": bad numeric value");
        }
        if (!std::isfinite(value))
            throw ConfigError("lexicon line " + std::to_string(line_no) +
                              ": non-finite value for '" + token + "'");
        if (section == "entries") lex.entries[token] = value;
        else lex.boosters[token] = value;
    }
    if (in.bad()) throw IngestError("stream read failure while loading lexicon");
    if (!saw_meta)
        throw ConfigError("lexicon is missing the '#name=<str> #version=<str>' header line");
    return lex;
}

SentimentLexicon load_lexicon_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open lexicon file: " + path);
    return load_lexicon(in);
}

void save_lexicon(const SentimentLexicon& lex, std::ostream& out) {
    out << "#name=" << lex.meta.name << " #version=" << lex.meta.version;
    if (!lex.meta.provenance.empty()) out << " #provenance=" << lex.meta.provenance;
    out << '\n';

    std::vector<std::pair<std::string, double>> entries(lex.entries.begin(), lex.entries.end());
    std::sort(entries.begin(), entries.end());
    out << "#section=entries\n";
    for (const auto& [token, valence] : entries)
        out << token << '\t' << format_double(valence) << '\n';

    std::vector<std::string> negators(lex.negators.begin(), lex.negators.end());
    std::sort(negators.begin(), negators.end());
    out << "#section=negators\n";
    for (const auto& token : negators) out << token << '\n';

    std::vector<std::pair<std::string, double>> boosters(lex.boosters.begin(),
                                                         lex.boosters.end());
    std::sort(boosters.begin(), boosters.end());
    out << "#section=boosters\n";
    for (const auto& [token, delta] : boosters)
        out << token << '\t' << format_double(delta) << '\n';
}

void save_lexicon_file(const SentimentLexicon& lex, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open lexicon output file: " + path);
    save_lexicon(lex, out);
    out.flush();
    if (!out) throw IngestError("write failure: " + path);
}

} // namespace chatmine
