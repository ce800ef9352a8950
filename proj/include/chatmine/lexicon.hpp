#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace chatmine {

struct LexiconMeta {
    std::string name;
    std::string version;
    std::string provenance; // empty for hand-built lexicons
};

// Token -> valence map plus modifier rules. A token may appear in at most one
// of entries / negators / boosters; loading enforces this.
struct SentimentLexicon {
    std::unordered_map<std::string, double> entries;  // token -> base valence
    std::unordered_set<std::string> negators;
    std::unordered_map<std::string, double> boosters; // token -> additive delta
    LexiconMeta meta;
};

// File format: UTF-8 TSV. First line must carry metadata:
//   #name=<str> #version=<str> [#provenance=<str>]
// Sections are introduced by "#section=entries|negators|boosters"; lines
// before any marker belong to entries. Entries and boosters are
// token<TAB>value, negators one token per line.
SentimentLexicon load_lexicon(std::istream& in);
SentimentLexicon load_lexicon_file(const std::string& path);

// Deterministic output: sections in fixed order, tokens sorted.
void save_lexicon(const SentimentLexicon& lex, std::ostream& out);
void save_lexicon_file(const SentimentLexicon& lex, const std::string& path);

} // namespace chatmine
