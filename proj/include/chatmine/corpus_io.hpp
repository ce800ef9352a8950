#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chatmine/corpus.hpp"

namespace chatmine {

enum class CorpusFormat { SessionJsonl, SessionXml };

struct ParseSkip {
    std::size_t position = 0; // 1-based line (JSONL) or <session> element index (XML)
    std::string session_id;   // empty when the id itself was unreadable
    std::string reason;
};

struct ParseReport {
    std::size_t sessions_read = 0;
    std::vector<ParseSkip> skipped;
};

struct ParseResult {
    Corpus corpus;
    ParseReport report;
};

// Reads all well-formed sessions; malformed ones are skipped and recorded in
// the report. Throws IngestError only when the stream itself is unreadable
// or the document is not in the declared format at all.
ParseResult parse_sessions(std::istream& in, CorpusFormat format);
ParseResult parse_sessions_file(const std::string& path, CorpusFormat format);

// .xml => SessionXml, anything else => SessionJsonl.
CorpusFormat infer_format(const std::string& path);

// Canonical JSONL: one session object per line, keys in schema order.
std::string session_to_jsonl(const Session& s);
void write_jsonl(const Corpus& c, std::ostream& out);
void write_jsonl_file(const Corpus& c, const std::string& path);

} // namespace chatmine
