#pragma once

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "contextqa/tokenizer.hpp"

namespace contextqa {

/// One corpus chunk: a row of the tabular section dataset.
struct DocumentSection {
  std::string id;
  std::string title;
  std::string heading;
  std::string content;
  int token_count = 0;
};

enum class FormattingMode { PreserveBullets, CommaJoined };

/// Ordered, id-unique section table. Immutable after construction and safe
/// to share across threads.
class CorpusTable {
 public:
  CorpusTable() = default;
  CorpusTable(std::vector<DocumentSection> sections, TokenizerSpec tokenizer_spec);

  const std::vector<DocumentSection>& sections() const { return sections_; }
  const TokenizerSpec& tokenizer_spec() const { return tokenizer_spec_; }
  std::size_t size() const { return sections_.size(); }

  // nullptr when the id is unknown.
  const DocumentSection* find(const std::string& id) const;

 private:
  std::vector<DocumentSection> sections_;
  TokenizerSpec tokenizer_spec_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Loads a corpus file. CSV with header `id,title,heading,content,tokens`
/// (RFC-4180 quoting, embedded newlines allowed) by default; a `.jsonl` or
/// `.ndjson` extension selects line-delimited records with the same fields.
/// Stored token counts are advisory: every row is recounted with `tok`.
CorpusTable load_corpus(const std::filesystem::path& path, const Tokenizer& tok);

/// Persistence half of the corpus format; load_corpus(write_corpus(t)) == t.
void write_corpus(const CorpusTable& table, const std::filesystem::path& path);

/// Splits raw text into sections of at most max_tokens, preferring paragraph
/// boundaries, then sentence boundaries, then token boundaries.
std::vector<DocumentSection> chunk_text(const std::string& title, const std::string& heading,
                                        const std::string& raw, int max_tokens,
                                        const Tokenizer& tok);

/// PreserveBullets returns content verbatim. CommaJoined rewrites each run
/// of bullet lines ("- ", "* ", "• " after optional indent) into the item
/// texts joined by ", ", terminated with ".", appended to the preceding
/// non-empty line when there is one.
std::string render_text(const std::string& content, FormattingMode mode);
std::string render_content(const DocumentSection& section, FormattingMode mode);

}  // namespace contextqa
