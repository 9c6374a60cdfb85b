#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace contextqa {

enum class TokenizerKind { ApproximateWords, BpeVocab };

struct TokenizerSpec {
  TokenizerKind kind = TokenizerKind::ApproximateWords;
  std::string vocab_path;  // required iff kind == BpeVocab
  std::string name = "approximate-words";
};

/// Token counting and token-boundary truncation behind one abstraction.
///
/// ApproximateWords counts maximal whitespace-delimited runs, which keeps
/// desk-scale tests dependency-free. BpeVocab loads a rank table (one
/// base64-encoded token and integer rank per line) and counts tokens by
/// greedy byte-pair merging: the adjacent pair whose concatenation has the
/// lowest rank merges first, ties broken leftmost.
class Tokenizer {
 public:
  static Tokenizer make(const TokenizerSpec& spec);

  int count(std::string_view text) const;

  // Longest prefix of `text` ending on a token boundary whose count <= limit.
  std::string truncate(std::string_view text, int limit) const;

  // Byte offsets one past the end of each token, in order.
  std::vector<std::size_t> token_boundaries(std::string_view text) const;

  const TokenizerSpec& spec() const { return spec_; }

 private:
  explicit Tokenizer(TokenizerSpec spec) : spec_(std::move(spec)) {}

  void load_vocab(const std::string& path);
  std::vector<std::size_t> bpe_boundaries(std::string_view text) const;
  static std::vector<std::size_t> word_boundaries(std::string_view text);

  TokenizerSpec spec_;
  std::unordered_map<std::string, int> ranks_;
};

// Spec-shaped conveniences. These construct a tokenizer per call; hold a
// Tokenizer instance instead when counting in a loop over a bpe vocab.
int count_tokens(std::string_view text, const TokenizerSpec& spec);
std::string truncate_to_tokens(std::string_view text, int limit, const TokenizerSpec& spec);

}  // namespace contextqa
