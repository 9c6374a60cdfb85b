#include "contextqa/tokenizer.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <queue>
#include <tuple>

#include "contextqa/errors.hpp"

namespace contextqa {

namespace {

std::optional<std::string> base64_decode(std::string_view input) {
  static constexpr signed char kInvalid = -1;
  auto value_of = [](char c) -> signed char {
    if (c >= 'A' && c <= 'Z') return static_cast<signed char>(c - 'A');
    if (c >= 'a' && c <= 'z') return static_cast<signed char>(c - 'a' + 26);
    if (c >= '0' && c <= '9') return static_cast<signed char>(c - '0' + 52);
    if (c == '+') return 62;
    if (c == '/') return 63;
    return kInvalid;
  };

  std::string out;
  out.reserve(input.size() * 3 / 4);
  unsigned int buffer = 0;
  int bits = 0;
  for (char c : input) {
    if (c == '=') break;
    signed char v = value_of(c);
    if (v == kInvalid) return std::nullopt;
    buffer = (buffer << 6) | static_cast<unsigned int>(v);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(static_cast<char>((buffer >> bits) & 0xff));
    }
  }
  return out;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

Tokenizer Tokenizer::make(const TokenizerSpec& spec) {
  Tokenizer tok(spec);
  if (spec.kind == TokenizerKind::BpeVocab) {
    if (spec.vocab_path.empty()) {
      throw ConfigError("bpe-vocab tokenizer requires a vocab_path");
    }
    tok.load_vocab(spec.vocab_path);
  }
  return tok;
}

void Tokenizer::load_vocab(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open vocabulary file: " + path);
  }
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto sep = line.find(' ');
    if (sep == std::string::npos || sep == 0 || sep + 1 >= line.size()) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": expected '<base64> <rank>'");
    }
    auto token = base64_decode(std::string_view(line).substr(0, sep));
    if (!token || token->empty()) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": invalid base64 token");
    }
    int rank = 0;
    try {
      rank = std::stoi(line.substr(sep + 1));
    } catch (const std::exception&) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": invalid rank");
    }
    if (!ranks_.emplace(std::move(*token), rank).second) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": duplicate token");
    }
  }
  if (ranks_.empty()) {
    throw ConfigError(path + ": empty vocabulary");
  }
}

std::vector<std::size_t> Tokenizer::word_boundaries(std::string_view text) {
  std::vector<std::size_t> ends;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i >= text.size()) break;
    while (i < text.size() && !is_space(text[i])) ++i;
    ends.push_back(i);
  }
  return ends;
}

std::vector<std::size_t> Tokenizer::bpe_boundaries(std::string_view text) const {
  const std::size_t n = text.size();
  if (n == 0) return {};

  struct Part {
    std::size_t start;
    std::size_t len;
    int prev;
    int next;
    bool alive;
  };
  std::vector<Part> parts;
  parts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    parts.push_back({i, 1, static_cast<int>(i) - 1,
                     i + 1 < n ? static_cast<int>(i) + 1 : -1, true});
  }

  auto rank_of = [&](int left) -> std::optional<int> {
    int right = parts[static_cast<std::size_t>(left)].next;
    if (right < 0) return std::nullopt;
    const Part& l = parts[static_cast<std::size_t>(left)];
    const Part& r = parts[static_cast<std::size_t>(right)];
    auto it = ranks_.find(std::string(text.substr(l.start, l.len + r.len)));
    if (it == ranks_.end()) return std::nullopt;
    return it->second;
  };

  // (rank, left part, left/right length snapshots). Snapshots invalidate
  // stale entries after a merge; parts cover contiguous bytes, so matching
  // lengths imply the snapshotted pair is still current.
  using Entry = std::tuple<int, int, std::size_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;

  auto push_pair = [&](int left) {
    if (left < 0 || !parts[static_cast<std::size_t>(left)].alive) return;
    int right = parts[static_cast<std::size_t>(left)].next;
    if (right < 0) return;
    if (auto rank = rank_of(left)) {
      heap.emplace(*rank, left, parts[static_cast<std::size_t>(left)].len,
                   parts[static_cast<std::size_t>(right)].len);
    }
  };

  for (std::size_t i = 0; i + 1 < n; ++i) push_pair(static_cast<int>(i));

  while (!heap.empty()) {
    auto [rank, left, llen, rlen] = heap.top();
    heap.pop();
    Part& l = parts[static_cast<std::size_t>(left)];
    if (!l.alive || l.len != llen || l.next < 0) continue;
    Part& r = parts[static_cast<std::size_t>(l.next)];
    if (r.len != rlen) continue;

    l.len += r.len;
    r.alive = false;
    l.next = r.next;
    if (l.next >= 0) parts[static_cast<std::size_t>(l.next)].prev = left;

    push_pair(l.prev);
    push_pair(left);
  }

  std::vector<std::size_t> ends;
  for (int i = 0; i >= 0; i = parts[static_cast<std::size_t>(i)].next) {
    const Part& p = parts[static_cast<std::size_t>(i)];
    ends.push_back(p.start + p.len);
  }
  return ends;
}

std::vector<std::size_t> Tokenizer::token_boundaries(std::string_view text) const {
  if (spec_.kind == TokenizerKind::BpeVocab) return bpe_boundaries(text);
  return word_boundaries(text);
}

int Tokenizer::count(std::string_view text) const {
  if (spec_.kind == TokenizerKind::BpeVocab) {
    return static_cast<int>(bpe_boundaries(text).size());
  }
  int count = 0;
  bool in_token = false;
  for (char c : text) {
    if (is_space(c)) {
      in_token = false;
    } else if (!in_token) {
      in_token = true;
      ++count;
    }
  }
  return count;
}

std::string Tokenizer::truncate(std::string_view text, int limit) const {
  if (limit <= 0) return {};
  auto ends = token_boundaries(text);
  if (ends.size() <= static_cast<std::size_t>(limit)) return std::string(text);
  return std::string(text.substr(0, ends[static_cast<std::size_t>(limit) - 1]));
}

int count_tokens(std::string_view text, const TokenizerSpec& spec) {
  return Tokenizer::make(spec).count(text);
}

std::string truncate_to_tokens(std::string_view text, int limit, const TokenizerSpec& spec) {
  return Tokenizer::make(spec).truncate(text, limit);
}

}  // namespace contextqa
