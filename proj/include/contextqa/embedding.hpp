#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "contextqa/tokenizer.hpp"

namespace contextqa {

using EmbeddingVector = std::vector<float>;

struct RetryPolicy {
  int max_attempts = 5;
  std::chrono::milliseconds initial_backoff{1000};
  double multiplier = 2.0;
  bool jitter = true;
};

enum class EmbeddingBackendKind { Remote, LocalHash };

struct EmbeddingBackendConfig {
  EmbeddingBackendKind kind = EmbeddingBackendKind::LocalHash;
  std::string model_name = "text-embedding-ada-002";
  std::string endpoint_url;  // remote only, full URL including path
  std::string api_key_env;   // name of the environment variable holding the key
  int dim = 256;
  int max_input_tokens = 8191;
  bool normalize = true;
  RetryPolicy retry;
  int max_in_flight = 4;
  int request_batch_size = 16;
  // Recorded-fixture mode: replay responses from this directory, keyed by
  // request-body hash. With record_fixtures, live responses are captured.
  std::filesystem::path fixture_dir;
  bool record_fixtures = false;

  static EmbeddingBackendConfig local(int dim = 256);
  static EmbeddingBackendConfig remote(std::string endpoint_url, std::string api_key_env,
                                       int dim = 1536);

  void validate() const;  // throws ConfigError
};

/// Deterministic offline embedding: the lowercase token bag is hashed with
/// FNV-1a; each token adds +1 or -1 (sign from a second hash) at index
/// hash(token) mod dim, and the result is L2-normalized.
EmbeddingVector local_hash_embed(std::string_view text, int dim, const Tokenizer& tok);

EmbeddingVector embed_text(const std::string& text, const EmbeddingBackendConfig& cfg,
                           const Tokenizer& tok);

/// Order-preserving bulk embedding; element i equals embed_text(texts[i]).
/// A failure aborts the batch with the failing index in the message.
std::vector<EmbeddingVector> embed_batch(const std::vector<std::string>& texts,
                                         const EmbeddingBackendConfig& cfg, const Tokenizer& tok);

double l2_norm(const EmbeddingVector& v);

}  // namespace contextqa
