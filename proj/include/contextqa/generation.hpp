#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "contextqa/embedding.hpp"  // RetryPolicy

namespace contextqa {

struct CompletionRequest {
  std::string prompt;
  std::string model_name = "text-davinci-003";
  double temperature = 0.0;
  int max_completion_tokens = 64;
  std::vector<std::string> stop_sequences;

  void validate() const;  // throws InputError
};

enum class CompletionBackendKind { Remote, Scripted };

struct CompletionBackendConfig {
  CompletionBackendKind kind = CompletionBackendKind::Scripted;
  std::string endpoint_url;  // remote
  std::string api_key_env;   // remote
  // Scripted: fixture file mapping keys (question ids or prompt hashes) to
  // canned responses; may also be a directory resolved per condition.
  std::filesystem::path script_path;
  RetryPolicy retry;
  int max_in_flight = 2;

  static CompletionBackendConfig scripted(std::filesystem::path script_path);
  static CompletionBackendConfig remote(std::string endpoint_url, std::string api_key_env);

  void validate() const;
};

struct CompletionResult {
  std::string text;
  std::string finish_reason;
};

/// Deterministic JSON request body: {"model", "prompt", "temperature",
/// "max_tokens", "stop"} — a pure function of the request.
std::string completion_request_body(const CompletionRequest& req);

/// Line-delimited {key, response_text} fixture replaying transcribed model
/// outputs. Lookups miss loudly with the absent key named.
class ScriptedCompletions {
 public:
  static ScriptedCompletions load(const std::filesystem::path& path);

  std::optional<std::string> find(const std::string& key) const;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::unordered_map<std::string, std::string> responses_;
};

/// Scripted backends resolve by `key_hint` (the question id) when provided,
/// else by prompt hash. Response text is returned verbatim apart from
/// trailing-whitespace removal.
CompletionResult complete(const CompletionRequest& req, const CompletionBackendConfig& cfg,
                          const std::string& key_hint = "");

/// Key used for scripted lookups when no question id is available.
std::string prompt_fixture_key(const std::string& prompt);

}  // namespace contextqa
