#pragma once

#include <filesystem>
#include <string>

#include "contextqa/embedding.hpp"  // RetryPolicy

namespace contextqa {

/// JSON-over-HTTP POST client shared by the embedding and completion
/// backends: bearer-token auth from an environment variable, exponential
/// jittered backoff on transport errors and 429/5xx statuses, and an
/// optional recorded-fixture mode that replays (or captures) responses
/// keyed by the FNV-1a hash of the request body.
class HttpJsonClient {
 public:
  HttpJsonClient(std::string endpoint_url, std::string api_key_env, RetryPolicy retry,
                 std::filesystem::path fixture_dir = {}, bool record_fixtures = false);

  // Returns the response body. Throws BackendError (with attempt count) on
  // transport failure or non-retryable HTTP errors, ConfigError when the
  // key variable is unset, and BackendError on a fixture miss.
  std::string post_json(const std::string& body) const;

  const std::string& endpoint_url() const { return endpoint_url_; }

 private:
  std::string live_post(const std::string& body) const;

  std::string endpoint_url_;
  std::string api_key_env_;
  RetryPolicy retry_;
  std::filesystem::path fixture_dir_;
  bool record_fixtures_ = false;
};

}  // namespace contextqa
