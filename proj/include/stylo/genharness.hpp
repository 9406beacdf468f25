#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "stylo/common.hpp"

namespace stylo {

class NoCodeBlock : public Error {
 public:
  using Error::Error;
};

/// Network, HTTP status or response-shape failure; retried by batch_generate.
class TransportError : public Error {
 public:
  using Error::Error;
};

/// Every prompt in a batch failed.
class GenerationFailed : public Error {
 public:
  using Error::Error;
};

struct PromptRecord {
  std::string id;
  Category category = Category::ADS;
  std::string preamble;
  std::string prompt;
  std::string output_formatting;
  std::string exporting;

  bool operator==(const PromptRecord&) const = default;
};

inline constexpr std::string_view kManifestHeader = "id,category,preamble,prompt,output_formatting,exporting";

/// CSV with header kManifestHeader. Ids must be usable as a directory name.
std::vector<PromptRecord> parse_manifest(std::string_view text);
std::vector<PromptRecord> read_manifest(const std::filesystem::path& path);
std::string format_manifest(const std::vector<PromptRecord>& records);

/// Non-empty parts in template order, separated by blank lines.
std::string render_prompt(const PromptRecord& record);

/// Interior of the first fence tagged python/py/python3, else of the first
/// fence. An unterminated fence runs to the end of the text.
std::string extract_code(std::string_view response);

/// Chat-completion endpoint. Implementations must be safe to call from
/// several threads at once.
class ChatEndpoint {
 public:
  virtual ~ChatEndpoint() = default;
  /// Returns the assistant message text. Throws TransportError.
  virtual std::string complete(const std::string& request_text) = 0;
};

struct EndpointConfig {
  std::string base_url;  // scheme://host[:port]
  std::string path = "/v1/chat/completions";
  std::string model;
  std::string token_env;  // name of the environment variable holding the bearer token
  double timeout_seconds = 60.0;
  int max_retries = 3;

  /// Throws UsageError.
  void validate() const;
};

/// {model, messages: [{role: "user", content}]}
std::string build_chat_request_body(std::string_view model, std::string_view content);

/// choices[0].message.content. Throws TransportError.
std::string parse_chat_response(std::string_view body);

/// HTTPS client over cpp-httplib. The token is read from the environment on
/// each request and is never included in errors.
std::unique_ptr<ChatEndpoint> make_http_endpoint(const EndpointConfig& config);

enum class Outcome { Written, TransportFailed, NoCodeBlock };

std::string_view to_string(Outcome o);

struct LogEntry {
  std::string id;
  Category category = Category::ADS;
  Outcome outcome = Outcome::TransportFailed;
  int retries = 0;
  std::string path;     // set when written
  std::string message;  // failure detail

  bool operator==(const LogEntry&) const = default;
};

struct GenerationLog {
  std::vector<LogEntry> entries;  // manifest order
  std::size_t count(Outcome o) const;
};

nlohmann::json to_json(const GenerationLog& log);

struct BatchOptions {
  int max_retries = 3;
  std::chrono::milliseconds initial_backoff{500};
  double backoff_factor = 2.0;
  std::size_t concurrency = 4;
  /// Called between attempts; defaults to std::this_thread::sleep_for.
  std::function<void(std::chrono::milliseconds)> sleep;
};

/// Per prompt: render, request, extract, write <root>/<category>/<id>/chatgpt.py.
/// Throws GenerationFailed if the manifest is non-empty and nothing was written.
GenerationLog batch_generate(const std::vector<PromptRecord>& manifest, ChatEndpoint& endpoint,
                             const std::filesystem::path& corpus_root, const BatchOptions& options);

}  // namespace stylo
