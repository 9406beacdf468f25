#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <cstdlib>

#include "stylo/genharness.hpp"

namespace stylo {

namespace {

class HttpChatEndpoint : public ChatEndpoint {
 public:
  explicit HttpChatEndpoint(EndpointConfig config) : config_(std::move(config)) { config_.validate(); }

  std::string complete(const std::string& request_text) override {
    const char* token = std::getenv(config_.token_env.c_str());
    if (token == nullptr || *token == '\0') {
      throw UsageError("environment variable " + config_.token_env + " is not set");
    }
    httplib::Client client(config_.base_url);
    const auto secs = static_cast<time_t>(config_.timeout_seconds);
    const auto usecs = static_cast<time_t>((config_.timeout_seconds - static_cast<double>(secs)) * 1e6);
    client.set_connection_timeout(secs, usecs);
    client.set_read_timeout(secs, usecs);
    client.set_write_timeout(secs, usecs);
    const httplib::Headers headers = {{"Authorization", std::string("Bearer ") + token}};
    const auto res =
        client.Post(config_.path, headers, build_chat_request_body(config_.model, request_text), "application/json");
    if (!res) throw TransportError("request failed: " + httplib::to_string(res.error()));
    if (res->status < 200 || res->status >= 300) {
      throw TransportError("endpoint returned HTTP " + std::to_string(res->status));
    }
    return parse_chat_response(res->body);
  }

 private:
  EndpointConfig config_;
};

}  // namespace

std::unique_ptr<ChatEndpoint> make_http_endpoint(const EndpointConfig& config) {
  return std::make_unique<HttpChatEndpoint>(config);
}

}  // namespace stylo
