#include "http_client.hpp"

#include "httplib.h"
#include "pgxrag/error.hpp"

namespace pgxrag::detail {
namespace {

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string prefix;  // path component, no trailing slash
};

SplitUrl split_url(std::string_view url) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) {
    fail(ErrorCode::InvalidArgument, "endpoint must include a scheme: " + std::string(url));
  }
  auto path_begin = url.find('/', scheme_end + 3);
  SplitUrl out;
  out.origin = std::string(url.substr(0, path_begin));
  if (path_begin != std::string_view::npos) out.prefix = std::string(url.substr(path_begin));
  while (!out.prefix.empty() && out.prefix.back() == '/') out.prefix.pop_back();
  return out;
}

}  // namespace

std::string post_json(std::string_view base_url, std::string_view path, const std::string& body,
                      std::string_view api_key, int timeout_seconds) {
  auto url = split_url(base_url);
  httplib::Client client(url.origin);
  client.set_connection_timeout(timeout_seconds, 0);
  client.set_read_timeout(timeout_seconds, 0);
  client.set_write_timeout(timeout_seconds, 0);
  httplib::Headers headers;
  if (!api_key.empty()) headers.emplace("Authorization", "Bearer " + std::string(api_key));

  auto res = client.Post(url.prefix + std::string(path), headers, body, "application/json");
  if (!res) {
    fail(ErrorCode::BackendUnavailable,
         "request to " + std::string(base_url) + " failed: " + httplib::to_string(res.error()));
  }
  if (res->status < 200 || res->status >= 300) {
    fail(ErrorCode::BackendUnavailable,
         "request to " + std::string(base_url) + " returned HTTP " + std::to_string(res->status));
  }
  return res->body;
}

}  // namespace pgxrag::detail
