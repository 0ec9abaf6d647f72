#pragma once

#include <string>
#include <string_view>

namespace pgxrag::detail {

// POSTs a JSON body to `base_url` + `path` and returns the response body.
// Transport failures and non-2xx statuses raise BackendUnavailable.
std::string post_json(std::string_view base_url, std::string_view path, const std::string& body,
                      std::string_view api_key, int timeout_seconds);

}  // namespace pgxrag::detail
