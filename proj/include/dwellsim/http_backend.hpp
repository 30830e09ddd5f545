#pragma once

// Out-of-line definitions for HttpBackend. Include this header (not just
// backend.hpp) in translation units that construct an HttpBackend; it pulls
// in the bundled single-header HTTP client, which is heavy to compile.

#include <string>

#include <httplib.h>

#include "dwellsim/backend.hpp"
#include "dwellsim/error.hpp"

namespace dwellsim {

inline HttpBackend::HttpBackend(std::string url, std::string token)
    : token_(std::move(token)) {
    if (url.empty()) {
        throw ConfigError("HttpBackend needs a URL (set DWELLSIM_BACKEND_URL)");
    }
    auto scheme_end = url.find("://");
    std::size_t host_start = scheme_end == std::string::npos ? 0 : scheme_end + 3;
    auto path_start = url.find('/', host_start);
    if (path_start == std::string::npos) {
        base_ = url;
        path_ = "/";
    } else {
        base_ = url.substr(0, path_start);
        path_ = url.substr(path_start);
    }
}

inline std::string HttpBackend::complete(const std::string& prompt) {
    httplib::Client client(base_);
    client.set_connection_timeout(10, 0);
    client.set_read_timeout(60, 0);
    httplib::Headers headers;
    if (!token_.empty()) {
        headers.emplace("Authorization", "Bearer " + token_);
    }
    auto res = client.Post(path_, headers, prompt, "text/plain");
    if (!res) {
        throw BackendError("backend transport error: " + httplib::to_string(res.error()));
    }
    if (res->status < 200 || res->status >= 300) {
        throw BackendError("backend returned HTTP " + std::to_string(res->status));
    }
    return res->body;
}

}  // namespace dwellsim
