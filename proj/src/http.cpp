// HTTP fetching lives in its own translation unit so the rest of the
// library does not pull in the httplib header.

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <string>

#include "weblog/feed.hpp"

namespace weblog::detail {

std::string fetch_url(const std::string& url) {
    auto scheme_end = url.find("://");
    auto host_start = scheme_end + 3;
    auto path_start = url.find('/', host_start);
    std::string origin = path_start == std::string::npos ? url : url.substr(0, path_start);
    std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

    httplib::Client client(origin);
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    auto res = client.Get(path);
    if (!res)
        throw SourceUnavailable("fetch failed for " + url + ": " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw SourceUnavailable("fetch failed for " + url + ": HTTP " +
                                std::to_string(res->status));
    return res->body;
}

}  // namespace weblog::detail
