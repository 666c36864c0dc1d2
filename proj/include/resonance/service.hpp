#pragma once

// Stateless HTTP facade. The handlers are plain functions of the request so
// they can be exercised without a socket; mount() wires them into a server.

#include <map>
#include <string>
#include <string_view>

namespace httplib {
class Server;
}

namespace resonance::service {

struct HttpResponse {
    int status = 200;
    std::string body;
    std::string content_type = "application/json";
};

using QueryParams = std::map<std::string, std::string>;

/// POST /analyze. 400 for invalid poles, 422 for malformed bodies.
HttpResponse handle_analyze(std::string_view body);

/// GET /boundary/{s|z}?samples=N (default 721).
HttpResponse handle_boundary(std::string_view domain, const QueryParams& query);

/// GET /map-boundary?method=impulse|backward|bilinear&samples=N[&t_max=X]
HttpResponse handle_mapped_boundary(const QueryParams& query);

/// GET /response?domain=ct&sigma=&omega= | domain=dt&a=&omega0=, samples=N (default 1001)
HttpResponse handle_response(const QueryParams& query);

HttpResponse handle_healthz();

void mount(httplib::Server& server);

} // namespace resonance::service
