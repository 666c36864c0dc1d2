#include "resonance/service.hpp"

#include "resonance/ct_resonance.hpp"
#include "resonance/dt_resonance.hpp"
#include "resonance/report_json.hpp"
#include "resonance/response_oracle.hpp"
#include "resonance/s2z_maps.hpp"

#include <httplib.h>

#include <charconv>
#include <optional>

namespace resonance::service {

namespace {

constexpr std::size_t kDefaultBoundarySamples = 721;
constexpr std::size_t kDefaultResponseSamples = 1001;
constexpr std::size_t kMaxSamples = 10'000'001;

// Raised for request problems that are not library validation errors.
struct RequestError {
    int status;
    std::string code;
    std::string message;
};

HttpResponse ok(const json::Json& doc) {
    return {200, json::dump_canonical(doc), "application/json"};
}

HttpResponse fail(int status, const json::Json& doc) {
    return {status, json::dump_canonical(doc), "application/json"};
}

HttpResponse from_error(const Error& e) {
    return fail(400, json::error_body(e.code(), e.what()));
}

HttpResponse from_request_error(const RequestError& e) {
    return fail(e.status, json::error_body(e.code, e.message));
}

std::optional<std::string> lookup(const QueryParams& q, const std::string& key) {
    const auto it = q.find(key);
    if (it == q.end()) return std::nullopt;
    return it->second;
}

double parse_double(const QueryParams& q, const std::string& key) {
    const auto raw = lookup(q, key);
    if (!raw) {
        throw RequestError{400, "MissingParameter", "missing query parameter '" + key + "'"};
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(raw->data(), raw->data() + raw->size(), value);
    if (ec != std::errc{} || ptr != raw->data() + raw->size()) {
        throw RequestError{400, "InvalidParameter", "'" + key + "' is not a number"};
    }
    return value;
}

std::size_t parse_samples(const QueryParams& q, std::size_t fallback) {
    const auto raw = lookup(q, "samples");
    if (!raw) return fallback;
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(raw->data(), raw->data() + raw->size(), value);
    if (ec != std::errc{} || ptr != raw->data() + raw->size()) {
        throw RequestError{400, "InvalidParameter", "'samples' is not an integer"};
    }
    if (value < 0 || static_cast<unsigned long long>(value) > kMaxSamples) {
        throw Error(ErrorCode::BadSampleCount, "samples out of range");
    }
    return static_cast<std::size_t>(value);
}

double require_number(const json::Json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end() || !it->is_number()) {
        throw RequestError{422, "MalformedRequest", std::string("pole.") + key + " must be a number"};
    }
    return it->get<double>();
}

void require_keys_only(const json::Json& pole, const char* k1, const char* k2) {
    for (const auto& [key, value] : pole.items()) {
        if (key != k1 && key != k2) {
            throw RequestError{422, "MalformedRequest", "unexpected pole field '" + key + "'"};
        }
    }
}

} // namespace

HttpResponse handle_analyze(std::string_view body) {
    try {
        const json::Json req = json::Json::parse(body, nullptr, false);
        if (req.is_discarded() || !req.is_object()) {
            throw RequestError{422, "MalformedRequest", "body must be a JSON object"};
        }
        const auto domain = req.find("domain");
        const auto pole = req.find("pole");
        if (domain == req.end() || !domain->is_string()) {
            throw RequestError{422, "MalformedRequest", "domain must be \"ct\" or \"dt\""};
        }
        if (pole == req.end() || !pole->is_object()) {
            throw RequestError{422, "MalformedRequest", "pole must be an object"};
        }
        Tolerances tol;
        if (const auto options = req.find("options"); options != req.end()) {
            if (!options->is_object()) {
                throw RequestError{422, "MalformedRequest", "options must be an object"};
            }
            if (const auto eps = options->find("classify_eps"); eps != options->end()) {
                if (!eps->is_number()) {
                    throw RequestError{422, "MalformedRequest", "options.classify_eps must be a number"};
                }
                tol.classify_eps = eps->get<double>();
            }
        }

        const std::string d = domain->get<std::string>();
        if (d == "ct") {
            require_keys_only(*pole, "sigma", "omega");
            const CtPolePair p = validate_ct(require_number(*pole, "sigma"), require_number(*pole, "omega"));
            return ok(json::analyze_report(p, analyze_ct(p, tol)));
        }
        if (d == "dt") {
            require_keys_only(*pole, "a", "omega0");
            const DtPolePair p = validate_dt(require_number(*pole, "a"), require_number(*pole, "omega0"));
            return ok(json::analyze_report(p, analyze_dt(p, tol)));
        }
        throw RequestError{422, "MalformedRequest", "domain must be \"ct\" or \"dt\""};
    } catch (const RequestError& e) {
        return from_request_error(e);
    } catch (const Error& e) {
        return from_error(e);
    }
}

HttpResponse handle_boundary(std::string_view domain, const QueryParams& query) {
    try {
        const std::size_t n = parse_samples(query, kDefaultBoundarySamples);
        BoundaryPolyline b;
        if (domain == "s") {
            b = ct_region_boundary(n, 1.0);
        } else if (domain == "z") {
            b = dt_region_boundary(n);
        } else {
            throw RequestError{400, "UnknownDomain", "boundary domain must be 's' or 'z'"};
        }
        json::Json doc;
        doc["schema_version"] = json::kSchemaVersion;
        doc["domain"] = domain;
        doc["samples"] = n;
        doc["points"] = json::points(b.upper);
        doc["conjugate_points"] = json::points(b.lower);
        return ok(doc);
    } catch (const RequestError& e) {
        return from_request_error(e);
    } catch (const Error& e) {
        return from_error(e);
    }
}

HttpResponse handle_mapped_boundary(const QueryParams& query) {
    try {
        const auto name = lookup(query, "method");
        const auto method = name ? parse_mapping_method(*name) : std::nullopt;
        if (!method) {
            throw RequestError{400, "UnknownMethod", "method must be impulse, backward or bilinear"};
        }
        const std::size_t n = parse_samples(query, kDefaultBoundarySamples);
        const double t_max = lookup(query, "t_max") ? parse_double(query, "t_max") : default_t_max(*method);
        return ok(json::mapped_curve(boundary_curve(*method, n, t_max)));
    } catch (const RequestError& e) {
        return from_request_error(e);
    } catch (const Error& e) {
        return from_error(e);
    }
}

HttpResponse handle_response(const QueryParams& query) {
    try {
        const auto domain = lookup(query, "domain");
        const std::size_t n = parse_samples(query, kDefaultResponseSamples);
        if (domain == "ct") {
            const CtPolePair p = validate_ct(parse_double(query, "sigma"), parse_double(query, "omega"));
            const json::Json input = {{"sigma", p.sigma0()}, {"omega", p.omega0()}};
            return ok(json::oracle_report(input, "ct", oracle_ct(p, n), true));
        }
        if (domain == "dt") {
            const DtPolePair p = validate_dt(parse_double(query, "a"), parse_double(query, "omega0"));
            const json::Json input = {{"a", p.a()}, {"omega0", p.omega_big0()}};
            return ok(json::oracle_report(input, "dt", oracle_dt(p, n), true));
        }
        throw RequestError{400, "UnknownDomain", "domain must be 'ct' or 'dt'"};
    } catch (const RequestError& e) {
        return from_request_error(e);
    } catch (const Error& e) {
        return from_error(e);
    }
}

HttpResponse handle_healthz() {
    return {200, "ok", "text/plain"};
}

void mount(httplib::Server& server) {
    const auto reply = [](httplib::Response& res, const HttpResponse& r) {
        res.status = r.status;
        res.set_content(r.body, r.content_type);
    };
    const auto params = [](const httplib::Request& req) {
        QueryParams q;
        for (const auto& [k, v] : req.params) q.emplace(k, v);
        return q;
    };

    server.Post("/analyze", [reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, handle_analyze(req.body));
    });
    server.Get(R"(/boundary/([^/]+))", [reply, params](const httplib::Request& req, httplib::Response& res) {
        reply(res, handle_boundary(req.matches[1].str(), params(req)));
    });
    server.Get("/map-boundary", [reply, params](const httplib::Request& req, httplib::Response& res) {
        reply(res, handle_mapped_boundary(params(req)));
    });
    server.Get("/response", [reply, params](const httplib::Request& req, httplib::Response& res) {
        reply(res, handle_response(params(req)));
    });
    server.Get("/healthz", [reply](const httplib::Request&, httplib::Response& res) {
        reply(res, handle_healthz());
    });
}

} // namespace resonance::service
