#include "resonance/report_json.hpp"

#include <cmath>
#include <cstdio>

namespace resonance::json {

std::string format_double(double value) {
    if (!std::isfinite(value)) {
        return "null";
    }
    if (value == 0.0) {
        return "0";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

void dump_into(const Json& doc, std::string& out) {
    switch (doc.type()) {
    case Json::value_t::null:
    case Json::value_t::discarded:
        out += "null";
        break;
    case Json::value_t::boolean:
        out += doc.get<bool>() ? "true" : "false";
        break;
    case Json::value_t::number_integer:
        out += std::to_string(doc.get<std::int64_t>());
        break;
    case Json::value_t::number_unsigned:
        out += std::to_string(doc.get<std::uint64_t>());
        break;
    case Json::value_t::number_float:
        out += format_double(doc.get<double>());
        break;
    case Json::value_t::string:
        out += doc.dump();
        break;
    case Json::value_t::array: {
        out += '[';
        bool first = true;
        for (const auto& item : doc) {
            if (!first) out += ',';
            first = false;
            dump_into(item, out);
        }
        out += ']';
        break;
    }
    case Json::value_t::object: {
        out += '{';
        bool first = true;
        for (const auto& [key, item] : doc.items()) {
            if (!first) out += ',';
            first = false;
            out += Json(key).dump();
            out += ':';
            dump_into(item, out);
        }
        out += '}';
        break;
    }
    case Json::value_t::binary:
        out += "null";
        break;
    }
}

Json optional_number(const std::optional<double>& v) {
    return v ? Json(*v) : Json(nullptr);
}

void put_band(Json& doc, const ResonanceReport& report) {
    doc["resonant_frequency"] = optional_number(report.resonant_frequency);
    if (report.band) {
        doc["band_lo"] = report.band->lo;
        doc["band_hi"] = report.band->hi;
    } else {
        doc["band_lo"] = nullptr;
        doc["band_hi"] = nullptr;
    }
}

} // namespace

std::string dump_canonical(const Json& doc) {
    std::string out;
    dump_into(doc, out);
    return out;
}

Json analyze_report(const CtPolePair& p, const ResonanceReport& report) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["domain"] = "ct";
    doc["input"] = {{"sigma", p.sigma0()}, {"omega", p.omega0()}};
    doc["verdict"] = to_string(report.verdict);
    doc["zeta"] = report.damping;
    doc["natural_frequency"] = optional_number(report.natural_frequency);
    doc["quality_factor"] = optional_number(report.quality_factor);
    put_band(doc, report);
    return doc;
}

Json analyze_report(const DtPolePair& p, const ResonanceReport& report) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["domain"] = "dt";
    doc["input"] = {{"a", p.a()}, {"omega0", p.omega_big0()}};
    doc["verdict"] = to_string(report.verdict);
    doc["zeta_z"] = report.damping;
    put_band(doc, report);
    doc["band_case"] = report.band_case ? Json(to_string(*report.band_case)) : Json(nullptr);
    return doc;
}

Json error_body(const std::string& code, const std::string& message) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["error"] = {{"code", code}, {"message", message}};
    return doc;
}

Json error_body(ErrorCode code, const std::string& message) {
    return error_body(std::string(to_string(code)), message);
}

Json points(const std::vector<std::complex<double>>& pts) {
    Json arr = Json::array();
    for (const auto& z : pts) {
        arr.push_back(Json::array({z.real(), z.imag()}));
    }
    return arr;
}

Json oracle_report(const Json& input, std::string_view domain, const OracleResult& result,
                   bool include_samples) {
    const ResponseSamples& s = result.samples;
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["domain"] = domain;
    doc["input"] = input;
    doc["verdict"] = to_string(result.verdict);
    doc["samples"] = s.freqs.size();
    doc["argmax_index"] = s.argmax_index;
    doc["argmax_frequency"] = s.freqs[s.argmax_index];
    doc["peak_frequency"] = s.peak_frequency;
    doc["reference_level"] = s.reference_level;
    doc["reference_index"] = s.reference_index;
    doc["crossings"] = band_crossings(s);
    if (include_samples) {
        doc["freqs"] = s.freqs;
        doc["mags"] = s.mags;
    }
    return doc;
}

Json mapped_curve(const MappedCurve& curve) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["method"] = to_string(curve.method);
    doc["params"] = curve.params;
    doc["points"] = points(curve.points);
    return doc;
}

Json region_comparison(const RegionComparison& cmp) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["method"] = to_string(cmp.method);
    doc["grid"] = {{"radial", cmp.radial}, {"angular", cmp.angular}};
    doc["evaluated"] = cmp.evaluated;
    doc["false_positives"] = cmp.false_positives;
    doc["false_negatives"] = cmp.false_negatives;
    doc["false_positive_rate"] = cmp.false_positive_rate;
    doc["false_negative_rate"] = cmp.false_negative_rate;
    return doc;
}

} // namespace resonance::json
