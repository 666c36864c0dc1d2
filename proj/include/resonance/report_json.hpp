#pragma once

// JSON documents shared by the CLI and the HTTP service. Everything goes
// through dump_canonical() so identical inputs give byte-identical output.

#include "resonance/core.hpp"
#include "resonance/response_oracle.hpp"
#include "resonance/s2z_maps.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace resonance::json {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Compact serialization with insertion-ordered keys and every floating
/// value printed with 17 significant digits (-0 prints as 0, non-finite as null).
std::string dump_canonical(const Json& doc);

/// "%.17g" rendering, also used for CSV cells.
std::string format_double(double value);

Json analyze_report(const CtPolePair& p, const ResonanceReport& report);
Json analyze_report(const DtPolePair& p, const ResonanceReport& report);

Json error_body(ErrorCode code, const std::string& message);
Json error_body(const std::string& code, const std::string& message);

Json points(const std::vector<std::complex<double>>& pts);

Json oracle_report(const Json& input, std::string_view domain, const OracleResult& result,
                   bool include_samples);

Json mapped_curve(const MappedCurve& curve);

Json region_comparison(const RegionComparison& cmp);

} // namespace resonance::json
