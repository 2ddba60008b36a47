#pragma once

// JSON interchange: MatrixFile ({"n", "entries": [[[re, im], ...], ...]})
// and ReportFile envelopes ({"schema": 1, "tool", "version", "kind", ...}).

#include <string>
#include <string_view>

#include <json.hpp>

#include "svineq/fuzzer.hpp"
#include "svineq/inequalities.hpp"
#include "svineq/matrix.hpp"

namespace svineq {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kToolName = "svineq";
inline constexpr std::string_view kToolVersion = "1.0.0";

Json matrix_to_json(const ComplexMatrix& m);
// Throws MalformedInput on a missing/ragged/non-numeric field or n > 64.
ComplexMatrix matrix_from_json(const Json& j);
ComplexMatrix read_matrix_file(const std::string& path);

Json tolerance_to_json(const Tolerance& tol);
Tolerance tolerance_from_json(const Json& j);

Json report_to_json(const InequalityReport& r);
InequalityReport report_from_json(const Json& j);

Json witness_to_json(const Witness& w);
Witness witness_from_json(const Json& j);

Json config_to_json(const CampaignConfig& c);
CampaignConfig config_from_json(const Json& j);

Json campaign_to_json(const CampaignResult& r);
CampaignResult campaign_from_json(const Json& j);

// Wraps a payload with the schema/tool/version header and a config echo.
Json make_report_file(std::string_view kind, Json config, Json payload);
// Checks the header and returns the envelope; throws MalformedInput.
const Json& check_report_file(const Json& file, std::string_view kind);

// Stable text form: 2-space indent, sorted keys, trailing newline.
std::string dump(const Json& j);

}  // namespace svineq
