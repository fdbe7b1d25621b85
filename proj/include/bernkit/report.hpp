#pragma once

// Serialization of reports as JSON, CSV or plain text.

#include "bernkit/float_check.hpp"
#include "bernkit/identities.hpp"

#include "json.hpp"

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bernkit {

enum class Format { Json, Csv, Plain };

/// "json", "csv" or "plain"; UnknownName otherwise.
Format parse_format(std::string_view text);

nlohmann::json to_json(const IdentityReport &r);
nlohmann::json to_json(const QuadResult &r);
nlohmann::json to_json(const FloatFamilyReport &r);

/// Inverse of to_json for identity reports (exact fields only).
IdentityReport identity_report_from_json(const nlohmann::json &j);

void write_reports(std::ostream &out, const std::vector<IdentityReport> &rows, Format format);
void write_quad(std::ostream &out, const std::vector<QuadResult> &rows, Format format);
void write_float_family(std::ostream &out, const std::vector<FloatFamilyReport> &rows,
                        Format format);

/// Two-column table with the given column names, e.g. ("n", "value").
void write_table(std::ostream &out, const std::pair<std::string, std::string> &columns,
                 const std::vector<std::pair<std::string, std::string>> &rows, Format format);

} // namespace bernkit
