#pragma once

#include <json.hpp>

#include <string>

namespace folia::cli {

// Insertion order is part of the report contract, so reports are stable byte for byte.
using Json = nlohmann::ordered_json;

/// Numeric field with its absolute tolerance. Values are rounded to 12
/// significant digits so repeated runs print identically.
Json number(double value, double abs_tol);

/// Indented key: value rendering of a report.
std::string render_text(const Json& report);

/// Table rendering of the fixture suite report.
std::string render_suite_text(const Json& report);

}  // namespace folia::cli
