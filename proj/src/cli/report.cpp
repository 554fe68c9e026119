#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace folia::cli {

namespace {

double fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

bool is_number_field(const Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("value") && j.contains("abs_tol");
}

std::string inline_text(const Json& j) {
  if (is_number_field(j)) return scalar_text(j["value"]) + " +- " + scalar_text(j["abs_tol"]);
  if (is_scalar(j)) return scalar_text(j);
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t k = 0; k < j.size(); ++k) s += (k ? ", " : "") + inline_text(j[k]);
    return s + "]";
  }
  std::string s;
  for (auto it = j.begin(); it != j.end(); ++it) s += (s.empty() ? "" : "  ") + it.key() + "=" + inline_text(it.value());
  return s;
}

bool is_flat(const Json& j) {
  if (is_scalar(j) || is_number_field(j)) return true;
  for (const auto& v : j)
    if (!(is_scalar(v) || is_number_field(v) || (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)))) return false;
  return true;
}

void render(const Json& j, int indent, std::ostringstream& os) {
  std::string pad(indent, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (is_scalar(v) || is_number_field(v)) {
      std::string s = inline_text(v);
      if (s.find('\n') != std::string::npos) {
        os << pad << it.key() << ":\n" << s;
        if (s.back() != '\n') os << "\n";
      } else {
        os << pad << it.key() << ": " << s << "\n";
      }
    } else if (v.is_array()) {
      if (std::all_of(v.begin(), v.end(), is_scalar)) {
        os << pad << it.key() << ": " << inline_text(v) << "\n";
        continue;
      }
      os << pad << it.key() << ":\n";
      for (const auto& item : v) {
        if (is_flat(item)) {
          os << pad << "  - " << inline_text(item) << "\n";
        } else {
          os << pad << "  -\n";
          render(item, indent + 4, os);
        }
      }
    } else {
      os << pad << it.key() << ":\n";
      render(v, indent + 2, os);
    }
  }
}

}  // namespace

Json number(double value, double abs_tol) {
  Json j = Json::object();
  j["value"] = fixed(value);
  j["abs_tol"] = fixed(abs_tol);
  return j;
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(report, 0, os);
  return os.str();
}

std::string render_suite_text(const Json& report) {
  std::ostringstream os;
  std::size_t w_case = 4, w_exp = 8;
  for (const auto& sec : report["sections"])
    for (const auto& row : sec["rows"]) {
      w_case = std::max(w_case, row["case"].get<std::string>().size());
      w_exp = std::max(w_exp, inline_text(row["expected"]).size());
    }
  for (const auto& sec : report["sections"]) {
    os << sec["name"].get<std::string>() << "\n";
    for (const auto& row : sec["rows"]) {
      std::string c = row["case"].get<std::string>(), e = inline_text(row["expected"]);
      os << "  " << c << std::string(w_case - c.size() + 2, ' ') << e << std::string(w_exp - e.size() + 2, ' ')
         << inline_text(row["got"]) << "  " << (row["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    }
  }
  os << "passed " << report["passed"].get<int>() << ", failed " << report["failed"].get<int>() << "\n";
  return os.str();
}

}  // namespace folia::cli
