#include "ncplane/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace ncplane {
namespace {

std::string render_value(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

Check make_check(std::string name, nlohmann::json params, nlohmann::json measured, nlohmann::json expected,
                 double error, double tol) {
  Check c;
  c.name = std::move(name);
  c.params = params.is_null() ? nlohmann::json::object() : std::move(params);
  c.measured = std::move(measured);
  c.expected = std::move(expected);
  c.error = error;
  c.tol = tol;
  c.pass = !std::isnan(error) && error <= tol;
  return c;
}

Check make_exact_check(std::string name, nlohmann::json params, const std::string& measured,
                       const std::string& expected) {
  const double error = measured == expected ? 0.0 : 1.0;
  return make_check(std::move(name), std::move(params), measured, expected, error, 0.0);
}

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

nlohmann::json to_json(const Check& check) {
  return {{"name", check.name},         {"params", check.params}, {"measured", check.measured},
          {"expected", check.expected}, {"error", check.error},   {"tol", check.tol},
          {"pass", check.pass}};
}

nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  return {{"version", report.version}, {"config", report.config}, {"checks", checks}, {"pass", report.pass()}};
}

std::string to_text(const SuiteReport& report) {
  std::string out = fmt::format("ncplane {} verification\nconfig: {}\n", report.version, report.config.dump());
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    if (!c.pass) ++failed;
    out += fmt::format("[{}] {}  measured={} expected={} error={} tol={}\n", c.pass ? "PASS" : "FAIL", c.name,
                       render_value(c.measured), render_value(c.expected), nlohmann::json(c.error).dump(),
                       nlohmann::json(c.tol).dump());
  }
  out += fmt::format("{} checks, {} failed: {}\n", report.checks.size(), failed, report.pass() ? "PASS" : "FAIL");
  return out;
}

}  // namespace ncplane
