#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace ncplane {

/// One verified identity. `measured`/`expected` hold a number or a string.
struct Check {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json measured;
  nlohmann::json expected;
  double error = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// pass = error <= tol (a NaN error never passes).
Check make_check(std::string name, nlohmann::json params, nlohmann::json measured, nlohmann::json expected,
                 double error, double tol);

/// Exact check: passes iff measured == expected as strings; error is 0 or 1.
Check make_exact_check(std::string name, nlohmann::json params, const std::string& measured,
                       const std::string& expected);

struct SuiteReport {
  std::string version;
  nlohmann::json config = nlohmann::json::object();
  std::vector<Check> checks;

  bool pass() const;
};

nlohmann::json to_json(const Check& check);
nlohmann::json to_json(const SuiteReport& report);

/// One line per check followed by an overall verdict. Numbers use the same
/// shortest round-trip representation as the JSON output.
std::string to_text(const SuiteReport& report);

}  // namespace ncplane
