#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ncplane/report.hpp"

namespace ncplane {

struct RunConfig {
  double theta = 0.1;
  double hbar = 1.0;
  int grid_n = 256;
  double box_l = 20.0;
  std::uint64_t seed = 0;
  /// Replaces every numeric tolerance; exact checks always use zero.
  std::optional<double> tol;
  std::string format = "text";

  /// Throws InvalidGrid for an unusable grid or std::invalid_argument for a
  /// non-positive tolerance or unknown format.
  void validate() const;
  nlohmann::json to_json() const;
};

std::string version();

/// Exact bracket identities: antisymmetry, Leibniz, Jacobi, vector-field
/// round trip, Bopp oracle, theta -> 0 limit and the coordinate brackets.
void run_algebra_suite(const RunConfig& cfg, SuiteReport& report);

/// Associativity, cocycle antisymmetry and bilinearity, homomorphism defect,
/// group commutator against the cocycle.
void run_group_suite(const RunConfig& cfg, SuiteReport& report);

/// Unitarity, Weyl phases, CCR, quantised-bracket consistency, theta = 0
/// degeneration and grid convergence on the configured grid.
void run_representation_suite(const RunConfig& cfg, SuiteReport& report);

/// All three suites in order.
SuiteReport run_verification_suite(const RunConfig& cfg);

}  // namespace ncplane
