#pragma once

#include <Eigen/Core>
#include <complex>
#include <json.hpp>
#include <string>
#include <vector>

#include "ncplane/group.hpp"
#include "ncplane/report.hpp"

namespace ncplane {

using Complex = std::complex<double>;

/// Periodic N x N lattice over [-L, L)^2 plus the numeric parameter values.
struct GridSpec {
  int n = 256;
  double l = 20.0;
  double theta = 0.1;
  double hbar = 1.0;

  /// Throws InvalidGrid unless n >= 16 is a power of two, l > 0 and hbar > 0
  /// (all finite).
  void validate() const;

  double spacing() const { return 2.0 * l / n; }
  double coordinate(int index) const { return -l + spacing() * index; }
  /// Wavenumber of FFT bin `index`: (pi / L) * {0, ..., N/2 - 1, -N/2, ..., -1}.
  double wavenumber(int index) const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Complex amplitudes on the grid; values(i, j) = psi(q1_i, q2_j).
class Wavefunction {
 public:
  /// Validates the spec, the N x N shape and finiteness.
  Wavefunction(GridSpec spec, Eigen::ArrayXXcd values);

  const GridSpec& spec() const { return spec_; }
  const Eigen::ArrayXXcd& values() const { return values_; }

  /// sqrt(Delta^2 sum |psi|^2).
  double norm() const;
  /// <this, other> = Delta^2 sum conj(this) other.
  Complex inner(const Wavefunction& other) const;

  Wavefunction operator+(const Wavefunction& other) const;
  Wavefunction operator-(const Wavefunction& other) const;
  friend Wavefunction operator*(Complex s, const Wavefunction& psi);

 private:
  GridSpec spec_;
  Eigen::ArrayXXcd values_;
};

/// psi ∝ exp(-|q - q0|^2 / (4 sigma^2) + i k0.q), unit norm.
/// Throws TailOverflow unless sigma > 0 and |q0| + 6 sigma < L.
Wavefunction gaussian(const GridSpec& spec, const Eigen::Vector2d& q0, const Eigen::Vector2d& k0, double sigma);

/// psi(q - a), by spectral phase multiplication.
Wavefunction apply_U(const Eigen::Vector2d& a, const Wavefunction& psi);

/// exp(i b.q) psi(q - s), s^i = 1/2 theta eps^{ij} b_j.
Wavefunction apply_V(const Eigen::Vector2d& b, const Wavefunction& psi);

/// exp(-i (c hbar + d theta)) psi.
Wavefunction apply_W(double c, double d, const Wavefunction& psi);

/// Noncommutative position q'^i = q^i + (i/2) theta eps^{ij} d_j, i.e. the
/// quantised Bopp shift q^i - theta/(2 hbar) eps^{ij} p_j; [q'^1, q'^2] = i theta.
Wavefunction apply_position(int axis, const Wavefunction& psi);

/// -i hbar d_axis psi.
Wavefunction apply_momentum(int axis, const Wavefunction& psi);

/// Spectral partial derivative along axis 0 (q1) or 1 (q2).
Wavefunction spectral_derivative(int axis, const Wavefunction& psi);

/// <psi, op psi> / <psi, psi>.
Complex expectation(const Wavefunction& psi, const Wavefunction& op_psi);

struct OperatorReport {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  Complex phase{1.0, 0.0};
  double max_error = 0.0;
  double rel_error = 0.0;
  double tol = 0.0;
  bool pass = false;
};

Check to_check(const OperatorReport& report);

enum class CommutatorKind { kQQ, kPP, kQP };

/// Applies both orderings and compares the difference with the predicted
/// multiple of psi: qq -> i theta, pp -> 0, qp -> i hbar (both axes).
/// rel_error is ||lhs - target psi|| / ||target psi||, or / ||psi|| when the
/// target vanishes.
OperatorReport commutator_check(CommutatorKind kind, const Wavefunction& psi, double tol);

struct WeylParams {
  Eigen::Vector2d a = Eigen::Vector2d::Zero();
  Eigen::Vector2d a2 = Eigen::Vector2d::Zero();
  Eigen::Vector2d b = Eigen::Vector2d::Zero();
  Eigen::Vector2d b2 = Eigen::Vector2d::Zero();
  double c = 0.0;
  double d = 0.0;
};

struct WeylTolerances {
  double translations = 1e-10;  // UU
  double phases = 1e-8;         // VV and VU
  double central = 1e-13;       // W against U and V
};

/// The five exponentiated relations UU, VV, VU, UW, VW. For each pair of
/// orderings O1, O2 the measured phase is <O2 psi, O1 psi> / ||psi||^2; the
/// prediction is exp(i (z1 + theta z2)) with (z1, z2) from extract_cocycle on
/// the matching algebra elements. rel_error is the larger of the phase
/// mismatch and ||O1 psi - phase O2 psi|| / ||psi||. Throws PhaseUndefined if
/// ||psi|| < 1e-12.
std::vector<OperatorReport> weyl_check(const WeylParams& params, const Wavefunction& psi,
                                       const WeylTolerances& tol = {});

/// (A.p' + B.q' + C hbar + D theta) psi.
Wavefunction quantize_apply(const AlgebraElement& e, const Wavefunction& psi);

/// [Q(e1), Q(e2)] psi against i (hbar z1 + theta z2) psi.
OperatorReport quantized_commutator_check(const AlgebraElement& e1, const AlgebraElement& e2,
                                          const Wavefunction& psi, double tol);

}  // namespace ncplane
