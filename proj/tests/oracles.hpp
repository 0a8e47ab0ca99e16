#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "ncplane/group.hpp"
#include "ncplane/hilbert.hpp"
#include "ncplane/observable.hpp"
#include "ncplane/symplectic.hpp"

namespace oracle {

using ncplane::Observable;
using ncplane::Rational;

inline Observable d(const Observable& f, ncplane::Coord c) { return f.derivative(c); }

// {f,g} = theta (f_q1 g_q2 - f_q2 g_q1) + sum_i (f_qi g_pi - f_pi g_qi), written out by hand.
inline Observable bracket(const Observable& f, const Observable& g, bool with_theta = true) {
  using namespace ncplane;
  Observable out = d(f, kQ1) * d(g, kP1) - d(f, kP1) * d(g, kQ1) + d(f, kQ2) * d(g, kP2) - d(f, kP2) * d(g, kQ2);
  if (with_theta) out += (d(f, kQ1) * d(g, kQ2) - d(f, kQ2) * d(g, kQ1)) * theta();
  return out;
}

// Components (q1, q2, p1, p2) of the Hamiltonian field, by hand.
inline std::array<Observable, 4> vector_field(const Observable& f) {
  using namespace ncplane;
  return {d(f, kQ2) * theta() + d(f, kP1), -(d(f, kQ1) * theta()) + d(f, kP2), -d(f, kQ1), -d(f, kQ2)};
}

// f evaluated at the shifted point (q1 - theta p2 / 2, q2 + theta p1 / 2, p1, p2).
inline double bopp_value(const Observable& f, const ncplane::PhasePoint& x, double theta_val, double hbar_val) {
  ncplane::PhasePoint shifted = x;
  shifted(0) -= 0.5 * theta_val * x(3);
  shifted(1) += 0.5 * theta_val * x(2);
  return ncplane::evaluate(f, shifted, theta_val, hbar_val);
}

// Block nilpotent realisation of the group: a 4x4 Heisenberg block carrying (a, b, c)
// and a 3x3 block carrying (b1, b2, d). exp(X) = I + X + X^2 / 2 exactly.
using Matrix7 = Eigen::Matrix<Rational, 7, 7>;

inline Matrix7 generator(const ncplane::GroupElement<Rational>& g) {
  Matrix7 x = Matrix7::Zero();
  x(0, 1) = g.b(0);
  x(0, 2) = g.b(1);
  x(0, 3) = g.c;
  x(1, 3) = g.a(0);
  x(2, 3) = g.a(1);
  x(4, 5) = g.b(0);
  x(5, 6) = g.b(1);
  x(4, 6) = g.d;
  return x;
}

inline Matrix7 exp_matrix(const ncplane::GroupElement<Rational>& g) {
  const Matrix7 x = generator(g);
  Matrix7 sq = x * x;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) sq(i, j) /= 2;
  return Matrix7::Identity() + x + sq;
}

// Normalised Gaussian sampled on the grid, built from the closed form.
inline ncplane::Wavefunction analytic_gaussian(const ncplane::GridSpec& spec, Eigen::Vector2d q0, Eigen::Vector2d k0,
                                      double sigma) {
  Eigen::ArrayXXcd v(spec.n, spec.n);
  for (int i = 0; i < spec.n; ++i) {
    for (int j = 0; j < spec.n; ++j) {
      const double x = spec.coordinate(i), y = spec.coordinate(j);
      const double r2 = (x - q0(0)) * (x - q0(0)) + (y - q0(1)) * (y - q0(1));
      v(i, j) = std::exp(std::complex<double>(-r2 / (4 * sigma * sigma), k0(0) * x + k0(1) * y));
    }
  }
  const double dx = spec.spacing();
  v /= std::sqrt(v.abs2().sum() * dx * dx);
  return ncplane::Wavefunction(spec, v);
}

// Analytic derivative of the Gaussian above along `axis`.
inline ncplane::Wavefunction analytic_derivative(const ncplane::GridSpec& spec, Eigen::Vector2d q0,
                                                 Eigen::Vector2d k0, double sigma, int axis) {
  const auto psi = analytic_gaussian(spec, q0, k0, sigma);
  Eigen::ArrayXXcd v = psi.values();
  for (int i = 0; i < spec.n; ++i) {
    for (int j = 0; j < spec.n; ++j) {
      const double x = spec.coordinate(axis == 0 ? i : j);
      v(i, j) *= std::complex<double>(-(x - q0(axis)) / (2 * sigma * sigma), k0(axis));
    }
  }
  return ncplane::Wavefunction(spec, v);
}

inline double relative_l2(const ncplane::Wavefunction& a, const ncplane::Wavefunction& b) {
  return (a - b).norm() / b.norm();
}

}  // namespace oracle
