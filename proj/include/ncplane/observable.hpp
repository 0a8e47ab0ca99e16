#pragma once

#include <Eigen/Core>
#include <array>
#include <cstddef>

#include "ncplane/polynomial.hpp"

namespace ncplane {

/// Polynomial in the formal parameters (theta, hbar) with rational coefficients.
using Scalar = Polynomial<Rational, 2>;

/// Polynomial in (q1, q2, p1, p2) with Scalar coefficients.
using Observable = Polynomial<Scalar, 4>;

/// Phase-space coordinate order used throughout: (q1, q2, p1, p2).
enum Coord : std::size_t { kQ1 = 0, kQ2 = 1, kP1 = 2, kP2 = 3 };

/// Index of the formal parameters inside a Scalar.
enum Param : std::size_t { kTheta = 0, kHbar = 1 };

using PhasePoint = Eigen::Vector4d;

inline Scalar theta() { return Scalar::variable(kTheta); }
inline Scalar hbar() { return Scalar::variable(kHbar); }

inline Observable coord(Coord c) { return Observable::variable(c); }
inline Observable q1() { return coord(kQ1); }
inline Observable q2() { return coord(kQ2); }
inline Observable p1() { return coord(kP1); }
inline Observable p2() { return coord(kP2); }

inline Observable constant(const Rational& r) { return Observable(Scalar(r)); }

/// Numeric value of a Scalar at given parameter values.
inline double evaluate(const Scalar& s, double theta_val, double hbar_val) {
  return s.evaluate<double>({theta_val, hbar_val}, [](const Rational& r) { return to_double(r); });
}

/// Substitutes a rational value for theta, leaving hbar formal.
inline Scalar substitute_theta(const Scalar& s, const Rational& value) {
  return s.compose<Scalar>({Scalar(value), hbar()});
}

inline Observable substitute_theta(const Observable& f, const Rational& value) {
  return f.map_coefficients([&](const Scalar& c) { return substitute_theta(c, value); });
}

/// True iff the polynomial has no dependence on the coordinates.
inline bool is_phase_constant(const Observable& f) { return f.is_constant(); }

}  // namespace ncplane
