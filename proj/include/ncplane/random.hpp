#pragma once

#include <cstdint>
#include <random>

#include "ncplane/group.hpp"
#include "ncplane/observable.hpp"

namespace ncplane {

/// Seeded generator of exact test inputs. Rationals have numerator and
/// denominator bounded by `height` (default 16) to keep coefficient growth small.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, int height = 16) : engine_(seed), height_(height) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

  Rational rational() {
    Rational r(integer(-height_, height_), integer(1, height_));
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational() {
    Rational r;
    do r = rational();
    while (is_zero(r));
    return r;
  }

  /// One or two terms, each of degree <= 1 in theta and hbar.
  Scalar scalar() {
    Scalar s;
    const int terms = integer(1, 2);
    for (int t = 0; t < terms; ++t) s.add_term({integer(0, 1), integer(0, 1)}, nonzero_rational());
    return s;
  }

  /// Up to `max_terms` monomials of total coordinate degree <= max_degree.
  Observable observable(int max_degree, int max_terms = 4) {
    Observable f;
    const int terms = integer(1, max_terms);
    for (int t = 0; t < terms; ++t) {
      Observable::Exponents e{};
      const int degree = integer(0, max_degree);
      for (int k = 0; k < degree; ++k) e[integer(0, 3)] += 1;
      f.add_term(e, scalar());
    }
    return f;
  }

  AlgebraElement algebra_element() {
    AlgebraElement e;
    e.A << rational(), rational();
    e.B << rational(), rational();
    e.C = rational();
    e.D = rational();
    return e;
  }

  GroupElement<Rational> group_element() {
    GroupElement<Rational> g;
    g.a << rational(), rational();
    g.b << rational(), rational();
    g.c = rational();
    g.d = rational();
    return g;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  int height_;
};

}  // namespace ncplane
