#pragma once

#include <Eigen/Core>

#include "ncplane/observable.hpp"

namespace ncplane {

template <class T>
using Vec2 = Eigen::Matrix<T, 2, 1>;

/// Element (A, B, C, D) of the centrally extended translation algebra.
/// A translates positions, B translates momenta, C and D are central.
struct AlgebraElement {
  Vec2<Rational> A = Vec2<Rational>::Zero();
  Vec2<Rational> B = Vec2<Rational>::Zero();
  Rational C = 0;
  Rational D = 0;

  friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
    return {x.A + y.A, x.B + y.B, x.C + y.C, x.D + y.D};
  }
  friend AlgebraElement operator-(const AlgebraElement& x) { return {-x.A, -x.B, -x.C, -x.D}; }
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    return x.A == y.A && x.B == y.B && x.C == y.C && x.D == y.D;
  }
  friend bool operator!=(const AlgebraElement& x, const AlgebraElement& y) { return !(x == y); }
};

/// Obstructions of the moment map: z1 in the position/momentum sector and
/// z2 the theta-coefficient of the momentum/momentum sector.
struct Cocycle {
  Rational z1 = 0;
  Rational z2 = 0;

  friend Cocycle operator+(const Cocycle& x, const Cocycle& y) { return {x.z1 + y.z1, x.z2 + y.z2}; }
  friend Cocycle operator-(const Cocycle& x) { return {-x.z1, -x.z2}; }
  friend bool operator==(const Cocycle& x, const Cocycle& y) { return x.z1 == y.z1 && x.z2 == y.z2; }
  friend bool operator!=(const Cocycle& x, const Cocycle& y) { return !(x == y); }
};

/// Group element (a, b, c, d); templated so the same law runs over exact
/// rationals and doubles.
template <class T>
struct GroupElement {
  Vec2<T> a = Vec2<T>::Zero();
  Vec2<T> b = Vec2<T>::Zero();
  T c = T(0);
  T d = T(0);

  static GroupElement identity() { return {}; }

  GroupElement inverse() const { return {-a, -b, -c, -d}; }

  friend bool operator==(const GroupElement& x, const GroupElement& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator!=(const GroupElement& x, const GroupElement& y) { return !(x == y); }
};

/// b1 b'2 - b2 b'1.
template <class T>
T cross(const Vec2<T>& u, const Vec2<T>& v) {
  return T(u(0) * v(1) - u(1) * v(0));
}

/// (a + a', b + b', c + c' + 1/2 (b.a' - b'.a), d + d' + 1/2 (b1 b'2 - b2 b'1)).
template <class T>
GroupElement<T> group_multiply(const GroupElement<T>& g, const GroupElement<T>& h) {
  const T half = T(1) / T(2);
  GroupElement<T> out;
  out.a = g.a + h.a;
  out.b = g.b + h.b;
  out.c = T(g.c + h.c + half * T(g.b.dot(h.a) - h.b.dot(g.a)));
  out.d = T(g.d + h.d + half * cross(g.b, h.b));
  return out;
}

/// g h g^-1 h^-1; always central.
template <class T>
GroupElement<T> group_commutator(const GroupElement<T>& g, const GroupElement<T>& h) {
  return group_multiply(group_multiply(group_multiply(g, h), g.inverse()), h.inverse());
}

/// P^e = A.p + B.(q - 1/2 theta eps p) + C + D theta, written in the
/// commutative (Bopp-shifted) chart.
Observable moment_map(const AlgebraElement& e);

/// Same generator in the noncommutative chart: A.p + B.q + C + D theta.
/// Bopp-shifting it gives moment_map(e).
Observable moment_map_noncommutative(const AlgebraElement& e);

/// Cocycle read off the bracket {P^e1, P^e2}. Throws NonConstantBracket if
/// that bracket depends on the coordinates.
Cocycle extract_cocycle(const AlgebraElement& e1, const AlgebraElement& e2);

/// Closed forms: z1 = B.A' - B'.A, z2 = B1 B'2 - B2 B'1.
Cocycle cocycle_closed_form(const AlgebraElement& e1, const AlgebraElement& e2);

/// Obstructions with the momentum term summed over every ordered index pair
/// theta^{ij} (B_i B'_j - B'_i B_j); its z2 is 2 (B1 B'2 - B2 B'1), twice the
/// value the bracket produces.
Cocycle cocycle_literal_sum(const AlgebraElement& e1, const AlgebraElement& e2);

/// (0, 0, z1, z2); central elements bracket to zero with everything.
AlgebraElement algebra_bracket(const AlgebraElement& e1, const AlgebraElement& e2);

enum class BracketMode {
  kExtended,  // central extension included
  kAbelian    // central charges projected out: the bracket is zero
};

/// {P^e1, P^e2} - P^[e1, e2].
Observable homomorphism_defect(const AlgebraElement& e1, const AlgebraElement& e2,
                               BracketMode mode = BracketMode::kExtended);

}  // namespace ncplane
