#include "ncplane/group.hpp"

#include "ncplane/errors.hpp"
#include "ncplane/parser.hpp"
#include "ncplane/symplectic.hpp"

namespace ncplane {

Observable moment_map_noncommutative(const AlgebraElement& e) {
  return constant(e.A(0)) * p1() + constant(e.A(1)) * p2() + constant(e.B(0)) * q1() + constant(e.B(1)) * q2() +
         constant(e.C) + Observable(Scalar(e.D) * theta());
}

Observable moment_map(const AlgebraElement& e) { return bopp_shift(moment_map_noncommutative(e)); }

Cocycle extract_cocycle(const AlgebraElement& e1, const AlgebraElement& e2) {
  // The moment map lives in the Bopp-shifted chart, where the bracket is the
  // canonical one.
  static const SymplecticStructure canonical = SymplecticStructure::standard();
  const Observable bracket = poisson_bracket(moment_map(e1), moment_map(e2), canonical);
  if (!bracket.is_constant())
    throw NonConstantBracket("extract_cocycle: {P, P'} = " + format(bracket) + " is not constant");
  const Scalar value = bracket.constant_term();
  for (const auto& [exps, c] : value.terms()) {
    if (exps[kHbar] != 0 || exps[kTheta] > 1)
      throw NonConstantBracket("extract_cocycle: unexpected parameter dependence " + format(value));
  }
  return {value.coefficient({0, 0}), value.coefficient({1, 0})};
}

Cocycle cocycle_closed_form(const AlgebraElement& e1, const AlgebraElement& e2) {
  return {e1.B.dot(e2.A) - e2.B.dot(e1.A), cross(e1.B, e2.B)};
}

Cocycle cocycle_literal_sum(const AlgebraElement& e1, const AlgebraElement& e2) {
  // sum_{i,j} theta^{ij} (B_i B'_j - B'_i B_j) with theta^{12} = -theta^{21} = 1.
  Rational z2 = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (i == j) continue;
      const Rational eps = (i == 0) ? 1 : -1;
      z2 += eps * (e1.B(i) * e2.B(j) - e2.B(i) * e1.B(j));
    }
  }
  return {e1.B.dot(e2.A) - e2.B.dot(e1.A), z2};
}

AlgebraElement algebra_bracket(const AlgebraElement& e1, const AlgebraElement& e2) {
  const Cocycle z = extract_cocycle(e1, e2);
  AlgebraElement out;
  out.C = z.z1;
  out.D = z.z2;
  return out;
}

Observable homomorphism_defect(const AlgebraElement& e1, const AlgebraElement& e2, BracketMode mode) {
  static const SymplecticStructure canonical = SymplecticStructure::standard();
  const Observable bracket = poisson_bracket(moment_map(e1), moment_map(e2), canonical);
  if (mode == BracketMode::kAbelian) return bracket;
  return bracket - moment_map(algebra_bracket(e1, e2));
}

}  // namespace ncplane
