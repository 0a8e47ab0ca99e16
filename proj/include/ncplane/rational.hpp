#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

namespace ncplane {

/// Exact rational number. Canonical (reduced, positive denominator) after every operation.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline double to_double(const Rational& x) { return x.get_d(); }

/// "3", "-1/2".
inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace ncplane

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline mpq_class epsilon() { return 0; }
  static inline mpq_class dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
