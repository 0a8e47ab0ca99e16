#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ncplane/rational.hpp"

namespace ncplane {

template <class Coeff, std::size_t NVars>
class Polynomial;

template <class Coeff, std::size_t NVars>
bool is_zero(const Polynomial<Coeff, NVars>& p);

/// Sparse multivariate polynomial with exact coefficients.
///
/// Terms are kept in a map from exponent vectors to coefficients; a zero
/// coefficient is never stored, so two polynomials are equal iff their maps
/// are equal. `Coeff` may itself be a Polynomial, which is how observables
/// carry coefficients in the formal parameters.
template <class Coeff, std::size_t NVars>
class Polynomial {
 public:
  using coeff_type = Coeff;
  using Exponents = std::array<int, NVars>;
  using TermMap = std::map<Exponents, Coeff>;
  static constexpr std::size_t kNumVars = NVars;

  Polynomial() = default;

  // Constants embed into the ring.
  Polynomial(const Coeff& c) { add_term(Exponents{}, c); }  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Coeff(c)) {}               // NOLINT(google-explicit-constructor)
  Polynomial(int c) : Polynomial(Coeff(c)) {}                // NOLINT(google-explicit-constructor)

  static Polynomial variable(std::size_t index) {
    if (index >= NVars) throw std::out_of_range("Polynomial::variable: index out of range");
    Exponents e{};
    e[index] = 1;
    return monomial(e, Coeff(1));
  }

  static Polynomial monomial(const Exponents& e, const Coeff& c) {
    Polynomial p;
    p.add_term(e, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
  }

  Coeff coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  Coeff constant_term() const { return coefficient(Exponents{}); }

  /// Highest total degree of any term; -1 for the zero polynomial.
  int total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    return deg;
  }

  /// Highest exponent of a single variable.
  int degree_in(std::size_t var) const {
    int deg = 0;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[var]);
    return deg;
  }

  void add_term(const Exponents& e, const Coeff& c) {
    if (ncplane::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (ncplane::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial derivative(std::size_t var) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents de = e;
      de[var] -= 1;
      Coeff dc = c;
      dc *= Coeff(e[var]);
      out.add_term(de, dc);
    }
    return out;
  }

  /// Applies `f` to every coefficient and re-canonicalises.
  template <class F>
  Polynomial map_coefficients(F&& f) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  /// Ring homomorphism x_i -> images[i], extended over an arbitrary target ring R
  /// that accepts multiplication by Coeff via R(c).
  template <class R>
  R compose(const std::array<R, NVars>& images) const {
    std::array<std::vector<R>, NVars> powers;
    for (std::size_t v = 0; v < NVars; ++v) {
      const int top = degree_in(v);
      powers[v].reserve(top + 1);
      powers[v].push_back(R(1));
      for (int k = 1; k <= top; ++k) powers[v].push_back(powers[v].back() * images[v]);
    }
    R out(0);
    for (const auto& [e, c] : terms_) {
      R term(c);
      for (std::size_t v = 0; v < NVars; ++v)
        if (e[v] != 0) term = term * powers[v][e[v]];
      out += term;
    }
    return out;
  }

  /// Numeric evaluation; `coeff_value` maps a coefficient to the target type.
  template <class T, class CoeffEval>
  T evaluate(const std::array<T, NVars>& x, CoeffEval&& coeff_value) const {
    T out{};
    for (const auto& [e, c] : terms_) {
      T term = coeff_value(c);
      for (std::size_t v = 0; v < NVars; ++v)
        for (int k = 0; k < e[v]; ++k) term *= x[v];
      out += term;
    }
    return out;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }

  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

  friend Polynomial operator-(const Polynomial& p) {
    Polynomial out;
    for (const auto& [e, c] : p.terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
    return out;
  }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    Polynomial out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    for (const auto& [el, cl] : lhs.terms_) {
      for (const auto& [er, cr] : rhs.terms_) {
        Exponents e;
        for (std::size_t v = 0; v < NVars; ++v) e[v] = el[v] + er[v];
        Coeff c = cl;
        c *= cr;
        out.add_term(e, c);
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) { return lhs.terms_ == rhs.terms_; }
  friend bool operator!=(const Polynomial& lhs, const Polynomial& rhs) { return !(lhs == rhs); }

 private:
  TermMap terms_;
};

template <class Coeff, std::size_t NVars>
bool is_zero(const Polynomial<Coeff, NVars>& p) {
  return p.is_zero();
}

template <class Coeff, std::size_t NVars>
Polynomial<Coeff, NVars> pow(const Polynomial<Coeff, NVars>& base, unsigned exponent) {
  Polynomial<Coeff, NVars> result(1);
  Polynomial<Coeff, NVars> b = base;
  while (exponent != 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent != 0) b = b * b;
  }
  return result;
}

}  // namespace ncplane

namespace Eigen {

template <class Coeff, std::size_t NVars>
struct NumTraits<ncplane::Polynomial<Coeff, NVars>> : GenericNumTraits<ncplane::Polynomial<Coeff, NVars>> {
  using Self = ncplane::Polynomial<Coeff, NVars>;
  using Real = Self;
  using NonInteger = Self;
  using Nested = Self;
  using Literal = Self;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 256
  };
  static inline Self epsilon() { return Self(); }
  static inline Self dummy_precision() { return Self(); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
