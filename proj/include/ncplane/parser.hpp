#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "ncplane/errors.hpp"
#include "ncplane/observable.hpp"

namespace ncplane {

struct ParseOptions {
  std::size_t max_length = 64 * 1024;
  unsigned max_exponent = 64;
};

/// Parses an observable expression.
///
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := "-" factor | base ("^" uint)?
///   base   := number | ident | "(" expr ")"
///   ident  := q1 | q2 | p1 | p2 | theta | hbar
///   number := uint ("." digits)?
///
/// Decimal literals are converted exactly. A divisor must be a nonzero
/// rational constant. Throws ParseError carrying the byte offset of the
/// first offending token.
Observable parse(std::string_view src, const ParseOptions& options = {});

/// Canonical rendering: monomials over (q1, q2, p1, p2, theta, hbar) by
/// ascending total degree, ties broken by descending exponent in q1, q2, p1,
/// p2, theta, hbar. parse(format(f)) == f.
std::string format(const Observable& f);

std::string format(const Scalar& s);

}  // namespace ncplane
