#include "ncplane/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <vector>

namespace ncplane {
namespace {

class Parser {
 public:
  Parser(std::string_view src, const ParseOptions& options) : src_(src), options_(options) {}

  Observable run() {
    if (src_.size() > options_.max_length)
      throw ParseError(options_.max_length, "shorter input",
                       "input exceeds " + std::to_string(options_.max_length) + " bytes");
    skip_space();
    if (at_end()) throw ParseError(pos_, "expression", "empty input");
    Observable result = expr();
    skip_space();
    if (!at_end()) {
      if (peek() == ')') throw ParseError(pos_, "end of input", "unbalanced ')'");
      throw ParseError(pos_, "operator or end of input", "unexpected '" + std::string(1, peek()) + "'");
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Observable expr() {
    Observable lhs = term();
    for (;;) {
      if (accept('+'))
        lhs += term();
      else if (accept('-'))
        lhs -= term();
      else
        return lhs;
    }
  }

  Observable term() {
    Observable lhs = factor();
    for (;;) {
      if (accept('*')) {
        lhs = lhs * factor();
      } else if (accept('/')) {
        skip_space();
        const std::size_t at = pos_;
        const Observable rhs = factor();
        if (!rhs.is_constant() || !rhs.constant_term().is_constant())
          throw ParseError(at, "numeric denominator", "denominator must be a numeric constant");
        const Rational d = rhs.constant_term().constant_term();
        if (is_zero(d)) throw ParseError(at, "nonzero denominator", "division by zero");
        Rational inv = 1;
        inv /= d;
        lhs = lhs * constant(inv);
      } else {
        return lhs;
      }
    }
  }

  Observable factor() {
    if (accept('-')) return -factor();
    Observable b = base();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError(at, "nonnegative integer exponent", "exponent must be a nonnegative integer");
      std::size_t end = at;
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
      if (end < src_.size() && (src_[end] == '.' || std::isalpha(static_cast<unsigned char>(src_[end]))))
        throw ParseError(at, "nonnegative integer exponent", "exponent must be a nonnegative integer");
      const std::string_view digits = src_.substr(at, end - at);
      if (digits.size() > 9 || std::stoul(std::string(digits)) > options_.max_exponent)
        throw ParseError(at, "exponent <= " + std::to_string(options_.max_exponent), "exponent too large");
      pos_ = end;
      return pow(b, static_cast<unsigned>(std::stoul(std::string(digits))));
    }
    return b;
  }

  Observable base() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "number, identifier or '('", "unexpected end of input");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Observable inner = expr();
      skip_space();
      if (!accept(')')) throw ParseError(pos_, "')'", "unbalanced '('");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    throw ParseError(pos_, "number, identifier or '('", "unexpected '" + std::string(1, c) + "'");
  }

  Observable number() {
    const std::size_t start = pos_;
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += src_[pos_++];
    std::string denominator = "1";
    if (!at_end() && peek() == '.') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError(start, "digits after '.'", "malformed number");
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        digits += src_[pos_++];
        denominator += '0';
      }
    }
    if (!at_end() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '.'))
      throw ParseError(start, "number", "malformed number");
    Rational value(digits + "/" + denominator, 10);
    value.canonicalize();
    return constant(value);
  }

  Observable identifier() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name == "q1") return q1();
    if (name == "q2") return q2();
    if (name == "p1") return p1();
    if (name == "p2") return p2();
    if (name == "theta") return Observable(theta());
    if (name == "hbar") return Observable(hbar());
    throw ParseError(start, "q1, q2, p1, p2, theta or hbar", "unknown identifier '" + std::string(name) + "'");
  }

  std::string_view src_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
};

// Exponents over (q1, q2, p1, p2, theta, hbar).
using FlatExponents = std::array<int, 6>;

struct FlatTerm {
  FlatExponents e;
  Rational c;
};

bool canonical_less(const FlatTerm& a, const FlatTerm& b) {
  int da = 0, db = 0;
  for (int v = 0; v < 6; ++v) {
    da += a.e[v];
    db += b.e[v];
  }
  if (da != db) return da < db;
  return a.e > b.e;
}

std::string render(std::vector<FlatTerm> terms) {
  if (terms.empty()) return "0";
  std::sort(terms.begin(), terms.end(), canonical_less);

  static constexpr std::array<const char*, 6> kNames = {"q1", "q2", "p1", "p2", "theta", "hbar"};
  static constexpr std::array<int, 6> kRenderOrder = {4, 5, 0, 1, 2, 3};

  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = sgn(c) < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    const Rational mag = abs(c);
    std::vector<std::string> factors;
    for (int v : kRenderOrder) {
      if (e[v] == 0) continue;
      std::string f = kNames[v];
      if (e[v] > 1) f += "^" + std::to_string(e[v]);
      factors.push_back(std::move(f));
    }
    if (factors.empty() || mag != 1) factors.insert(factors.begin(), to_string(mag));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i != 0) out += "*";
      out += factors[i];
    }
  }
  return out;
}

}  // namespace

Observable parse(std::string_view src, const ParseOptions& options) { return Parser(src, options).run(); }

std::string format(const Observable& f) {
  std::vector<FlatTerm> terms;
  for (const auto& [e, scalar] : f.terms())
    for (const auto& [s, c] : scalar.terms()) terms.push_back({{e[0], e[1], e[2], e[3], s[0], s[1]}, c});
  return render(std::move(terms));
}

std::string format(const Scalar& s) { return format(Observable(s)); }

}  // namespace ncplane
