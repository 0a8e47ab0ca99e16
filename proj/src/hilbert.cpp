#include "ncplane/hilbert.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ncplane/errors.hpp"

namespace ncplane {
namespace {

using Eigen::ArrayXXcd;
using Eigen::Vector2d;

constexpr Complex kI{0.0, 1.0};

Eigen::FFT<double>& fft_engine() {
  thread_local Eigen::FFT<double> fft;
  return fft;
}

// In-place transform along both axes; Eigen's inverse includes the 1/N factor.
ArrayXXcd transform(const ArrayXXcd& in, bool forward) {
  auto& fft = fft_engine();
  const Eigen::Index n = in.rows();
  ArrayXXcd out(n, n);
  Eigen::VectorXcd src(n), dst(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    src = in.col(j).matrix();
    if (forward)
      fft.fwd(dst, src);
    else
      fft.inv(dst, src);
    out.col(j) = dst.array();
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    src = out.row(i).matrix().transpose();
    if (forward)
      fft.fwd(dst, src);
    else
      fft.inv(dst, src);
    out.row(i) = dst.array().transpose();
  }
  return out;
}

Eigen::ArrayXd wavenumbers(const GridSpec& spec) {
  Eigen::ArrayXd k(spec.n);
  for (int m = 0; m < spec.n; ++m) k(m) = spec.wavenumber(m);
  return k;
}

// Derivative multipliers drop the Nyquist bin so real data stays real.
Eigen::ArrayXd derivative_wavenumbers(const GridSpec& spec) {
  Eigen::ArrayXd k = wavenumbers(spec);
  k(spec.n / 2) = 0.0;
  return k;
}

Eigen::ArrayXd coordinates(const GridSpec& spec) {
  Eigen::ArrayXd q(spec.n);
  for (int m = 0; m < spec.n; ++m) q(m) = spec.coordinate(m);
  return q;
}

// psi(q - s).
ArrayXXcd translate(const ArrayXXcd& values, const GridSpec& spec, const Vector2d& s) {
  if (s.isZero(0.0)) return values;
  ArrayXXcd hat = transform(values, true);
  const Eigen::ArrayXd k = wavenumbers(spec);
  const Eigen::ArrayXcd phase1 = (-kI * k * s(0)).exp();
  const Eigen::ArrayXcd phase2 = (-kI * k * s(1)).exp();
  for (int j = 0; j < spec.n; ++j) hat.col(j) *= phase1 * phase2(j);
  return transform(hat, false);
}

struct Gradient {
  ArrayXXcd d1;
  ArrayXXcd d2;
};

Gradient gradient(const ArrayXXcd& values, const GridSpec& spec) {
  const ArrayXXcd hat = transform(values, true);
  const Eigen::ArrayXd k = derivative_wavenumbers(spec);
  ArrayXXcd h1 = hat, h2 = hat;
  for (int j = 0; j < spec.n; ++j) {
    h1.col(j) *= kI * k;
    h2.col(j) *= kI * k(j);
  }
  return {transform(h1, false), transform(h2, false)};
}

ArrayXXcd coordinate_grid(const GridSpec& spec, int axis) {
  const Eigen::ArrayXd q = coordinates(spec);
  ArrayXXcd out(spec.n, spec.n);
  for (int j = 0; j < spec.n; ++j) {
    if (axis == 0)
      out.col(j) = q.cast<Complex>();
    else
      out.col(j).setConstant(q(j));
  }
  return out;
}

// q'^i psi from a precomputed gradient.
ArrayXXcd position_values(int axis, const ArrayXXcd& psi, const Gradient& grad, const GridSpec& spec) {
  const Complex half_i_theta = 0.5 * kI * spec.theta;
  if (axis == 0) return coordinate_grid(spec, 0) * psi + half_i_theta * grad.d2;
  return coordinate_grid(spec, 1) * psi - half_i_theta * grad.d1;
}

void check_axis(int axis) {
  if (axis != 0 && axis != 1) throw std::invalid_argument("axis must be 0 (q1) or 1 (q2)");
}

void check_same_grid(const Wavefunction& x, const Wavefunction& y) {
  if (!(x.spec() == y.spec())) throw std::invalid_argument("wavefunctions live on different grids");
}

double relative_error(const Wavefunction& lhs, const Wavefunction& target, const Wavefunction& psi) {
  const double scale = target.norm() > 0.0 ? target.norm() : psi.norm();
  return (lhs - target).norm() / scale;
}

double max_error(const Wavefunction& lhs, const Wavefunction& target) {
  return (lhs.values() - target.values()).abs().maxCoeff();
}

nlohmann::json grid_json(const GridSpec& spec) {
  return {{"n", spec.n}, {"l", spec.l}, {"theta", spec.theta}, {"hbar", spec.hbar}};
}

nlohmann::json vec_json(const Vector2d& v) { return nlohmann::json::array({v(0), v(1)}); }

AlgebraElement translation_element(const Vector2d& a) {
  AlgebraElement e;
  e.A << Rational(a(0)), Rational(a(1));
  return e;
}

AlgebraElement boost_element(const Vector2d& b) {
  AlgebraElement e;
  e.B << Rational(b(0)), Rational(b(1));
  return e;
}

}  // namespace

void GridSpec::validate() const {
  if (n < 16 || (n & (n - 1)) != 0) throw InvalidGrid("grid N must be a power of two >= 16, got " + std::to_string(n));
  if (!std::isfinite(l) || !(l > 0.0)) throw InvalidGrid("box half-length L must be positive and finite");
  if (!std::isfinite(hbar) || !(hbar > 0.0)) throw InvalidGrid("hbar must be positive and finite");
  if (!std::isfinite(theta)) throw InvalidGrid("theta must be finite");
}

double GridSpec::wavenumber(int index) const {
  const int m = index < n / 2 ? index : index - n;
  return std::numbers::pi / l * m;
}

Wavefunction::Wavefunction(GridSpec spec, Eigen::ArrayXXcd values) : spec_(spec), values_(std::move(values)) {
  spec_.validate();
  if (values_.rows() != spec_.n || values_.cols() != spec_.n)
    throw InvalidGrid("wavefunction shape does not match the grid");
  if (!values_.allFinite()) throw std::invalid_argument("wavefunction has non-finite amplitudes");
}

double Wavefunction::norm() const { return std::sqrt(values_.abs2().sum()) * spec_.spacing(); }

Complex Wavefunction::inner(const Wavefunction& other) const {
  check_same_grid(*this, other);
  const double cell = spec_.spacing() * spec_.spacing();
  return (values_.conjugate() * other.values_).sum() * cell;
}

Wavefunction Wavefunction::operator+(const Wavefunction& other) const {
  check_same_grid(*this, other);
  return Wavefunction(spec_, values_ + other.values_);
}

Wavefunction Wavefunction::operator-(const Wavefunction& other) const {
  check_same_grid(*this, other);
  return Wavefunction(spec_, values_ - other.values_);
}

Wavefunction operator*(Complex s, const Wavefunction& psi) { return Wavefunction(psi.spec_, s * psi.values_); }

Wavefunction gaussian(const GridSpec& spec, const Vector2d& q0, const Vector2d& k0, double sigma) {
  spec.validate();
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw TailOverflow("gaussian: sigma must be positive");
  if (!q0.allFinite() || !k0.allFinite()) throw std::invalid_argument("gaussian: q0 and k0 must be finite");
  if (!(q0.norm() + 6.0 * sigma < spec.l))
    throw TailOverflow("gaussian: |q0| + 6 sigma must stay inside the box half-length L");
  const Eigen::ArrayXd q = coordinates(spec);
  ArrayXXcd values(spec.n, spec.n);
  for (int j = 0; j < spec.n; ++j) {
    for (int i = 0; i < spec.n; ++i) {
      const double dx = q(i) - q0(0), dy = q(j) - q0(1);
      const double envelope = std::exp(-(dx * dx + dy * dy) / (4.0 * sigma * sigma));
      values(i, j) = envelope * std::exp(kI * (k0(0) * q(i) + k0(1) * q(j)));
    }
  }
  Wavefunction psi(spec, std::move(values));
  return (1.0 / psi.norm()) * psi;
}

Wavefunction apply_U(const Vector2d& a, const Wavefunction& psi) {
  return Wavefunction(psi.spec(), translate(psi.values(), psi.spec(), a));
}

Wavefunction apply_V(const Vector2d& b, const Wavefunction& psi) {
  const GridSpec& spec = psi.spec();
  const Vector2d shift(0.5 * spec.theta * b(1), -0.5 * spec.theta * b(0));
  ArrayXXcd values = translate(psi.values(), spec, shift);
  const Eigen::ArrayXd q = coordinates(spec);
  const Eigen::ArrayXcd wave1 = (kI * b(0) * q).exp();
  const Eigen::ArrayXcd wave2 = (kI * b(1) * q).exp();
  for (int j = 0; j < spec.n; ++j) values.col(j) *= wave1 * wave2(j);
  return Wavefunction(spec, std::move(values));
}

Wavefunction apply_W(double c, double d, const Wavefunction& psi) {
  const Complex phase = std::exp(-kI * (c * psi.spec().hbar + d * psi.spec().theta));
  return phase * psi;
}

Wavefunction spectral_derivative(int axis, const Wavefunction& psi) {
  check_axis(axis);
  Gradient g = gradient(psi.values(), psi.spec());
  return Wavefunction(psi.spec(), axis == 0 ? std::move(g.d1) : std::move(g.d2));
}

Wavefunction apply_position(int axis, const Wavefunction& psi) {
  check_axis(axis);
  if (psi.spec().theta == 0.0)
    return Wavefunction(psi.spec(), coordinate_grid(psi.spec(), axis) * psi.values());
  const Gradient g = gradient(psi.values(), psi.spec());
  return Wavefunction(psi.spec(), position_values(axis, psi.values(), g, psi.spec()));
}

Wavefunction apply_momentum(int axis, const Wavefunction& psi) {
  return (-kI * psi.spec().hbar) * spectral_derivative(axis, psi);
}

Complex expectation(const Wavefunction& psi, const Wavefunction& op_psi) {
  return psi.inner(op_psi) / psi.inner(psi);
}

Check to_check(const OperatorReport& report) {
  nlohmann::json params = report.params;
  params["max_error"] = report.max_error;
  if (!params.contains("expected_phase"))
    return make_check(report.name, std::move(params), report.rel_error, 0.0, report.rel_error, report.tol);
  const nlohmann::json expected = params["expected_phase"];
  return make_check(report.name, std::move(params),
                    nlohmann::json::array({report.phase.real(), report.phase.imag()}).dump(), expected.dump(),
                    report.rel_error, report.tol);
}

OperatorReport commutator_check(CommutatorKind kind, const Wavefunction& psi, double tol) {
  const GridSpec& spec = psi.spec();
  OperatorReport report;
  report.tol = tol;
  report.params = grid_json(spec);

  auto finish = [&](const Wavefunction& lhs, Complex target) {
    const Wavefunction expected = target * psi;
    const double rel = relative_error(lhs, expected, psi);
    const double pointwise = max_error(lhs, expected);
    report.rel_error = std::max(report.rel_error, rel);
    report.max_error = std::max(report.max_error, pointwise);
  };

  switch (kind) {
    case CommutatorKind::kQQ: {
      report.name = "ccr.qq";
      const Wavefunction lhs =
          apply_position(0, apply_position(1, psi)) - apply_position(1, apply_position(0, psi));
      finish(lhs, kI * spec.theta);
      report.params["target"] = "i*theta";
      break;
    }
    case CommutatorKind::kPP: {
      report.name = "ccr.pp";
      const Wavefunction lhs =
          apply_momentum(0, apply_momentum(1, psi)) - apply_momentum(1, apply_momentum(0, psi));
      finish(lhs, 0.0);
      report.params["target"] = "0";
      break;
    }
    case CommutatorKind::kQP: {
      report.name = "ccr.qp";
      for (int axis = 0; axis < 2; ++axis) {
        const Wavefunction lhs = apply_position(axis, apply_momentum(axis, psi)) -
                                 apply_momentum(axis, apply_position(axis, psi));
        finish(lhs, kI * spec.hbar);
      }
      report.params["target"] = "i*hbar";
      break;
    }
  }
  report.pass = report.rel_error <= tol;
  return report;
}

std::vector<OperatorReport> weyl_check(const WeylParams& params, const Wavefunction& psi, const WeylTolerances& tol) {
  const double norm = psi.norm();
  if (norm < 1e-12) throw PhaseUndefined("weyl_check: reference state has zero norm");
  const GridSpec& spec = psi.spec();
  const double norm2 = norm * norm;

  auto relation = [&](std::string name, const Wavefunction& first, const Wavefunction& second,
                      const AlgebraElement& e1, const AlgebraElement& e2, double tolerance) {
    const Cocycle z = extract_cocycle(e1, e2);
    const double z1 = to_double(z.z1), z2 = to_double(z.z2);
    const Complex predicted = std::exp(kI * (z1 + spec.theta * z2));
    const Complex hbar_weighted = std::exp(kI * (spec.hbar * z1 + spec.theta * z2));
    OperatorReport r;
    r.name = std::move(name);
    r.phase = second.inner(first) / norm2;
    const Wavefunction aligned = predicted * second;
    r.max_error = max_error(first, aligned);
    const double residual = (first - aligned).norm() / norm;
    r.rel_error = std::max(std::abs(r.phase - predicted), residual);
    r.tol = tolerance;
    r.pass = r.rel_error <= tolerance;
    r.params = grid_json(spec);
    r.params["z1"] = z1;
    r.params["z2"] = z2;
    r.params["expected_phase"] = nlohmann::json::array({predicted.real(), predicted.imag()});
    r.params["hbar_weighted_phase"] = nlohmann::json::array({hbar_weighted.real(), hbar_weighted.imag()});
    return r;
  };

  const Vector2d& a = params.a;
  const Vector2d& a2 = params.a2;
  const Vector2d& b = params.b;
  const Vector2d& b2 = params.b2;
  const AlgebraElement central;

  std::vector<OperatorReport> out;
  out.push_back(relation("weyl.UU", apply_U(a, apply_U(a2, psi)), apply_U(a2, apply_U(a, psi)),
                         translation_element(a), translation_element(a2), tol.translations));
  out.back().params["a"] = vec_json(a);
  out.back().params["a2"] = vec_json(a2);

  out.push_back(relation("weyl.VV", apply_V(b, apply_V(b2, psi)), apply_V(b2, apply_V(b, psi)), boost_element(b),
                         boost_element(b2), tol.phases));
  out.back().params["b"] = vec_json(b);
  out.back().params["b2"] = vec_json(b2);

  out.push_back(relation("weyl.VU", apply_V(b, apply_U(a, psi)), apply_U(a, apply_V(b, psi)), boost_element(b),
                         translation_element(a), tol.phases));
  out.back().params["a"] = vec_json(a);
  out.back().params["b"] = vec_json(b);

  out.push_back(relation("weyl.UW", apply_U(a, apply_W(params.c, params.d, psi)),
                         apply_W(params.c, params.d, apply_U(a, psi)), translation_element(a), central, tol.central));
  out.back().params["a"] = vec_json(a);

  out.push_back(relation("weyl.VW", apply_V(b, apply_W(params.c, params.d, psi)),
                         apply_W(params.c, params.d, apply_V(b, psi)), boost_element(b), central, tol.central));
  out.back().params["b"] = vec_json(b);
  for (std::size_t i = 3; i < 5; ++i) {
    out[i].params["c"] = params.c;
    out[i].params["d"] = params.d;
  }
  return out;
}

Wavefunction quantize_apply(const AlgebraElement& e, const Wavefunction& psi) {
  const GridSpec& spec = psi.spec();
  const Gradient g = gradient(psi.values(), spec);
  const double a1 = to_double(e.A(0)), a2 = to_double(e.A(1));
  const double b1 = to_double(e.B(0)), b2 = to_double(e.B(1));
  const double central = to_double(e.C) * spec.hbar + to_double(e.D) * spec.theta;
  const Complex minus_i_hbar = -kI * spec.hbar;
  ArrayXXcd out = minus_i_hbar * (a1 * g.d1 + a2 * g.d2);
  if (b1 != 0.0) out += b1 * position_values(0, psi.values(), g, spec);
  if (b2 != 0.0) out += b2 * position_values(1, psi.values(), g, spec);
  out += central * psi.values();
  return Wavefunction(spec, std::move(out));
}

OperatorReport quantized_commutator_check(const AlgebraElement& e1, const AlgebraElement& e2,
                                          const Wavefunction& psi, double tol) {
  const GridSpec& spec = psi.spec();
  const Cocycle z = extract_cocycle(e1, e2);
  const double z1 = to_double(z.z1), z2 = to_double(z.z2);
  const Complex target = kI * (spec.hbar * z1 + spec.theta * z2);
  const Wavefunction lhs = quantize_apply(e1, quantize_apply(e2, psi)) - quantize_apply(e2, quantize_apply(e1, psi));
  const Wavefunction expected = target * psi;

  OperatorReport r;
  r.name = "quantize.commutator";
  r.params = grid_json(spec);
  r.params["z1"] = z1;
  r.params["z2"] = z2;
  r.phase = target;
  r.max_error = max_error(lhs, expected);
  r.rel_error = relative_error(lhs, expected, psi);
  r.tol = tol;
  r.pass = r.rel_error <= tol;
  return r;
}

}  // namespace ncplane
