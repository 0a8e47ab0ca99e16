#include "ncplane/symplectic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ncplane/errors.hpp"

namespace ncplane {
namespace {

Scalar half() { return Scalar(make_rational(1, 2)); }

// Laplace expansion along the first remaining row; fine for 4x4.
Scalar minor_determinant(const SymplecticMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() == 1) return m(rows[0], cols[0]);
  Scalar det;
  const std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (m(rows[0], cols[k]).is_zero()) continue;
    std::vector<int> sub_cols;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) sub_cols.push_back(cols[j]);
    Scalar term = m(rows[0], cols[k]) * minor_determinant(m, sub_rows, sub_cols);
    if (k % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

SymplecticMatrix zero_matrix() {
  SymplecticMatrix m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = Scalar();
  return m;
}

SymplecticMatrix form_matrix(const Scalar& t) {
  // M = [[0, -I], [I, Theta]], Theta = [[0, t], [-t, 0]].
  SymplecticMatrix m = zero_matrix();
  m(kQ1, kP1) = Scalar(-1);
  m(kQ2, kP2) = Scalar(-1);
  m(kP1, kQ1) = Scalar(1);
  m(kP2, kQ2) = Scalar(1);
  m(kP1, kP2) = t;
  m(kP2, kP1) = -t;
  return m;
}

}  // namespace

Scalar determinant(const SymplecticMatrix& m) { return minor_determinant(m, {0, 1, 2, 3}, {0, 1, 2, 3}); }

SymplecticMatrix exact_inverse(const SymplecticMatrix& m) {
  const Scalar det = determinant(m);
  if (!det.is_constant() || det.is_zero())
    throw std::domain_error("exact_inverse: determinant is not a nonzero constant");
  Rational inv_det = 1;
  inv_det /= det.constant_term();
  const Scalar scale(inv_det);

  SymplecticMatrix inv = zero_matrix();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      std::vector<int> rows, cols;
      for (int r = 0; r < 4; ++r)
        if (r != j) rows.push_back(r);
      for (int c = 0; c < 4; ++c)
        if (c != i) cols.push_back(c);
      Scalar cofactor = minor_determinant(m, rows, cols);
      if ((i + j) % 2 != 0) cofactor = -cofactor;
      inv(i, j) = cofactor * scale;
    }
  }
  return inv;
}

SymplecticStructure SymplecticStructure::modified() {
  SymplecticMatrix form = form_matrix(theta());
  SymplecticMatrix bivector = exact_inverse(form);
  return SymplecticStructure(std::move(form), std::move(bivector));
}

SymplecticStructure SymplecticStructure::standard() {
  SymplecticMatrix form = form_matrix(Scalar());
  SymplecticMatrix bivector = exact_inverse(form);
  return SymplecticStructure(std::move(form), std::move(bivector));
}

Eigen::Matrix4d SymplecticStructure::bivector_at(double theta_val, double hbar_val) const {
  Eigen::Matrix4d out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = evaluate(bivector_(i, j), theta_val, hbar_val);
  return out;
}

SymplecticStructure build_symplectic() { return SymplecticStructure::modified(); }

OneForm differential(const Observable& f) {
  return {f.derivative(kQ1), f.derivative(kQ2), f.derivative(kP1), f.derivative(kP2)};
}

VectorField hamiltonian_vector_field(const Observable& f, const SymplecticStructure& omega) {
  const OneForm df = differential(f);
  VectorField xi;
  for (int a = 0; a < 4; ++a) {
    Observable comp;
    for (int b = 0; b < 4; ++b) {
      const Scalar& pi = omega.bivector()(a, b);
      if (!pi.is_zero()) comp += Observable(pi) * df[b];
    }
    xi.components[a] = std::move(comp);
  }
  return xi;
}

OneForm contract(const VectorField& xi, const SymplecticStructure& omega) {
  OneForm alpha;
  for (int a = 0; a < 4; ++a) {
    Observable comp;
    for (int b = 0; b < 4; ++b) {
      const Scalar& m = omega.form()(a, b);
      if (!m.is_zero()) comp += Observable(m) * xi.components[b];
    }
    alpha[a] = std::move(comp);
  }
  return alpha;
}

Observable contract_to_observable(const VectorField& xi, const SymplecticStructure& omega) {
  const OneForm alpha = contract(xi, omega);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) {
      if (alpha[a].derivative(b) != alpha[b].derivative(a))
        throw NonExactForm("contract_to_observable: contracted form is not closed (d_" + std::to_string(b) +
                           " alpha_" + std::to_string(a) + " != d_" + std::to_string(a) + " alpha_" +
                           std::to_string(b) + ")");
    }
  }
  // Homotopy formula f(x) = int_0^1 x^a alpha_a(t x) dt: a degree-d term of
  // alpha_a contributes x^a * term / (d + 1).
  Observable f;
  for (std::size_t a = 0; a < 4; ++a) {
    for (const auto& [e, c] : alpha[a].terms()) {
      const int deg = e[0] + e[1] + e[2] + e[3];
      Observable::Exponents raised = e;
      raised[a] += 1;
      f.add_term(raised, c * Scalar(make_rational(1, deg + 1)));
    }
  }
  return f;
}

Observable poisson_bracket(const Observable& f, const Observable& g, const SymplecticStructure& omega) {
  const OneForm df = differential(f);
  const OneForm dg = differential(g);
  Observable out;
  for (int a = 0; a < 4; ++a) {
    if (df[a].is_zero()) continue;
    for (int b = 0; b < 4; ++b) {
      const Scalar& pi = omega.bivector()(a, b);
      if (pi.is_zero() || dg[b].is_zero()) continue;
      out += Observable(pi) * df[a] * dg[b];
    }
  }
  return out;
}

Observable bopp_shift(const Observable& f) {
  const Observable h = Observable(half() * theta());
  return f.compose<Observable>({q1() - h * p2(), q2() + h * p1(), p1(), p2()});
}

Observable jacobi_residual(const Observable& f, const Observable& g, const Observable& h,
                           const SymplecticStructure& omega) {
  return poisson_bracket(f, poisson_bracket(g, h, omega), omega) +
         poisson_bracket(g, poisson_bracket(h, f, omega), omega) +
         poisson_bracket(h, poisson_bracket(f, g, omega), omega);
}

double evaluate(const Observable& f, const PhasePoint& x, double theta_val, double hbar_val) {
  return f.evaluate<double>({x[0], x[1], x[2], x[3]},
                            [&](const Scalar& c) { return evaluate(c, theta_val, hbar_val); });
}

std::vector<TrajectorySample> evolve(const Observable& hamiltonian, const PhasePoint& x0, double theta_val,
                                     double t_end, double dt, double hbar_val) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("evolve: dt must be positive and finite");
  if (!(t_end >= dt) || !std::isfinite(t_end)) throw std::invalid_argument("evolve: T must be finite and >= dt");
  if (!x0.allFinite() || !std::isfinite(theta_val) || !std::isfinite(hbar_val))
    throw std::invalid_argument("evolve: initial state and parameters must be finite");

  const Eigen::Matrix4d pi = SymplecticStructure::modified().bivector_at(theta_val, hbar_val);
  const OneForm grad = differential(hamiltonian);
  auto rhs = [&](const PhasePoint& x) {
    PhasePoint dh;
    for (int b = 0; b < 4; ++b) dh[b] = evaluate(grad[b], x, theta_val, hbar_val);
    return PhasePoint(pi * dh);
  };

  const auto full_steps = static_cast<long>(std::floor(t_end / dt));
  const double remainder = t_end - static_cast<double>(full_steps) * dt;
  const bool partial = remainder > 1e-9 * dt;

  std::vector<TrajectorySample> out;
  out.reserve(full_steps + 2);
  out.push_back({0.0, x0});
  PhasePoint x = x0;
  const long total = full_steps + (partial ? 1 : 0);
  for (long k = 0; k < total; ++k) {
    const double h = (k < full_steps) ? dt : remainder;
    const PhasePoint k1 = rhs(x);
    const PhasePoint k2 = rhs(x + 0.5 * h * k1);
    const PhasePoint k3 = rhs(x + 0.5 * h * k2);
    const PhasePoint k4 = rhs(x + h * k3);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!x.allFinite())
      throw NonFiniteState("evolve: state left finite range at step " + std::to_string(k + 1));
    const double t = (k + 1 < total || !partial) ? static_cast<double>(k + 1) * dt : t_end;
    out.push_back({t, x});
  }
  return out;
}

}  // namespace ncplane
