#pragma once

#include <Eigen/Core>
#include <array>
#include <vector>

#include "ncplane/observable.hpp"

namespace ncplane {

using SymplecticMatrix = Eigen::Matrix<Scalar, 4, 4>;

/// Constant symplectic structure on R^4 with the noncommutative term
/// theta dp1 ^ dp2, held exactly in the formal parameter theta.
///
/// `form()` is the matrix M of the two-form and `bivector()` its exact
/// inverse Pi; M * Pi = Pi * M = 1. The Poisson bracket is
/// {f, g} = Pi^{ab} d_a f d_b g, oriented so that {q^i, p_j} = delta^i_j and
/// {q1, q2} = theta. Hamiltonian fields are xi_f = Pi df and contraction of a
/// field with the form is M xi, so xi_f contracted with the form is df.
class SymplecticStructure {
 public:
  /// theta-modified structure (formal theta).
  static SymplecticStructure modified();
  /// theta = 0: the canonical structure.
  static SymplecticStructure standard();

  const SymplecticMatrix& form() const { return form_; }
  const SymplecticMatrix& bivector() const { return bivector_; }

  /// Pi with theta and hbar substituted.
  Eigen::Matrix4d bivector_at(double theta_val, double hbar_val) const;

 private:
  SymplecticStructure(SymplecticMatrix form, SymplecticMatrix bivector)
      : form_(std::move(form)), bivector_(std::move(bivector)) {}

  SymplecticMatrix form_;
  SymplecticMatrix bivector_;
};

SymplecticStructure build_symplectic();

/// Exact inverse over the Scalar ring via the adjugate. Throws std::domain_error
/// unless the determinant is a nonzero rational constant.
SymplecticMatrix exact_inverse(const SymplecticMatrix& m);

Scalar determinant(const SymplecticMatrix& m);

/// Components along d/dq1, d/dq2, d/dp1, d/dp2.
struct VectorField {
  std::array<Observable, 4> components;

  friend VectorField operator+(const VectorField& a, const VectorField& b) {
    VectorField out;
    for (std::size_t i = 0; i < 4; ++i) out.components[i] = a.components[i] + b.components[i];
    return out;
  }
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.components == b.components; }
  friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }
};

/// Components along dq1, dq2, dp1, dp2.
using OneForm = std::array<Observable, 4>;

OneForm differential(const Observable& f);

VectorField hamiltonian_vector_field(const Observable& f,
                                     const SymplecticStructure& omega = SymplecticStructure::modified());

/// xi contracted into the form.
OneForm contract(const VectorField& xi, const SymplecticStructure& omega = SymplecticStructure::modified());

/// Returns f with df = xi contracted into the form and zero constant term.
/// Throws NonExactForm if the contracted one-form is not closed.
Observable contract_to_observable(const VectorField& xi,
                                  const SymplecticStructure& omega = SymplecticStructure::modified());

Observable poisson_bracket(const Observable& f, const Observable& g,
                           const SymplecticStructure& omega = SymplecticStructure::modified());

/// q^i -> q^i - 1/2 theta eps^{ij} p_j, p_i fixed. A ring homomorphism.
Observable bopp_shift(const Observable& f);

Observable jacobi_residual(const Observable& f, const Observable& g, const Observable& h,
                           const SymplecticStructure& omega = SymplecticStructure::modified());

double evaluate(const Observable& f, const PhasePoint& x, double theta_val, double hbar_val);

struct TrajectorySample {
  double t;
  PhasePoint x;
};

/// Fixed-step RK4 integration of dx^a/dt = Pi^{ab}(theta) d_b H from x0 to T.
/// The final step is shortened so the last sample lands exactly on T.
/// Throws std::invalid_argument for dt <= 0 or T < dt, NonFiniteState on blow-up.
std::vector<TrajectorySample> evolve(const Observable& hamiltonian, const PhasePoint& x0, double theta_val,
                                     double t_end, double dt, double hbar_val = 1.0);

}  // namespace ncplane
