#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ncplane/errors.hpp"
#include "ncplane/parser.hpp"
#include "ncplane/random.hpp"
#include "ncplane/symplectic.hpp"
#include "oracles.hpp"

using namespace ncplane;

namespace {
Observable half_theta() { return Observable(Rational(1, 2) * theta()); }
}  // namespace

TEST_CASE("form and bivector are mutually inverse") {
  const auto s = build_symplectic();
  const SymplecticMatrix product = s.form() * s.bivector();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(product(i, j) == Scalar(i == j ? 1 : 0));
}

TEST_CASE("form entries") {
  const auto s = build_symplectic();
  const auto& m = s.form();
  CHECK(m(kP1, kQ1) == Scalar(1));
  CHECK(m(kP1, kP2) == theta());
  CHECK(m(kP2, kP1) == -theta());
  CHECK(m(kQ1, kQ2) == Scalar(0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(m(i, j) == -m(j, i));
}

TEST_CASE("bivector carries theta between positions") {
  const auto s = build_symplectic();
  const auto& pi = s.bivector();
  CHECK(pi(kQ1, kQ2) == theta());
  CHECK(pi(kQ1, kP1) == Scalar(1));
  CHECK(pi(kP1, kP2) == Scalar(0));
  const Eigen::Matrix4d flat = build_symplectic().bivector_at(0.0, 1.0);
  Eigen::Matrix4d canonical = Eigen::Matrix4d::Zero();
  canonical(0, 2) = canonical(1, 3) = 1;
  canonical(2, 0) = canonical(3, 1) = -1;
  CHECK(flat == canonical);
}

TEST_CASE("exact_inverse rejects singular matrices") {
  SymplecticMatrix m = SymplecticMatrix::Zero();
  CHECK_THROWS_AS(exact_inverse(m), std::domain_error);
  CHECK(determinant(build_symplectic().form()) == Scalar(1));
}

TEST_CASE("hamiltonian vector field examples") {
  const VectorField zero = hamiltonian_vector_field(Observable(1));
  for (const auto& c : zero.components) CHECK(c.is_zero());

  const VectorField xi = hamiltonian_vector_field(q1());
  CHECK(xi.components[kQ1].is_zero());
  CHECK(xi.components[kQ2] == -Observable(theta()));
  CHECK(xi.components[kP1] == Observable(-1));
  CHECK(xi.components[kP2].is_zero());
}

TEST_CASE("translation generator gives the constant field") {
  const Rational a1(2), a2(-3), b1(1, 2), b2(5);
  const Observable f = constant(a1) * p1() + constant(a2) * p2() + constant(b1) * (q1() + Observable(theta()) * p2()) +
                       constant(b2) * (q2() - Observable(theta()) * p1());
  const VectorField xi = hamiltonian_vector_field(f);
  CHECK(xi.components[kQ1] == constant(a1));
  CHECK(xi.components[kQ2] == constant(a2));
  CHECK(xi.components[kP1] == constant(-b1));
  CHECK(xi.components[kP2] == constant(-b2));
  CHECK(contract_to_observable(xi) == f);
}

TEST_CASE("contract_to_observable") {
  CHECK(contract_to_observable(VectorField{}).is_zero());
  VectorField dilation;
  dilation.components[kQ1] = q1();
  dilation.components[kP1] = -p1();
  CHECK_THROWS_AS(contract_to_observable(dilation), NonExactForm);
}

TEST_CASE("contract inverts the vector field map") {
  RandomSource rng(21);
  for (int i = 0; i < 50; ++i) {
    const Observable f = rng.observable(3);
    CHECK(contract(hamiltonian_vector_field(f)) == differential(f));
  }
}

TEST_CASE("bracket examples") {
  CHECK(poisson_bracket(p1(), p2()).is_zero());
  CHECK(poisson_bracket(q1() * p2(), q2() * p1()) == q2() * p2() - q1() * p1() + Observable(theta()) * p1() * p2());
  CHECK(poisson_bracket(q1(), q2()) == Observable(theta()));
  const Observable bq1 = q1() - half_theta() * p2(), bq2 = q2() + half_theta() * p1();
  CHECK(poisson_bracket(bq1, bq2, SymplecticStructure::standard()) == Observable(theta()));
  CHECK(poisson_bracket(bq1, bq2) == Observable(2 * theta()));
}

TEST_CASE("bracket evaluated at a point") {
  const Observable h = poisson_bracket(q1() * p2(), q2() * p1());
  CHECK(evaluate(h, PhasePoint(1, 2, 3, 4), 0.5, 1.0) == doctest::Approx(11.0));
}

TEST_CASE("bopp shift examples") {
  CHECK(bopp_shift(q1()) == q1() - half_theta() * p2());
  CHECK(bopp_shift(p1()) == p1());
  CHECK(bopp_shift(q1() * q2()) == q1() * q2() + half_theta() * q1() * p1() - half_theta() * q2() * p2() -
                                       Observable(Rational(1, 4) * theta() * theta()) * p1() * p2());
}

TEST_CASE("jacobi residual examples") {
  CHECK(jacobi_residual(q1(), q2(), p1()).is_zero());
  CHECK(jacobi_residual(q1() * p1(), q2() * p2(), p1() * p2()).is_zero());
  CHECK(jacobi_residual(q1() * q1(), p2() * q2(), Observable(1)).is_zero());
}

TEST_CASE("bracket and vector field agree with the hand-written formulas") {
  RandomSource rng(22);
  for (int i = 0; i < 200; ++i) {
    const Observable f = rng.observable(3), g = rng.observable(3);
    CHECK(poisson_bracket(f, g) == oracle::bracket(f, g));
    CHECK(poisson_bracket(f, g, SymplecticStructure::standard()) == oracle::bracket(f, g, false));
    const auto expected = oracle::vector_field(f);
    const auto xi = hamiltonian_vector_field(f);
    for (int a = 0; a < 4; ++a) CHECK(xi.components[a] == expected[a]);
  }
}

TEST_CASE("bopp shift agrees with numeric substitution") {
  RandomSource rng(23);
  for (int i = 0; i < 100; ++i) {
    const Observable f = rng.observable(3);
    const PhasePoint x(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
    const double th = rng.uniform(-1, 1), hb = rng.uniform(0.5, 2);
    CHECK(evaluate(bopp_shift(f), x, th, hb) == doctest::Approx(oracle::bopp_value(f, x, th, hb)).epsilon(1e-10));
  }
}

TEST_CASE("bracket identities on random observables") {
  RandomSource rng(24);
  for (int i = 0; i < 200; ++i) {
    const Observable f = rng.observable(3), g = rng.observable(3), h = rng.observable(3);
    CHECK((poisson_bracket(f, g) + poisson_bracket(g, f)).is_zero());
    CHECK(poisson_bracket(f, g * h) == poisson_bracket(f, g) * h + g * poisson_bracket(f, h));
    CHECK(jacobi_residual(f, g, h).is_zero());
    CHECK(poisson_bracket(f, Observable(rng.scalar())).is_zero());
  }
}

TEST_CASE("vector field round trip recovers the observable up to its constant") {
  RandomSource rng(25);
  for (int i = 0; i < 200; ++i) {
    const Observable f = rng.observable(3);
    CHECK(contract_to_observable(hamiltonian_vector_field(f)) == f - Observable(f.constant_term()));
  }
}

TEST_CASE("bopp shift intertwines the two brackets") {
  RandomSource rng(26);
  const auto standard = SymplecticStructure::standard();
  for (int i = 0; i < 100; ++i) {
    const Observable f = rng.observable(3), g = rng.observable(3);
    CHECK(bopp_shift(poisson_bracket(f, g)) == poisson_bracket(bopp_shift(f), bopp_shift(g), standard));
    CHECK(substitute_theta(poisson_bracket(f, g), 0) ==
          poisson_bracket(substitute_theta(f, 0), substitute_theta(g, 0), standard));
  }
}

TEST_CASE("evolve: free particle moves on straight lines") {
  const Observable h = constant(Rational(1, 2)) * (p1() * p1() + p2() * p2());
  const PhasePoint x0(0.5, -1.0, 0.3, 0.7);
  const auto path = evolve(h, x0, 0.4, 2.0, 0.01);
  REQUIRE(path.size() >= 2);
  CHECK(path.front().t == 0.0);
  CHECK(path.back().t == doctest::Approx(2.0).epsilon(1e-15));
  for (const auto& s : path) {
    CHECK(s.x(0) == doctest::Approx(0.5 + 0.3 * s.t).epsilon(1e-12));
    CHECK(s.x(1) == doctest::Approx(-1.0 + 0.7 * s.t).epsilon(1e-12));
    CHECK(s.x(2) == doctest::Approx(0.3).epsilon(1e-14));
  }
}

TEST_CASE("evolve: oscillator closes after one period") {
  const Observable h = constant(Rational(1, 2)) * (p1() * p1() + q1() * q1());
  const PhasePoint x0(1, 0, 0, 0);
  const auto path = evolve(h, x0, 0.0, 2 * M_PI, 1e-3);
  CHECK((path.back().x - x0).norm() < 1e-6);
}

TEST_CASE("evolve: isotropic oscillator conserves energy with theta") {
  const Observable h = constant(Rational(1, 2)) * (p1() * p1() + p2() * p2() + q1() * q1() + q2() * q2());
  const PhasePoint x0(1, 0.5, 0.2, -0.4);
  const double e0 = evaluate(h, x0, 0.3, 1.0);
  double drift = 0;
  for (const auto& s : evolve(h, x0, 0.3, 10.0, 1e-3)) drift = std::max(drift, std::abs(evaluate(h, s.x, 0.3, 1.0) - e0));
  CHECK(drift < 1e-8);
}

TEST_CASE("evolve: energy error shrinks like dt^4") {
  const Observable h = constant(Rational(1, 2)) * (p1() * p1() + p2() * p2() + q1() * q1() + q2() * q2()) +
                       constant(Rational(1, 4)) * q1() * q1() * q1() * q1();
  const PhasePoint x0(1, 0, 0, 1);
  auto error = [&](double dt) {
    const auto path = evolve(h, x0, 0.3, 2.0, dt);
    return std::abs(evaluate(h, path.back().x, 0.3, 1.0) - evaluate(h, x0, 0.3, 1.0));
  };
  const double ratio = error(0.02) / error(0.01);
  CHECK(ratio > 8.0);
}

TEST_CASE("evolve: invalid arguments and blow-up") {
  const Observable h = q1() * q1();
  CHECK_THROWS_AS(evolve(h, PhasePoint::Zero(), 0.1, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(evolve(h, PhasePoint::Zero(), 0.1, 0.01, 0.1), std::invalid_argument);
  const Observable stiff = pow(p1(), 4) + pow(q1(), 4);
  CHECK_THROWS_AS(evolve(stiff, PhasePoint(10, 0, 10, 0), 0.0, 10.0, 0.5), NonFiniteState);
}
