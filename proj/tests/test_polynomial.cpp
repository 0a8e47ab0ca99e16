#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncplane/observable.hpp"
#include "ncplane/random.hpp"
#include "ncplane/symplectic.hpp"

using namespace ncplane;

TEST_CASE("zero coefficients are never stored") {
  Observable f = q1() + p2();
  f -= q1();
  CHECK(f.size() == 1);
  CHECK((f - p2()).is_zero());
  CHECK(Observable(0).size() == 0);
  CHECK(Observable(Scalar(Rational(0))).is_zero());
}

TEST_CASE("products expand exactly") {
  const Observable f = (q1() + p2()) * (q1() - p2());
  CHECK(f == q1() * q1() - p2() * p2());
  CHECK(pow(q1() + 1, 3) == q1() * q1() * q1() + 3 * q1() * q1() + 3 * q1() + 1);
  CHECK(pow(q2(), 0) == Observable(1));
}

TEST_CASE("coefficients in theta and hbar multiply formally") {
  const Observable f = Observable(theta()) * q1();
  const Observable g = Observable(hbar() + 1) * q1();
  CHECK((f * g).coefficient({2, 0, 0, 0}) == theta() * hbar() + theta());
  CHECK((f * g).total_degree() == 2);
}

TEST_CASE("derivative") {
  const Observable f = q1() * q1() * p2() + Observable(theta()) * q2();
  CHECK(f.derivative(kQ1) == 2 * q1() * p2());
  CHECK(f.derivative(kQ2) == Observable(theta()));
  CHECK(f.derivative(kP1).is_zero());
  CHECK(Scalar(theta() * theta()).derivative(kTheta) == 2 * theta());
}

TEST_CASE("compose substitutes every variable") {
  const Observable f = q1() * q2();
  const std::array<Observable, 4> subs = {q1() + p1(), q2(), p1(), p2()};
  CHECK(f.compose(subs) == q1() * q2() + p1() * q2());
}

TEST_CASE("evaluate at a point") {
  const Observable f = q1() - Observable(Rational(1, 2) * theta()) * p2();
  CHECK(evaluate(f, PhasePoint(1, 0, 0, 2), 0.1, 1.0) == doctest::Approx(0.9));
  CHECK(evaluate(Scalar(theta() * hbar()), 2.0, 3.0) == doctest::Approx(6.0));
}

TEST_CASE("substitute_theta removes theta") {
  const Observable f = Observable(theta() * theta() + hbar()) * q1();
  CHECK(substitute_theta(f, 0) == Observable(hbar()) * q1());
  CHECK(substitute_theta(f, 2) == Observable(hbar() + 4) * q1());
}

TEST_CASE("ring axioms on random observables") {
  RandomSource rng(11);
  for (int i = 0; i < 100; ++i) {
    const Observable a = rng.observable(3), b = rng.observable(3), c = rng.observable(3);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("leibniz rule for the derivative") {
  RandomSource rng(12);
  for (int i = 0; i < 100; ++i) {
    const Observable a = rng.observable(3), b = rng.observable(3);
    for (int v = 0; v < 4; ++v) CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
  }
}
