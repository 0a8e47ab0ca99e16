// One line per acceptance criterion; exit status is nonzero if any fails.
#include <fmt/format.h>

#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "malformed_corpus.hpp"
#include "ncplane/group.hpp"
#include "ncplane/hilbert.hpp"
#include "ncplane/parser.hpp"
#include "ncplane/random.hpp"
#include "ncplane/suite.hpp"
#include "ncplane/symplectic.hpp"

using namespace ncplane;
using Eigen::Vector2d;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome exact_bracket_identities() {
  RandomSource rng(1001);
  const auto omega = SymplecticStructure::modified();
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    const Observable f = rng.observable(3), g = rng.observable(3), h = rng.observable(3);
    if (!(poisson_bracket(f, g, omega) + poisson_bracket(g, f, omega)).is_zero()) ++failures;
    if (poisson_bracket(f, g * h, omega) != poisson_bracket(f, g, omega) * h + g * poisson_bracket(f, h, omega))
      ++failures;
    if (!jacobi_residual(f, g, h, omega).is_zero()) ++failures;
  }
  return {failures == 0, fmt::format("200 samples x 3 identities, {} nonzero residuals", failures)};
}

Outcome coordinate_brackets() {
  const auto standard = SymplecticStructure::standard();
  const Observable q[2] = {bopp_shift(q1()), bopp_shift(q2())};
  const Observable p[2] = {p1(), p2()};
  const Observable th(theta());
  bool ok = true;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Observable qq = i == j ? Observable() : (i == 0 ? th : -th);
      ok &= poisson_bracket(q[i], q[j], standard) == qq;
      ok &= poisson_bracket(p[i], p[j], standard).is_zero();
      ok &= poisson_bracket(q[i], p[j], standard) == Observable(i == j ? 1 : 0);
    }
  }
  return {ok, fmt::format("{{q'1,q'2}} = {}, {{p1,p2}} = {}, {{q'1,p1}} = {}",
                          format(poisson_bracket(q[0], q[1], standard)), format(poisson_bracket(p[0], p[1], standard)),
                          format(poisson_bracket(q[0], p[0], standard)))};
}

Outcome bopp_oracle() {
  RandomSource rng(1003);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    const Observable f = rng.observable(3), g = rng.observable(3);
    if (bopp_shift(poisson_bracket(f, g)) != poisson_bracket(bopp_shift(f), bopp_shift(g), SymplecticStructure::standard()))
      ++failures;
  }
  return {failures == 0, fmt::format("100 pairs, {} mismatches", failures)};
}

Outcome cocycle_and_group() {
  RandomSource rng(1004);
  int defect = 0, commutator = 0, associativity = 0;
  for (int i = 0; i < 200; ++i)
    if (!homomorphism_defect(rng.algebra_element(), rng.algebra_element()).is_zero()) ++defect;
  for (int i = 0; i < 200; ++i) {
    const auto g = rng.group_element(), h = rng.group_element();
    AlgebraElement e1, e2;
    e1.A = g.a;
    e1.B = g.b;
    e2.A = h.a;
    e2.B = h.b;
    const auto comm = group_commutator(g, h);
    const Cocycle z = extract_cocycle(e1, e2);
    if (!comm.a.isZero() || !comm.b.isZero() || comm.c != z.z1 || comm.d != z.z2) ++commutator;
  }
  for (int i = 0; i < 500; ++i) {
    const auto g = rng.group_element(), h = rng.group_element(), k = rng.group_element();
    if (group_multiply(group_multiply(g, h), k) != group_multiply(g, group_multiply(h, k))) ++associativity;
  }
  return {defect + commutator + associativity == 0,
          fmt::format("defect {}/200, commutator {}/200, associativity {}/500 failures", defect, commutator,
                      associativity)};
}

Outcome canonical_commutators() {
  const GridSpec spec{256, 20.0, 0.1, 1.0};
  const Wavefunction psi = gaussian(spec, Vector2d::Zero(), Vector2d::Zero(), 1.0);
  const auto qq = commutator_check(CommutatorKind::kQQ, psi, 1e-6);
  const auto qp = commutator_check(CommutatorKind::kQP, psi, 1e-6);
  const auto pp = commutator_check(CommutatorKind::kPP, psi, 1e-10);
  return {qq.pass && qp.pass && pp.pass,
          fmt::format("qq {:.2e} (<1e-6), qp {:.2e} (<1e-6), pp {:.2e} (<1e-10)", qq.rel_error, qp.rel_error,
                      pp.rel_error)};
}

Outcome weyl_phases() {
  RandomSource rng(1006);
  double uu = 0, phases = 0, central = 0;
  bool ok = true;
  for (double th : {0.1, 0.3, 0.5}) {
    const Wavefunction psi = gaussian({256, 20.0, th, 1.0}, Vector2d(0.3, -0.2), Vector2d(0.2, 0.1), 1.0);
    for (int i = 0; i < 10; ++i) {
      auto bounded = [&] {
        Vector2d v(rng.uniform(-1, 1), rng.uniform(-1, 1));
        return v.norm() > 1 ? Vector2d(v / v.norm()) : v;
      };
      const WeylParams p{bounded(), bounded(), bounded(), bounded(), rng.uniform(-1, 1), rng.uniform(-1, 1)};
      const auto r = weyl_check(p, psi, {1e-10, 1e-8, 1e-13});
      for (const auto& x : r) ok &= x.pass;
      const Complex vv = std::exp(Complex(0, th * (p.b(0) * p.b2(1) - p.b(1) * p.b2(0))));
      const Complex vu = std::exp(Complex(0, p.b.dot(p.a)));
      uu = std::max(uu, r[0].rel_error);
      phases = std::max({phases, std::abs(r[1].phase - vv), std::abs(r[2].phase - vu)});
      central = std::max({central, r[3].rel_error, r[4].rel_error});
    }
  }
  ok &= uu < 1e-10 && phases < 1e-8 && central < 1e-13;
  return {ok, fmt::format("UU {:.2e}, VV/VU phase {:.2e}, W {:.2e} over 30 samples", uu, phases, central)};
}

Outcome theta_zero_regression() {
  RunConfig cfg;
  cfg.theta = 0.0;
  SuiteReport report;
  run_representation_suite(cfg, report);
  const Wavefunction psi = gaussian({256, 20.0, 0.0, 1.0}, Vector2d::Zero(), Vector2d::Zero(), 1.0);
  const auto qq = commutator_check(CommutatorKind::kQQ, psi, 1e-10);
  std::size_t failed = 0;
  for (const auto& c : report.checks) failed += !c.pass;
  return {report.pass() && qq.pass,
          fmt::format("{} representation checks, {} failed; qq {:.2e}", report.checks.size(), failed, qq.rel_error)};
}

Outcome parser_contract() {
  RandomSource rng(1008);
  int round_trip = 0;
  for (int i = 0; i < 500; ++i) {
    const Observable f = rng.observable(4, 6);
    if (parse(format(f)) != f) ++round_trip;
  }
  int corpus_failures = 0;
  for (const auto& c : corpus::kMalformed) {
    std::ostringstream out, err;
    const int code = cli::run({"bracket", c.source, "p1"}, out, err);
    if (code != cli::kParseFailure || err.str().find(fmt::format("at offset {}", c.offset)) == std::string::npos)
      ++corpus_failures;
  }
  return {round_trip == 0 && corpus_failures == 0,
          fmt::format("round trip {}/500 failures, malformed corpus {}/{} failures", round_trip, corpus_failures,
                      corpus::kMalformed.size())};
}

Outcome dynamics() {
  const Observable oscillator = constant(Rational(1, 2)) * (p1() * p1() + q1() * q1());
  const PhasePoint x0(1, 0, 0, 0);
  const double closure = (evolve(oscillator, x0, 0.0, 2 * M_PI, 1e-3).back().x - x0).norm();

  const Observable isotropic = constant(Rational(1, 2)) * (p1() * p1() + p2() * p2() + q1() * q1() + q2() * q2());
  const PhasePoint y0(1, 0.5, 0.2, -0.4);
  const double e0 = evaluate(isotropic, y0, 0.3, 1.0);
  double drift = 0;
  for (const auto& s : evolve(isotropic, y0, 0.3, 10.0, 1e-3))
    drift = std::max(drift, std::abs(evaluate(isotropic, s.x, 0.3, 1.0) - e0));
  return {closure < 1e-6 && drift < 1e-8, fmt::format("orbit closure {:.2e} (<1e-6), energy drift {:.2e} (<1e-8)",
                                                      closure, drift)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"exact bracket identities", exact_bracket_identities},
      {"coordinate brackets of shifted coordinates", coordinate_brackets},
      {"bopp shift intertwines the brackets", bopp_oracle},
      {"cocycle, defect and group law", cocycle_and_group},
      {"canonical commutators on the grid", canonical_commutators},
      {"weyl relation phases", weyl_phases},
      {"theta -> 0 regression", theta_zero_regression},
      {"parser round trip and malformed corpus", parser_contract},
      {"classical dynamics", dynamics},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << fmt::format("[{}] criterion {}: {} ({})\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                             o.detail);
  }
  std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
