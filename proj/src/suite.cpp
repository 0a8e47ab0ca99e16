#include "ncplane/suite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ncplane/errors.hpp"
#include "ncplane/group.hpp"
#include "ncplane/hilbert.hpp"
#include "ncplane/parser.hpp"
#include "ncplane/random.hpp"
#include "ncplane/symplectic.hpp"

namespace ncplane {
namespace {

constexpr int kPairs = 200;
constexpr int kBoppPairs = 100;
constexpr int kGroupTriples = 500;
constexpr int kRoundTrips = 500;
constexpr int kQuantizedPairs = 50;
constexpr int kWeylSamples = 10;
constexpr double kSigma = 1.0;
constexpr double kRoundOffFloor = 1e-12;

double numeric_tol(const RunConfig& cfg, double nominal) { return cfg.tol.value_or(nominal); }

// Counts failures of an exact identity over `samples` draws.
template <class Sample>
Check count_failures(const std::string& name, int samples, Sample&& sample) {
  int failures = 0;
  for (int i = 0; i < samples; ++i)
    if (!sample()) ++failures;
  return make_check(name, {{"samples", samples}}, failures, 0, failures, 0.0);
}

Observable drop_constant(const Observable& f) { return f - Observable(f.constant_term()); }

}  // namespace

std::string version() { return NCPLANE_VERSION; }

void RunConfig::validate() const {
  GridSpec{grid_n, box_l, theta, hbar}.validate();
  if (tol && !(*tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (format != "text" && format != "json") throw std::invalid_argument("format must be text or json");
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j = {{"theta", theta}, {"hbar", hbar}, {"grid_n", grid_n},
                      {"box_l", box_l}, {"seed", seed}, {"format", format}};
  j["tol"] = tol ? nlohmann::json(*tol) : nlohmann::json(nullptr);
  return j;
}

void run_algebra_suite(const RunConfig& cfg, SuiteReport& report) {
  RandomSource rng(cfg.seed);
  const SymplecticStructure modified = SymplecticStructure::modified();
  const SymplecticStructure canonical = SymplecticStructure::standard();

  report.checks.push_back(count_failures("algebra.antisymmetry", kPairs, [&] {
    const Observable f = rng.observable(3), g = rng.observable(3);
    return (poisson_bracket(f, g, modified) + poisson_bracket(g, f, modified)).is_zero();
  }));
  report.checks.push_back(count_failures("algebra.leibniz", kPairs, [&] {
    const Observable f = rng.observable(3), g = rng.observable(3), h = rng.observable(3);
    return poisson_bracket(f, g * h, modified) ==
           poisson_bracket(f, g, modified) * h + g * poisson_bracket(f, h, modified);
  }));
  report.checks.push_back(count_failures("algebra.jacobi", kPairs, [&] {
    return jacobi_residual(rng.observable(3), rng.observable(3), rng.observable(3), modified).is_zero();
  }));
  report.checks.push_back(count_failures("algebra.vector_field_round_trip", kPairs, [&] {
    const Observable f = rng.observable(3);
    return contract_to_observable(hamiltonian_vector_field(f, modified), modified) == drop_constant(f);
  }));
  report.checks.push_back(count_failures("algebra.bopp_oracle", kBoppPairs, [&] {
    const Observable f = rng.observable(3), g = rng.observable(3);
    return bopp_shift(poisson_bracket(f, g, modified)) ==
           poisson_bracket(bopp_shift(f), bopp_shift(g), canonical);
  }));
  report.checks.push_back(count_failures("algebra.theta_zero_limit", kPairs, [&] {
    const Observable f = rng.observable(3), g = rng.observable(3);
    return substitute_theta(poisson_bracket(f, g, modified), 0) ==
           poisson_bracket(substitute_theta(f, 0), substitute_theta(g, 0), canonical);
  }));

  // Coordinate brackets in both realisations.
  const Observable q[2] = {q1(), q2()};
  const Observable p[2] = {p1(), p2()};
  const Observable bq[2] = {bopp_shift(q1()), bopp_shift(q2())};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const std::string idx = std::to_string(i + 1) + std::to_string(j + 1);
      const std::string qq = i == j ? "0" : (i == 0 ? "theta" : "-theta");
      const std::string qp = i == j ? "1" : "0";
      report.checks.push_back(make_exact_check("algebra.coordinate_bracket.qq" + idx, {{"chart", "noncommutative"}},
                                               format(poisson_bracket(q[i], q[j], modified)), qq));
      report.checks.push_back(make_exact_check("algebra.coordinate_bracket.qq" + idx, {{"chart", "bopp"}},
                                               format(poisson_bracket(bq[i], bq[j], canonical)), qq));
      report.checks.push_back(make_exact_check("algebra.coordinate_bracket.pp" + idx, {{"chart", "noncommutative"}},
                                               format(poisson_bracket(p[i], p[j], modified)), "0"));
      report.checks.push_back(make_exact_check("algebra.coordinate_bracket.qp" + idx, {{"chart", "noncommutative"}},
                                               format(poisson_bracket(q[i], p[j], modified)), qp));
      report.checks.push_back(make_exact_check("algebra.coordinate_bracket.qp" + idx, {{"chart", "bopp"}},
                                               format(poisson_bracket(bq[i], p[j], canonical)), qp));
    }
  }

  report.checks.push_back(count_failures("parser.round_trip", kRoundTrips, [&] {
    const Observable f = rng.observable(4);
    return parse(format(f)) == f;
  }));
}

void run_group_suite(const RunConfig& cfg, SuiteReport& report) {
  RandomSource rng(cfg.seed + 1);

  report.checks.push_back(count_failures("group.associativity", kGroupTriples, [&] {
    const auto g = rng.group_element(), h = rng.group_element(), k = rng.group_element();
    return group_multiply(group_multiply(g, h), k) == group_multiply(g, group_multiply(h, k));
  }));
  report.checks.push_back(count_failures("group.inverse", kPairs, [&] {
    const auto g = rng.group_element();
    const auto id = GroupElement<Rational>::identity();
    return group_multiply(g, g.inverse()) == id && group_multiply(g.inverse(), g) == id;
  }));
  report.checks.push_back(count_failures("group.cocycle_antisymmetry", kPairs, [&] {
    const auto e1 = rng.algebra_element(), e2 = rng.algebra_element();
    return extract_cocycle(e1, e2) == -extract_cocycle(e2, e1);
  }));
  report.checks.push_back(count_failures("group.cocycle_bilinearity", kPairs, [&] {
    const auto e1 = rng.algebra_element(), e2 = rng.algebra_element(), e3 = rng.algebra_element();
    return extract_cocycle(e1 + e2, e3) == extract_cocycle(e1, e3) + extract_cocycle(e2, e3);
  }));
  report.checks.push_back(count_failures("group.cocycle_closed_form", kPairs, [&] {
    const auto e1 = rng.algebra_element(), e2 = rng.algebra_element();
    return extract_cocycle(e1, e2) == cocycle_closed_form(e1, e2);
  }));
  report.checks.push_back(count_failures("group.homomorphism_defect", kPairs, [&] {
    return homomorphism_defect(rng.algebra_element(), rng.algebra_element()).is_zero();
  }));
  report.checks.push_back(count_failures("group.commutator_matches_cocycle", kPairs, [&] {
    const auto g = rng.group_element(), h = rng.group_element();
    AlgebraElement e1, e2;
    e1.A = g.a;
    e1.B = g.b;
    e2.A = h.a;
    e2.B = h.b;
    const auto comm = group_commutator(g, h);
    const Cocycle z = extract_cocycle(e1, e2);
    return comm.a.isZero() && comm.b.isZero() && comm.c == z.z1 && comm.d == z.z2;
  }));
  report.checks.push_back(count_failures("group.algebra_jacobi", kPairs, [&] {
    const auto x = rng.algebra_element(), y = rng.algebra_element(), z = rng.algebra_element();
    const AlgebraElement sum = algebra_bracket(x, algebra_bracket(y, z)) + algebra_bracket(y, algebra_bracket(z, x)) +
                               algebra_bracket(z, algebra_bracket(x, y));
    return sum == AlgebraElement{};
  }));

  // Abelian bracket leaves the obstruction; the ordered double sum doubles z2.
  AlgebraElement bx, by, ax;
  bx.B << 1, 0;
  by.B << 0, 1;
  ax.A << 1, 0;
  report.checks.push_back(make_exact_check("group.abelian_defect.position_momentum", {{"e1", "A=(1,0)"}, {"e2", "B=(1,0)"}},
                                           format(homomorphism_defect(ax, bx, BracketMode::kAbelian)), "-1"));
  report.checks.push_back(make_exact_check("group.abelian_defect.momentum_momentum", {{"e1", "B=(1,0)"}, {"e2", "B=(0,1)"}},
                                           format(homomorphism_defect(bx, by, BracketMode::kAbelian)), "theta"));
  const Cocycle literal = cocycle_literal_sum(bx, by);
  report.checks.push_back(make_exact_check(
      "group.literal_double_sum_z2", {{"computed_z2", to_string(extract_cocycle(bx, by).z2)}, {"note", "ordered double sum"}},
      to_string(literal.z2), "2"));
}

void run_representation_suite(const RunConfig& cfg, SuiteReport& report) {
  const GridSpec spec{cfg.grid_n, cfg.box_l, cfg.theta, cfg.hbar};
  spec.validate();
  RandomSource rng(cfg.seed + 2);
  const Wavefunction psi = gaussian(spec, {0.5, -0.3}, {0.4, -0.2}, kSigma);
  const Wavefunction real_psi = gaussian(spec, {0.0, 0.0}, {0.0, 0.0}, kSigma);

  // Unitarity.
  double worst = 0.0;
  for (int s = 0; s < kWeylSamples; ++s) {
    const Eigen::Vector2d a(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const Eigen::Vector2d b(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const double c = rng.uniform(-1, 1), d = rng.uniform(-1, 1);
    worst = std::max({worst, std::abs(apply_U(a, psi).norm() - 1.0), std::abs(apply_V(b, psi).norm() - 1.0),
                      std::abs(apply_W(c, d, psi).norm() - 1.0)});
  }
  report.checks.push_back(
      make_check("rep.unitarity", {{"samples", kWeylSamples}}, worst, 0.0, worst, numeric_tol(cfg, 1e-12)));

  // Composition laws.
  {
    const Eigen::Vector2d a(0.7, -0.4), a2(-0.3, 0.9), b(0.6, 0.2), b2(-0.5, 0.8);
    const Wavefunction uu = apply_U(a, apply_U(a2, psi));
    const double u_err = (uu - apply_U(a + a2, psi)).norm();
    report.checks.push_back(make_check("rep.U_composition", {}, u_err, 0.0, u_err, numeric_tol(cfg, 1e-10)));
    // V(b)V(b') = exp(i theta/2 (b1 b'2 - b2 b'1)) V(b + b').
    const Complex half_phase = std::exp(Complex(0.0, 0.5 * spec.theta * (b(0) * b2(1) - b(1) * b2(0))));
    const double v_err = (apply_V(b, apply_V(b2, psi)) - half_phase * apply_V(b + b2, psi)).norm();
    report.checks.push_back(make_check("rep.V_composition", {}, v_err, 0.0, v_err, numeric_tol(cfg, 1e-8)));
    const double w_err = (apply_W(0.3, 0.7, apply_W(-1.1, 0.4, psi)) - apply_W(-0.8, 1.1, psi)).norm();
    report.checks.push_back(make_check("rep.W_composition", {}, w_err, 0.0, w_err, numeric_tol(cfg, 1e-13)));
  }

  // Weyl relations: the documented examples, then random parameters.
  WeylTolerances wt;
  if (cfg.tol) wt = {*cfg.tol, *cfg.tol, *cfg.tol};
  std::vector<WeylParams> weyl_params;
  weyl_params.push_back({{1, 0}, {0, 1}, {1, 0}, {0, 1}, 0.3, 0.7});
  weyl_params.push_back({{0.5, 0}, {0, 0.5}, {1, 0}, {0, 1}, -0.2, 0.4});
  for (int s = 0; s < kWeylSamples; ++s) {
    auto unit = [&] {
      Eigen::Vector2d v(rng.uniform(-1, 1), rng.uniform(-1, 1));
      return v.norm() > 1.0 ? Eigen::Vector2d(v / v.norm()) : v;
    };
    WeylParams p;
    p.a = unit();
    p.a2 = unit();
    p.b = unit();
    p.b2 = unit();
    p.c = rng.uniform(-1, 1);
    p.d = rng.uniform(-1, 1);
    weyl_params.push_back(p);
  }
  for (const auto& p : weyl_params)
    for (const auto& r : weyl_check(p, psi, wt)) report.checks.push_back(to_check(r));

  // Commutation relations.
  const bool commutative = spec.theta == 0.0;
  report.checks.push_back(to_check(
      commutator_check(CommutatorKind::kQQ, psi, numeric_tol(cfg, commutative ? 1e-10 : 1e-6))));
  report.checks.push_back(to_check(commutator_check(CommutatorKind::kPP, psi, numeric_tol(cfg, 1e-10))));
  report.checks.push_back(to_check(commutator_check(CommutatorKind::kQP, psi, numeric_tol(cfg, 1e-6))));

  // Expectation values on the reference states.
  {
    const double p_err = std::abs(expectation(psi, apply_momentum(0, psi)) - Complex(0.4 * spec.hbar, 0.0));
    report.checks.push_back(make_check("rep.momentum_expectation", {{"k0", {0.4, -0.2}}}, p_err, 0.0, p_err,
                                       numeric_tol(cfg, 1e-8)));
    const double q_err = std::abs(expectation(real_psi, apply_position(0, real_psi)));
    report.checks.push_back(make_check("rep.position_expectation", {{"q0", {0.0, 0.0}}}, q_err, 0.0, q_err,
                                       numeric_tol(cfg, 1e-8)));
  }

  // Quantised moment map against the cocycle.
  {
    double worst_rel = 0.0;
    auto bounded = [&] {
      Eigen::Vector2d v(rng.uniform(-1, 1), rng.uniform(-1, 1));
      if (v.norm() > 1.0) v /= v.norm();
      return Vec2<Rational>(Rational(v(0)), Rational(v(1)));
    };
    for (int s = 0; s < kQuantizedPairs; ++s) {
      AlgebraElement e1, e2;
      e1.A = bounded();
      e1.B = bounded();
      e2.A = bounded();
      e2.B = bounded();
      e1.C = Rational(rng.uniform(-1, 1));
      e2.D = Rational(rng.uniform(-1, 1));
      worst_rel = std::max(worst_rel, quantized_commutator_check(e1, e2, psi, 1.0).rel_error);
    }
    report.checks.push_back(make_check("rep.quantized_cocycle_consistency", {{"samples", kQuantizedPairs}}, worst_rel,
                                       0.0, worst_rel, numeric_tol(cfg, 1e-6)));
  }

  // theta = 0 degeneration.
  {
    GridSpec flat = spec;
    flat.theta = 0.0;
    const Wavefunction flat_psi = gaussian(flat, {0.5, -0.3}, {0.4, -0.2}, kSigma);
    for (auto kind : {CommutatorKind::kQQ, CommutatorKind::kPP}) {
      Check c = to_check(commutator_check(kind, flat_psi, numeric_tol(cfg, 1e-10)));
      c.name = "rep.theta_zero." + c.name;
      report.checks.push_back(std::move(c));
    }
    // [q, p] = i hbar is an O(1) target; its error is relative.
    Check qp = to_check(commutator_check(CommutatorKind::kQP, flat_psi, numeric_tol(cfg, 1e-10)));
    qp.name = "rep.theta_zero." + qp.name;
    report.checks.push_back(std::move(qp));
    const Complex vv = weyl_check({{1, 0}, {0, 1}, {1, 0}, {0, 1}, 0, 0}, flat_psi)[1].phase;
    const double vv_err = std::abs(vv - 1.0);
    report.checks.push_back(make_check("rep.theta_zero.weyl.VV", {}, vv_err, 0.0, vv_err, numeric_tol(cfg, 1e-10)));
  }

  // Grid convergence: halving N must not raise any CCR error above round-off.
  if (spec.n >= 32) {
    GridSpec coarse = spec;
    coarse.n = spec.n / 2;
    try {
      const Wavefunction coarse_psi = gaussian(coarse, {0.5, -0.3}, {0.4, -0.2}, kSigma);
      for (auto kind : {CommutatorKind::kQQ, CommutatorKind::kPP, CommutatorKind::kQP}) {
        const double fine_err = commutator_check(kind, psi, 1.0).rel_error;
        const double coarse_err = commutator_check(kind, coarse_psi, 1.0).rel_error;
        const double excess = std::max(0.0, fine_err - std::max(coarse_err, kRoundOffFloor));
        report.checks.push_back(make_check("rep.grid_convergence." + commutator_check(kind, psi, 1.0).name,
                                           {{"coarse_n", coarse.n}, {"fine_n", spec.n}, {"coarse_error", coarse_err}},
                                           fine_err, coarse_err, excess, 0.0));
      }
    } catch (const InvalidGrid&) {
      // Coarse grid below the minimum size; nothing to compare.
    }
  }
}

SuiteReport run_verification_suite(const RunConfig& cfg) {
  cfg.validate();
  SuiteReport report;
  report.version = version();
  report.config = cfg.to_json();
  run_algebra_suite(cfg, report);
  run_group_suite(cfg, report);
  run_representation_suite(cfg, report);
  return report;
}

}  // namespace ncplane
