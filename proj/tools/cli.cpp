#include "cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ncplane/errors.hpp"
#include "ncplane/group.hpp"
#include "ncplane/hilbert.hpp"
#include "ncplane/parser.hpp"
#include "ncplane/suite.hpp"
#include "ncplane/symplectic.hpp"
#include "ncplane/wfn_io.hpp"

namespace ncplane::cli {
namespace {

using nlohmann::json;

struct Options {
  RunConfig cfg;
  double tol = 0.0;
  std::string point;
};

std::vector<std::string> split_list(const std::string& text, std::vector<std::size_t>& starts) {
  std::vector<std::string> items;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    items.push_back(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    starts.push_back(start);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return items;
}

std::vector<Rational> parse_rationals(const std::string& text, std::size_t count) {
  std::vector<std::size_t> starts;
  const auto items = split_list(text, starts);
  if (items.size() != count)
    throw ParseError(text.size(), fmt::format("{} comma-separated rationals", count),
                     fmt::format("expected {} values, found {}", count, items.size()));
  std::vector<Rational> values;
  for (std::size_t i = 0; i < items.size(); ++i) {
    Observable f;
    try {
      f = parse(items[i]);
    } catch (const ParseError& e) {
      throw ParseError(starts[i] + e.offset(), e.expected(), fmt::format("malformed rational '{}'", items[i]));
    }
    if (!f.is_constant() || !f.constant_term().is_constant())
      throw ParseError(starts[i], "rational literal", fmt::format("'{}' is not a rational constant", items[i]));
    values.push_back(f.constant_term().constant_term());
  }
  return values;
}

std::vector<double> parse_reals(const std::string& text, std::size_t count) {
  std::vector<std::size_t> starts;
  const auto items = split_list(text, starts);
  if (items.size() != count)
    throw ParseError(text.size(), fmt::format("{} comma-separated reals", count),
                     fmt::format("expected {} values, found {}", count, items.size()));
  std::vector<double> values;
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(items[i], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != items[i].size())
      throw ParseError(starts[i] + used, "real number", fmt::format("malformed real '{}'", items[i]));
    values.push_back(v);
  }
  return values;
}

PhasePoint to_point(const std::vector<double>& v) { return PhasePoint(v[0], v[1], v[2], v[3]); }

AlgebraElement to_algebra(const std::vector<Rational>& v) {
  AlgebraElement e;
  e.A << v[0], v[1];
  e.B << v[2], v[3];
  e.C = v[4];
  e.D = v[5];
  return e;
}

GroupElement<Rational> to_group(const std::vector<Rational>& v) {
  GroupElement<Rational> g;
  g.a << v[0], v[1];
  g.b << v[2], v[3];
  g.c = v[4];
  g.d = v[5];
  return g;
}

json group_json(const GroupElement<Rational>& g) {
  return {{"a", {to_string(g.a(0)), to_string(g.a(1))}},
          {"b", {to_string(g.b(0)), to_string(g.b(1))}},
          {"c", to_string(g.c)},
          {"d", to_string(g.d)}};
}

std::string group_text(const GroupElement<Rational>& g) {
  return fmt::format("a = ({}, {}), b = ({}, {}), c = {}, d = {}", to_string(g.a(0)), to_string(g.a(1)),
                     to_string(g.b(0)), to_string(g.b(1)), to_string(g.c), to_string(g.d));
}

// Emits key/value pairs either as "key: value" lines or as one JSON object.
class Emitter {
 public:
  Emitter(const Options& opts, std::ostream& out) : json_(opts.cfg.format == "json"), out_(out) {}
  ~Emitter() {
    if (json_ && std::uncaught_exceptions() == 0) out_ << doc_.dump(2) << '\n';
  }
  void put(const std::string& key, const json& value) {
    doc_[key] = value;
    if (!json_) out_ << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }

 private:
  bool json_;
  std::ostream& out_;
  json doc_ = json::object();
};

void with_point(const Options& opts, const Observable& f, Emitter& em) {
  if (opts.point.empty()) return;
  const PhasePoint x = to_point(parse_reals(opts.point, 4));
  em.put("value", evaluate(f, x, opts.cfg.theta, opts.cfg.hbar));
}

int cmd_bracket(const Options& opts, const std::string& a, const std::string& b, bool standard, std::ostream& out) {
  const Observable f = parse(a), g = parse(b);
  const Observable h =
      poisson_bracket(f, g, standard ? SymplecticStructure::standard() : SymplecticStructure::modified());
  Emitter em(opts, out);
  em.put("bracket", format(h));
  with_point(opts, h, em);
  return kOk;
}

int cmd_vf(const Options& opts, const std::string& a, std::ostream& out) {
  const VectorField xi = hamiltonian_vector_field(parse(a));
  static const char* const names[] = {"d/dq1", "d/dq2", "d/dp1", "d/dp2"};
  Emitter em(opts, out);
  for (int i = 0; i < 4; ++i) em.put(names[i], format(xi.components[i]));
  if (!opts.point.empty()) {
    const PhasePoint x = to_point(parse_reals(opts.point, 4));
    json values = json::array();
    for (int i = 0; i < 4; ++i) values.push_back(evaluate(xi.components[i], x, opts.cfg.theta, opts.cfg.hbar));
    em.put("value", values);
  }
  return kOk;
}

int cmd_bopp(const Options& opts, const std::string& a, std::ostream& out) {
  const Observable f = bopp_shift(parse(a));
  Emitter em(opts, out);
  em.put("bopp", format(f));
  with_point(opts, f, em);
  return kOk;
}

int cmd_cocycle(const Options& opts, const std::string& a, const std::string& b, std::ostream& out) {
  const AlgebraElement e1 = to_algebra(parse_rationals(a, 6));
  const AlgebraElement e2 = to_algebra(parse_rationals(b, 6));
  const Cocycle z = extract_cocycle(e1, e2);
  const Cocycle literal = cocycle_literal_sum(e1, e2);
  Emitter em(opts, out);
  em.put("z1", to_string(z.z1));
  em.put("z2", to_string(z.z2));
  em.put("literal_z1", to_string(literal.z1));
  em.put("literal_z2", to_string(literal.z2));
  em.put("literal_obstruction", format(Observable(constant(literal.z1)) * hbar() + Observable(constant(literal.z2)) * theta()));
  em.put("defect_extended", format(homomorphism_defect(e1, e2, BracketMode::kExtended)));
  em.put("defect_abelian", format(homomorphism_defect(e1, e2, BracketMode::kAbelian)));
  return kOk;
}

int cmd_grouplaw(const Options& opts, const std::string& a, const std::string& b, std::ostream& out) {
  const auto g = to_group(parse_rationals(a, 6));
  const auto h = to_group(parse_rationals(b, 6));
  const auto product = group_multiply(g, h);
  const auto comm = group_commutator(g, h);
  Emitter em(opts, out);
  if (opts.cfg.format == "json") {
    em.put("product", group_json(product));
    em.put("commutator", group_json(comm));
  } else {
    em.put("product", group_text(product));
    em.put("commutator", group_text(comm));
  }
  return kOk;
}

int cmd_momentmap(const Options& opts, const std::string& a, std::ostream& out) {
  const AlgebraElement e = to_algebra(parse_rationals(a, 6));
  Emitter em(opts, out);
  em.put("moment_map", format(moment_map_noncommutative(e)));
  em.put("moment_map_bopp", format(moment_map(e)));
  if (!opts.point.empty()) em.put("value", evaluate(moment_map(e), to_point(parse_reals(opts.point, 4)),
                                                   opts.cfg.theta, opts.cfg.hbar));
  return kOk;
}

int emit_report(const Options& opts, const SuiteReport& report, std::ostream& out) {
  if (opts.cfg.format == "json")
    out << to_json(report).dump(2) << '\n';
  else
    out << to_text(report);
  return report.pass() ? kOk : kVerificationFailure;
}

Wavefunction load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(fmt::format("cannot open '{}'", path));
  return read_wfn_json(in);
}

int cmd_rep_check(const Options& opts, const std::string& load, const std::string& dump, std::ostream& out) {
  opts.cfg.validate();
  const double t = opts.cfg.tol.value_or(0.0);  // zero means nominal tolerances
  SuiteReport report;
  report.version = version();
  report.config = opts.cfg.to_json();
  if (load.empty()) {
    run_representation_suite(opts.cfg, report);
  } else {
    const Wavefunction psi = load_state(load);
    report.config["state"] = load;
    const bool flat = psi.spec().theta == 0.0;
    report.checks.push_back(to_check(commutator_check(CommutatorKind::kQQ, psi, t > 0 ? t : (flat ? 1e-10 : 1e-6))));
    report.checks.push_back(to_check(commutator_check(CommutatorKind::kPP, psi, t > 0 ? t : 1e-10)));
    report.checks.push_back(to_check(commutator_check(CommutatorKind::kQP, psi, t > 0 ? t : 1e-6)));
    WeylTolerances wt;
    if (t > 0) wt = {t, t, t};
    for (const auto& r : weyl_check({{1, 0}, {0, 1}, {1, 0}, {0, 1}, 0.3, 0.7}, psi, wt))
      report.checks.push_back(to_check(r));
  }
  if (!dump.empty()) {
    const GridSpec spec{opts.cfg.grid_n, opts.cfg.box_l, opts.cfg.theta, opts.cfg.hbar};
    std::ofstream file(dump);
    if (!file) throw FormatError(fmt::format("cannot write '{}'", dump));
    write_wfn_json(file, gaussian(spec, {0.5, -0.3}, {0.4, -0.2}, 1.0));
  }
  return emit_report(opts, report, out);
}

int cmd_evolve(const Options& opts, const std::string& expr, const std::string& x0_text, double t_end, double dt,
               std::ostream& out) {
  const Observable h = parse(expr);
  const PhasePoint x0 = to_point(parse_reals(x0_text, 4));
  const auto samples = evolve(h, x0, opts.cfg.theta, t_end, dt, opts.cfg.hbar);
  out << "t,q1,q2,p1,p2,H\n";
  for (const auto& s : samples)
    out << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", s.t, s.x(0), s.x(1), s.x(2), s.x(3),
                       evaluate(h, s.x, opts.cfg.theta, opts.cfg.hbar));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numerical toolkit for the noncommutative phase plane", "ncplane"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--theta", opts.cfg.theta, "Noncommutativity parameter")->capture_default_str();
  app.add_option("--hbar", opts.cfg.hbar, "Planck constant")->capture_default_str();
  app.add_option("--grid-n", opts.cfg.grid_n, "Grid points per axis")->capture_default_str();
  app.add_option("--box-l", opts.cfg.box_l, "Half-width of the box")->capture_default_str();
  app.add_option("--seed", opts.cfg.seed, "Random seed")->capture_default_str();
  auto* tol = app.add_option("--tol", opts.tol, "Override every numeric tolerance");
  app.add_option("--format", opts.cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--point", opts.point, "Phase point q1,q2,p1,p2 for numeric evaluation");

  std::string a, b, load, dump, x0 = "0,0,0,0";
  double t_end = 1.0, dt = 1e-3;

  auto* bracket = app.add_subcommand("bracket", "Modified Poisson bracket {f,g}");
  bracket->add_option("f", a)->required();
  bracket->add_option("g", b)->required();
  bool standard = false;
  bracket->add_flag("--standard", standard, "Canonical bracket, for observables already in the Bopp chart");
  auto* vf = app.add_subcommand("vf", "Hamiltonian vector field of f");
  vf->add_option("f", a)->required();
  auto* bopp = app.add_subcommand("bopp", "Bopp shift of f");
  bopp->add_option("f", a)->required();
  auto* cocycle = app.add_subcommand("cocycle", "Cocycle and homomorphism defect of two algebra elements");
  cocycle->add_option("e1", a, "A1,A2,B1,B2,C,D")->required();
  cocycle->add_option("e2", b, "A1,A2,B1,B2,C,D")->required();
  auto* grouplaw = app.add_subcommand("grouplaw", "Product and commutator of two group elements");
  grouplaw->add_option("g1", a, "a1,a2,b1,b2,c,d")->required();
  grouplaw->add_option("g2", b, "a1,a2,b1,b2,c,d")->required();
  auto* momentmap = app.add_subcommand("momentmap", "Moment map of an algebra element");
  momentmap->add_option("e", a, "A1,A2,B1,B2,C,D")->required();
  auto* rep = app.add_subcommand("rep-check", "Operator identities on the grid");
  rep->add_option("--load", load, "Check a wfn-json state instead of the reference Gaussian");
  rep->add_option("--dump", dump, "Write the reference Gaussian as wfn-json");
  auto* evo = app.add_subcommand("evolve", "Integrate Hamilton's equations, CSV to stdout");
  evo->add_option("H", a)->required();
  evo->add_option("--x0", x0, "Initial point q1,q2,p1,p2")->capture_default_str();
  evo->add_option("-T,--time", t_end, "Final time")->capture_default_str();
  evo->add_option("--dt", dt, "Step size")->capture_default_str();
  auto* verify = app.add_subcommand("verify-all", "Run the full verification suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseFailure;
  }
  if (tol->count() > 0) opts.cfg.tol = opts.tol;

  try {
    if (*bracket) return cmd_bracket(opts, a, b, standard, out);
    if (*vf) return cmd_vf(opts, a, out);
    if (*bopp) return cmd_bopp(opts, a, out);
    if (*cocycle) return cmd_cocycle(opts, a, b, out);
    if (*grouplaw) return cmd_grouplaw(opts, a, b, out);
    if (*momentmap) return cmd_momentmap(opts, a, out);
    if (*rep) return cmd_rep_check(opts, load, dump, out);
    if (*evo) return cmd_evolve(opts, a, x0, t_end, dt, out);
    if (*verify) {
      opts.cfg.validate();
      return emit_report(opts, run_verification_suite(opts.cfg), out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << " (expected " << e.expected() << ")\n";
    return kParseFailure;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericSetupFailure;
  }
  return kParseFailure;
}

}  // namespace ncplane::cli
