// Command-line surface: build algebras from spec files, run verification
// suites, lift involutions, export structure constants.
//
// Exit codes: 0 = all checks pass, 1 = a verification found violations,
// 2 = invalid spec or usage.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "lietorus/json_io.hpp"

using namespace lt;

namespace {

struct RunConfig {
  std::string spec_path;
  std::string suite = "lietorus";
  int window = -1;  // -1: take the spec's (default 2)
  int samples = 200;
  unsigned seed = 42;
  std::string out;
  std::string format = "text";
};

void write_out(const RunConfig& cfg, const Json& j, const std::string& text) {
  std::string payload = cfg.format == "json" ? j.dump(2) + "\n" : text;
  if (cfg.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(cfg.out);
    f << payload;
  }
}

int window_of(const RunConfig& cfg, const ParsedSpec& spec) {
  return cfg.window >= 0 ? cfg.window : spec.window;
}

int cmd_build(const RunConfig& cfg) {
  ParsedSpec spec = parse_spec_file(cfg.spec_path);
  if (spec.type == "torus") {
    const TorusAlgebra& a = *spec.torus;
    std::cout << "torus family " << family_name(a.family()) << ", rank " << a.rank() << "\n";
    int supp = 0;
    for (const auto& d : DegreeWindow(2).enumerate(a.rank()))
      if (a.supports(d)) ++supp;
    std::cout << "supported degrees in [-2,2]^n: " << supp << "\n";
    return 0;
  }
  const LieTorus& t = spec.type == "eala" ? spec.eala->torus() : *spec.lie;
  DegreeWindow w(window_of(cfg, spec));
  std::cout << "construction " << t.name() << "\n";
  std::cout << "root system " << t.delta().label() << " (" << t.delta().nonzero_roots().size()
            << " nonzero roots), lattice rank " << t.rank() << "\n";
  std::cout << "atoms in the radius-" << w.radius() << " window: " << t.atoms_in_window(w).size()
            << "\n";
  if (spec.type == "eala") {
    std::cout << "D: " << spec.eala->D().desc()
              << (spec.eala->D().is_permissible() ? " (permissible)" : " (NOT permissible)")
              << ", kappa: " << (spec.eala->kappa().is_zero_kind() ? "zero" : "table") << "\n";
    std::cout << "E-atoms in the window: " << spec.eala->window_atoms(w).size() << "\n";
  }
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  ParsedSpec spec = parse_spec_file(cfg.spec_path);
  CheckerConfig ck;
  ck.window = window_of(cfg, spec);
  ck.samples = cfg.samples;
  ck.seed = cfg.seed;
  if (cfg.suite == "torus") {
    require(spec.torus != nullptr, "ParseError", "the torus suite needs a torus spec");
    const TorusAlgebra& a = *spec.torus;
    Report rep = verify_involution(a, pre_chevalley_torus(a), ck.window);
    // grading and invertibility sweep folded into the same report
    bool ok = true;
    std::string wit;
    for (const auto& d : DegreeWindow(ck.window).enumerate(a.rank())) {
      if (!a.supports(d)) continue;
      TorusElement x = TorusElement::monomial(&a, d);
      TorusElement inv = homog_inverse(x);
      if (!(mul(x, inv) == TorusElement::unit(&a))) {
        ok = false;
        wit = "x^" + ivec_str(d);
        break;
      }
    }
    rep.add("torus.invertibility", ok, wit);
    write_out(cfg, report_to_json(rep, "torus", family_name(a.family())),
              report_to_text(rep, "torus", family_name(a.family())));
    return rep.all_pass() ? 0 : 1;
  }
  if (cfg.suite == "lietorus") {
    const LieTorus& t = spec.type == "eala" ? spec.eala->torus() : *spec.lie;
    Report rep = check_lie_torus(t, ck);
    Report rf = check_graded_form(t, ck);
    Report rc = check_centroid(t, ck);
    for (const auto& c : rf.checks) rep.checks.push_back(c);
    for (const auto& c : rc.checks) rep.checks.push_back(c);
    write_out(cfg, report_to_json(rep, "lietorus", t.name()),
              report_to_text(rep, "lietorus", t.name()));
    return rep.all_pass() ? 0 : 1;
  }
  if (cfg.suite == "involution") {
    require(spec.lie != nullptr, "ParseError", "the involution suite needs a lietorus spec");
    LieInvolution tau = build_involution(spec);
    Report rep = verify_involution(*spec.lie, tau, ck);
    write_out(cfg, report_to_json(rep, "involution", spec.lie->name() + " / " + tau.tag()),
              report_to_text(rep, "involution", spec.lie->name() + " / " + tau.tag()));
    return rep.all_pass() ? 0 : 1;
  }
  if (cfg.suite == "eala") {
    require(spec.eala != nullptr, "ParseError", "the eala suite needs an eala spec");
    DegreeWindow w(ck.window);
    Report rep = validate_cocycle(spec.eala->D(), spec.eala->kappa(), w);
    Report ra = eala_axiom_checks(*spec.eala, ck);
    for (const auto& c : ra.checks) rep.checks.push_back(c);
    rep.window = ck.window;
    rep.atoms_checked = ra.atoms_checked;
    write_out(cfg, report_to_json(rep, "eala", spec.eala->torus().name()),
              report_to_text(rep, "eala", spec.eala->torus().name()));
    return rep.all_pass() ? 0 : 1;
  }
  fail("ParseError", "unknown suite " + cfg.suite + " (torus|lietorus|involution|eala)");
}

int cmd_export(const RunConfig& cfg) {
  ParsedSpec spec = parse_spec_file(cfg.spec_path);
  const LieTorus& t = spec.type == "eala" ? spec.eala->torus() : *spec.lie;
  Json j = export_structure(t, DegreeWindow(window_of(cfg, spec)));
  if (cfg.out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(cfg.out);
    f << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_lift(const RunConfig& cfg) {
  ParsedSpec spec = parse_spec_file(cfg.spec_path);
  require(spec.eala != nullptr, "ParseError", "lift needs an eala spec");
  CheckerConfig ck;
  ck.window = window_of(cfg, spec);
  ck.samples = cfg.samples;
  ck.seed = cfg.seed;
  DegreeWindow w(ck.window);
  LieInvolution tau = build_involution(spec);
  Report pre = verify_involution(spec.eala->torus(), tau, ck);
  LiftedInvolution lift = lift_involution(*spec.eala, tau, w);
  Report rep = verify_eala_involution(*spec.eala, lift, ck);
  rep.add("lift.base_involution", pre.all_pass(), "the base tau fails verify_involution");
  bool dinv = is_D_invariant(spec.eala->D(), w);
  bool pinv = is_pair_invariant(spec.eala->D(), spec.eala->kappa(), w);
  rep.add("lift.D_invariant", dinv, "D_tau != D (the lift lands in E^tau, not E)");
  rep.add("lift.pair_invariant", pinv, "(D,kappa) is not tau-invariant");
  rep.add("lift.D_tau_permissible", lift.e_tau->D().is_permissible(), "");
  std::string name = spec.eala->torus().name() + " / " + tau.tag();
  write_out(cfg, report_to_json(rep, "lift", name), report_to_text(rep, "lift", name));
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Lie torus and extended affine Lie algebra toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool with_suite) {
    sub->add_option("--spec", cfg.spec_path, "spec JSON path")->required();
    sub->add_option("--window", cfg.window, "degree window radius");
    sub->add_option("--samples", cfg.samples, "random sample count");
    sub->add_option("--seed", cfg.seed, "sample seed");
    sub->add_option("--out", cfg.out, "output path (default stdout)");
    sub->add_option("--format", cfg.format, "json|text")->check(CLI::IsMember({"json", "text"}));
    if (with_suite)
      sub->add_option("--suite", cfg.suite, "torus|lietorus|involution|eala")
          ->check(CLI::IsMember({"torus", "lietorus", "involution", "eala"}));
  };
  CLI::App* b = app.add_subcommand("build", "parse and summarize a spec");
  add_common(b, false);
  CLI::App* v = app.add_subcommand("verify", "run a verification suite");
  add_common(v, true);
  CLI::App* x = app.add_subcommand("export", "export windowed structure constants");
  add_common(x, false);
  CLI::App* l = app.add_subcommand("lift", "lift the involution to the EALA and verify");
  add_common(l, false);

  CLI11_PARSE(app, argc, argv);
  try {
    if (b->parsed()) return cmd_build(cfg);
    if (v->parsed()) return cmd_verify(cfg);
    if (x->parsed()) return cmd_export(cfg);
    if (l->parsed()) return cmd_lift(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
