#include "lietorus/json_io.hpp"

#include <fstream>

namespace lt {

namespace {

IVec parse_ivec(const Json& j) {
  IVec v;
  for (const auto& x : j) v.push_back(x.get<std::int64_t>());
  return v;
}

std::vector<IVec> parse_ivecs(const Json& j) {
  std::vector<IVec> out;
  for (const auto& x : j) out.push_back(parse_ivec(x));
  return out;
}

std::vector<std::vector<Scalar>> parse_scalar_matrix(const Json& j, long cond) {
  std::vector<std::vector<Scalar>> m;
  for (const auto& row : j) {
    std::vector<Scalar> r;
    for (const auto& x : row) r.push_back(parse_scalar(x, cond));
    m.push_back(std::move(r));
  }
  return m;
}

GroupHom parse_hom(const Json& j, long cond) {
  std::vector<Scalar> v;
  for (const auto& x : j) v.push_back(parse_scalar(x, cond));
  return GroupHom(std::move(v));
}

std::vector<GroupHom> parse_homs(const Json& j, long cond) {
  std::vector<GroupHom> out;
  for (const auto& x : j) out.push_back(parse_hom(x, cond));
  return out;
}

std::shared_ptr<const TorusAlgebra> parse_torus(const Json& j) {
  require(j.contains("family"), "ParseError", "torus spec needs a family");
  std::string fam = j["family"].get<std::string>();
  long cond = j.value("conductor", 1L);
  int rank = j.value("rank", 0);
  if (fam == "laurent") return std::make_shared<TorusAlgebra>(TorusAlgebra::laurent(rank));
  if (fam == "quantum")
    return std::make_shared<TorusAlgebra>(TorusAlgebra::quantum(parse_scalar_matrix(j.at("q"), cond)));
  if (fam == "octonion") return std::make_shared<TorusAlgebra>(TorusAlgebra::octonion(rank));
  if (fam == "jordan_plus")
    return std::make_shared<TorusAlgebra>(
        TorusAlgebra::jordan_plus(parse_scalar_matrix(j.at("q"), cond)));
  if (fam == "hermitian")
    return std::make_shared<TorusAlgebra>(
        TorusAlgebra::hermitian(parse_scalar_matrix(j.at("e"), cond)));
  if (fam == "clifford_js") {
    const Json& s = j.at("semilattice");
    return std::make_shared<TorusAlgebra>(TorusAlgebra::clifford_js(
        rank, Semilattice(s.at("m").get<int>(), parse_ivecs(s.at("reps")))));
  }
  if (fam == "albert") return std::make_shared<TorusAlgebra>(TorusAlgebra::albert(rank));
  fail("ParseError", "unknown torus family: " + fam);
}

MatrixLie parse_g(const Json& j) {
  if (j.contains("builtin"))
    return MatrixLie::builtin(j["builtin"].get<std::string>()[0], j.at("rank").get<int>());
  const Json& t = j.at("table");
  LieTable table;
  table.dim = t.at("dim").get<int>();
  long cond = t.value("conductor", 1L);
  for (int c : t.value("cartan", std::vector<int>{})) table.cartan.push_back(c);
  if (t.contains("roots")) table.roots = parse_ivecs(t["roots"]);
  for (const auto& b : t.value("brackets", Json::array())) {
    LieCoeffs terms;
    for (const auto& term : b.at("terms"))
      terms = lc_add(terms, LieCoeffs{{term.at("k").get<int>(),
                                       parse_scalar(term.at("c"), cond)}});
    table.brackets[{b.at("i").get<int>(), b.at("j").get<int>()}] = terms;
  }
  table.skip_validation = t.value("skip_validation", false);
  return MatrixLie::from_table(table);
}

ScalarMatrix parse_matrix(const Json& j, long cond) {
  auto rows = parse_scalar_matrix(j, cond);
  ScalarMatrix m(static_cast<int>(rows.size()),
                 rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t k = 0; k < rows[i].size(); ++k)
      m.at(static_cast<int>(i), static_cast<int>(k)) = rows[i][k];
  return m;
}

ScalarMatrix chevalley_matrix_of(const MatrixLie& g) {
  ScalarMatrix m(g.dim(), g.dim());
  for (int j = 0; j < g.dim(); ++j)
    for (const auto& [i, c] : g.chevalley_atom(j)) m.at(i, j) = c;
  return m;
}

void parse_lietorus_into(ParsedSpec& spec, const Json& j) {
  spec.construction = j.at("construction").get<std::string>();
  long cond = j.value("conductor", 1L);
  if (j.contains("window")) spec.window = j["window"].value("radius", 2);
  if (j.contains("involution")) spec.involution = j["involution"].get<std::string>();
  if (j.contains("e"))
    for (const auto& x : j["e"]) spec.sigma_e.push_back(x.get<int>());

  const std::string& c = spec.construction;
  if (c == "tensor") {
    spec.lie = std::make_shared<TensorTorus>(parse_g(j.at("g")), j.at("n").get<int>());
  } else if (c == "sl") {
    spec.torus = parse_torus(j.at("coordinates"));
    spec.lie = std::make_shared<SlTorus>(j.at("ell_plus_1").get<int>(), spec.torus);
  } else if (c == "psl3") {
    spec.torus = parse_torus(j.at("coordinates"));
    spec.lie = std::make_shared<Psl3Torus>(spec.torus, j.value("gen_radius", 1));
  } else if (c == "tkk") {
    spec.torus = parse_torus(j.at("coordinates"));
    spec.lie = std::make_shared<TkkTorus>(spec.torus, j.value("gen_radius", 2));
  } else if (c == "tkk_c") {
    std::string variant = j.at("variant").get<std::string>();
    if (variant == "hermitian") {
      spec.torus = parse_torus(j.at("coordinates"));
      std::vector<int> e;
      for (const auto& x : j.value("e", Json::array())) e.push_back(x.get<int>());
      spec.lie = make_tkk_c_hermitian(j.at("ell").get<int>(), spec.torus, e);
    } else if (variant == "redcliff") {
      spec.lie = std::make_shared<TkkRedCliff>(j.at("n").get<int>(), parse_ivecs(j.at("taus")));
    } else {
      fail("ParseError", "tkk_c variant must be hermitian or redcliff");
    }
  } else if (c == "tits_b") {
    spec.lie = std::make_shared<TitsBTorus>(j.at("ell").get<int>(), j.at("n").get<int>(),
                                            parse_ivecs(j.at("taus")));
  } else if (c == "multiloop") {
    MatrixLie g = parse_g(j.at("g"));
    std::vector<ScalarMatrix> sigmas;
    std::vector<long> periods;
    std::vector<LieCoeffs> hprime;
    if (j.value("preset", "") == "sl2") {
      // the worked example: sigma = the Chevalley involution, h' = i(e-f)/2
      sigmas.push_back(chevalley_matrix_of(g));
      periods.push_back(2);
      int e = -1, f = -1;
      for (int i = 0; i < g.dim(); ++i) {
        if (g.atom_root(i) == IVec{1, -1}) e = i;
        if (g.atom_root(i) == IVec{-1, 1}) f = i;
      }
      Scalar ihalf = Scalar::root_of_unity(1, 4).scaled(Rational(1, 2));
      hprime.push_back({{e, ihalf}, {f, -ihalf}});
      int h = 0;
      for (int i = 0; i < g.dim(); ++i)
        if (g.atom_root(i) == IVec{0, 0}) h = i;
      auto tau = std::make_shared<ScalarMatrix>(g.dim(), g.dim());
      tau->at(h, h) = Scalar::one();
      tau->at(e, e) = -Scalar::one();
      tau->at(f, f) = -Scalar::one();
      spec.ml_tau = tau;
    } else {
      for (const auto& s : j.at("sigmas")) {
        if (s.is_string() && s.get<std::string>() == "chevalley") {
          sigmas.push_back(chevalley_matrix_of(g));
          periods.push_back(2);
        } else {
          sigmas.push_back(parse_matrix(s.at("matrix"), cond));
          periods.push_back(s.at("period").get<long>());
        }
      }
      for (const auto& h : j.at("hprime")) {
        LieCoeffs x;
        int idx = 0;
        for (const auto& coeff : h) {
          Scalar sc = parse_scalar(coeff, cond);
          if (!sc.is_zero()) x.emplace(idx, sc);
          ++idx;
        }
        hprime.push_back(std::move(x));
      }
      if (j.contains("tau")) {
        if (j["tau"].is_string() && j["tau"] == "chevalley")
          spec.ml_tau = std::make_shared<ScalarMatrix>(chevalley_matrix_of(g));
        else
          spec.ml_tau = std::make_shared<ScalarMatrix>(parse_matrix(j["tau"].at("matrix"), cond));
      }
      if (j.contains("psi") && !(j["psi"].is_string() && j["psi"] == "id"))
        spec.ml_psi = std::make_shared<ScalarMatrix>(parse_matrix(j["psi"].at("matrix"), cond));
    }
    spec.lie = std::make_shared<MultiLoopTorus>(std::move(g), std::move(sigmas),
                                                std::move(periods), std::move(hprime));
  } else {
    fail("ParseError", "unknown construction: " + c);
  }
}

DSubalgebra parse_D(const Json& j, const LieTorus* L) {
  std::string kind = j.at("kind").get<std::string>();
  long cond = j.value("conductor", 1L);
  if (kind == "full_scder") return DSubalgebra::full_scder(L);
  if (kind == "degree_only") return DSubalgebra::degree_only(L, parse_homs(j.at("U"), cond));
  if (kind == "triple")
    return DSubalgebra::triple(L, parse_homs(j.at("U"), cond), parse_homs(j.at("Uprime"), cond),
                               parse_ivecs(j.at("GammaPrime")));
  if (kind == "skew_example")
    return DSubalgebra::skew_example(L, parse_ivec(j.at("gamma")),
                                     parse_homs(j.at("Uplus"), cond),
                                     parse_homs(j.value("Uminus", Json::array()), cond));
  fail("ParseError", "unknown D kind: " + kind);
}

AffineCocycle parse_kappa(const Json& j, long cond) {
  if (j.is_string() && j.get<std::string>() == "zero") return AffineCocycle::zero();
  std::vector<SCDerElement> gens;
  for (const auto& g : j.at("generators"))
    gens.push_back(SCDerElement::term(parse_ivec(g.at("mu")), parse_hom(g.at("theta"), cond)));
  std::map<std::pair<int, int>, DualElement> values;
  for (const auto& v : j.at("table")) {
    const Json& val = v.at("value");
    DualElement c = DualElement::atom(parse_ivec(val.at("mu")), parse_ivec(val.at("lambda")),
                                      parse_scalar(val.value("coeff", Json("1")), cond));
    values[{v.at("i").get<int>(), v.at("j").get<int>()}] = c;
  }
  return AffineCocycle::table(std::move(gens), std::move(values));
}

}  // namespace

Scalar parse_scalar(const Json& j, long default_conductor) {
  if (j.is_number_integer()) return Scalar::integer(j.get<long>());
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), default_conductor);
  return Scalar::parse(j.at("value").get<std::string>(), j.at("conductor").get<long>());
}

ParsedSpec parse_spec(const Json& j) {
  ParsedSpec spec;
  spec.type = j.at("type").get<std::string>();
  if (spec.type == "torus") {
    spec.torus = parse_torus(j);
    if (j.contains("window")) spec.window = j["window"].value("radius", 2);
    return spec;
  }
  if (spec.type == "lietorus") {
    parse_lietorus_into(spec, j);
    return spec;
  }
  if (spec.type == "eala") {
    parse_lietorus_into(spec, j.at("lietorus"));
    if (j.contains("window")) spec.window = j["window"].value("radius", 2);
    if (j.contains("involution")) spec.involution = j["involution"].get<std::string>();
    DSubalgebra d = parse_D(j.at("D"), spec.lie.get());
    AffineCocycle k = j.contains("kappa") ? parse_kappa(j["kappa"], j.value("conductor", 1L))
                                          : AffineCocycle::zero();
    spec.eala = std::make_shared<EalaAlgebra>(spec.lie.get(), std::move(d), std::move(k));
    return spec;
  }
  fail("ParseError", "spec type must be torus, lietorus or eala");
}

ParsedSpec parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "ParseError", "cannot open spec file " + path);
  Json j;
  in >> j;
  return parse_spec(j);
}

LieInvolution build_involution(const ParsedSpec& spec) {
  require(spec.lie != nullptr, "ParseError", "no Lie torus in this spec");
  if (spec.involution == "identity") return identity_involution(*spec.lie);
  const LieTorus* L = spec.lie.get();
  if (auto* t = dynamic_cast<const TensorTorus*>(L)) return chevalley_tensor(*t);
  if (auto* t = dynamic_cast<const SlTorus*>(L)) {
    std::vector<int> e = spec.sigma_e;
    if (e.empty()) e.assign(static_cast<size_t>(t->coords().rank()), 1);
    AntiInvolution sigma;
    try {
      sigma = anti_involution(t->coords(), AntiInvolutionKind::SigmaE, e);
    } catch (const Error& err) {
      fail("MissingAntiInvolution",
           "no grading anti-involution on the coordinates: " + std::string(err.what()));
    }
    return chevalley_sl(*t, sigma);
  }
  if (auto* t = dynamic_cast<const Psl3Torus*>(L)) {
    if (t->coords().family() == TorusFamily::Octonion)
      return chevalley_psl3(*t, anti_involution(t->coords(), AntiInvolutionKind::OctonionStandard));
    std::vector<int> e = spec.sigma_e;
    if (e.empty()) e.assign(static_cast<size_t>(t->coords().rank()), 1);
    AntiInvolution sigma;
    try {
      sigma = anti_involution(t->coords(), AntiInvolutionKind::SigmaE, e);
    } catch (const Error& err) {
      fail("MissingAntiInvolution",
           "no grading anti-involution on the coordinates: " + std::string(err.what()));
    }
    return chevalley_psl3(*t, sigma);
  }
  if (auto* t = dynamic_cast<const TkkTorus*>(L)) return chevalley_tkk(*t);
  if (auto* t = dynamic_cast<const TkkHermitian*>(L)) return chevalley_tkk_hermitian(*t);
  if (auto* t = dynamic_cast<const TkkRedCliff*>(L)) return chevalley_tkk_redcliff(*t);
  if (auto* t = dynamic_cast<const TitsBTorus*>(L)) return chevalley_tits_b(*t);
  if (auto* t = dynamic_cast<const MultiLoopTorus*>(L)) {
    require(spec.ml_tau != nullptr, "MissingAntiInvolution",
            "multiloop needs a tau (use the sl2 preset or supply one)");
    return chevalley_multiloop(*t, *spec.ml_tau, spec.ml_psi.get());
  }
  fail("ParseError", "no chevalley formula for this construction");
}

Json report_to_json(const Report& rep, const std::string& suite, const std::string& name) {
  Json j;
  j["suite"] = suite;
  j["name"] = name;
  j["window"] = rep.window;
  j["atoms_checked"] = rep.atoms_checked;
  j["all_pass"] = rep.all_pass();
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json e;
    e["name"] = c.name;
    e["status"] = c.pass ? "pass" : "fail";
    if (!c.pass) e["witness"] = c.witness;
    checks.push_back(e);
  }
  j["checks"] = checks;
  return j;
}

std::string report_to_text(const Report& rep, const std::string& suite, const std::string& name) {
  std::string s = "suite " + suite + " on " + name + " (window " + std::to_string(rep.window) +
                  ", atoms " + std::to_string(rep.atoms_checked) + ")\n";
  s += rep.summary();
  s += rep.all_pass() ? "ALL PASS\n" : "VIOLATIONS FOUND\n";
  return s;
}

Json export_structure(const LieTorus& t, const DegreeWindow& w) {
  Json j;
  j["construction"] = t.name();
  j["window"] = w.radius();
  std::vector<AtomKey> atoms = t.atoms_in_window(w);
  std::sort(atoms.begin(), atoms.end());
  std::map<AtomKey, size_t> index;
  Json ja = Json::array();
  for (size_t i = 0; i < atoms.size(); ++i) {
    index[atoms[i]] = i;
    Json e;
    e["id"] = i;
    e["root"] = atoms[i].root;
    e["deg"] = atoms[i].deg;
    e["kind"] = atoms[i].kind;
    e["aux"] = atoms[i].aux;
    e["desc"] = t.atom_desc(atoms[i]);
    ja.push_back(e);
  }
  j["atoms"] = ja;
  Json jb = Json::array();
  for (size_t i = 0; i < atoms.size(); ++i)
    for (size_t k = i + 1; k < atoms.size(); ++k) {
      LieElement br = t.bracket_atoms(atoms[i], atoms[k]);
      if (br.empty()) continue;
      Json row;
      row["i"] = i;
      row["j"] = k;
      Json terms = Json::array();
      for (const auto& [key, c] : br) {
        Json term;
        auto it = index.find(key);
        if (it != index.end()) {
          term["k"] = it->second;
        } else {
          term["atom"] = t.atom_desc(key);  // outside the window
        }
        term["c"] = c.str();
        term["conductor"] = c.conductor();
        terms.push_back(term);
      }
      row["terms"] = terms;
      jb.push_back(row);
    }
  j["brackets"] = jb;
  return j;
}

}  // namespace lt
