#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lietorus/eala.hpp"

using namespace lt;

namespace {
GroupHom hom1(std::vector<Scalar> v) { return GroupHom(std::move(v)); }

struct Fixture {
  TensorTorus t{MatrixLie::builtin('A', 1), 1};
  int e = -1, f = -1, h = -1;
  Fixture() {
    for (int i = 0; i < 3; ++i) {
      if (t.g().atom_root(i) == IVec{1, -1}) e = i;
      if (t.g().atom_root(i) == IVec{-1, 1}) f = i;
      if (t.g().atom_root(i) == IVec{0, 0}) h = i;
    }
  }
  AtomKey ek(long d) { return {{1, -1}, {d}, 0, {e}}; }
  AtomKey fk(long d) { return {{-1, 1}, {d}, 0, {f}}; }
  AtomKey hk(long d) { return {{0, 0}, {d}, 0, {h}}; }
};
}  // namespace

TEST_CASE("scder bracket matches Eq-7 behaviour") {
  GroupHom th = hom1({Scalar::one()});
  GroupHom ps = hom1({Scalar::integer(2)});
  SCDerElement d0 = SCDerElement::term({0}, th);
  SCDerElement dpsi0 = SCDerElement::term({0}, ps);
  CHECK(scder_bracket(d0, dpsi0).is_zero());  // [d_theta, d_psi] = 0
  // [d_theta, chi^nu d_psi] = theta(nu) chi^nu d_psi needs psi(nu) = 0
  GroupHom psnu = hom1({Scalar::zero(), Scalar::one()});
  GroupHom th2 = hom1({Scalar::one(), Scalar::zero()});
  SCDerElement dth2 = SCDerElement::term({0, 0}, th2);
  SCDerElement dnu = SCDerElement::term({2, 0}, psnu);
  SCDerElement br = scder_bracket(dth2, dnu);
  REQUIRE(br.terms().size() == 1);
  CHECK(br.terms().begin()->first == IVec{2, 0});
  CHECK(br.terms().begin()->second.values()[1] == Scalar::integer(2));  // theta(nu) = 2
  // [chi^g d_th, chi^g d_ps] with th(g) = ps(g) = 0 vanishes
  SCDerElement a = SCDerElement::term({2, 0}, psnu), b = SCDerElement::term({2, 0}, psnu.scaled(Scalar::integer(3)));
  CHECK(scder_bracket(a, b).is_zero());
  CHECK_THROWS_WITH_AS(SCDerElement::term({1, 0}, th2), doctest::Contains("InvalidSCDer"), Error);
}

TEST_CASE("scder action on the tensor torus") {
  Fixture fx;
  GroupHom th = hom1({Scalar::one()});
  SCDerElement d = SCDerElement::term({0}, th);
  LieElement et{{fx.ek(1), Scalar::one()}};
  LieElement h1{{fx.hk(0), Scalar::one()}};
  CHECK(scder_act(fx.t, d, et) == et);          // theta(1) = 1
  CHECK(scder_act(fx.t, d, h1).empty());        // theta(0) = 0
  // chi^(2,0) d_theta shifts the degree and scales by theta(lambda)
  TensorTorus t2(MatrixLie::builtin('A', 1), 2);
  SCDerElement d2 = SCDerElement::term({2, 0}, hom1({Scalar::zero(), Scalar::one()}));
  LieElement e11{{AtomKey{{1, -1}, {1, 1}, 0, {fx.e}}, Scalar::one()}};
  LieElement img = scder_act(t2, d2, e11);
  REQUIRE(img.size() == 1);
  CHECK(img.begin()->first.deg == IVec{3, 1});
  CHECK(img.begin()->second == Scalar::one());
}

TEST_CASE("dual pairing and contragredient action") {
  DualElement c = DualElement::atom({0, 0}, {3, 0});
  GroupHom th = hom1({Scalar::one(), Scalar::zero()});
  SCDerElement d = SCDerElement::term({0, 0}, th);
  CHECK(dual_pair(c, d) == Scalar::integer(3));  // c^(0)_lambda(d_theta) = theta(lambda)
  // c^(mu)_l (chi^nu d) = 0 for nu != -mu
  DualElement cmu = DualElement::atom({2, 0}, {1, 0});
  CHECK(dual_pair(cmu, d).is_zero());
  // d_theta . c^(0)_l = 0
  CHECK(dual_act(d, c).formally_zero());
  // tau-bar formulas
  SCDerElement dmu = SCDerElement::term({2, 0}, hom1({Scalar::zero(), Scalar::one()}));
  SCDerElement td = scder_tau(dmu);
  REQUIRE(td.terms().size() == 1);
  CHECK(td.terms().begin()->first == IVec{-2, 0});
  CHECK(td.terms().begin()->second.values()[1] == -Scalar::one());
  DualElement tc = dual_tau(cmu);
  REQUIRE(tc.terms().size() == 1);
  CHECK(tc.terms().begin()->first == IVec{-2, 0});
}

TEST_CASE("build_D variants and permissibility") {
  Fixture fx;
  TensorTorus t2(MatrixLie::builtin('A', 1), 2);
  auto full = DSubalgebra::full_scder(&t2);
  CHECK(full.is_permissible());
  CHECK(full.closed_under_bracket(DegreeWindow(1)));
  // degree_only with one functional in rank 2: not permissible
  auto d1 = DSubalgebra::degree_only(&t2, {hom1({Scalar::one(), Scalar::zero()})});
  CHECK_FALSE(d1.is_permissible());
  // Z-linearly independent pair (1, zeta_3): permissible
  auto d2 = DSubalgebra::degree_only(
      &t2, {hom1({Scalar::one(), Scalar::root_of_unity(1, 3)})});
  CHECK(d2.is_permissible());
  CHECK_THROWS_WITH_AS(EalaAlgebra(&t2, d1, AffineCocycle::zero()),
                       doctest::Contains("NotPermissible"), Error);
  // triple(Hom, Hom, Gamma) = full SCDer
  auto tr = DSubalgebra::triple(&t2, {hom1({Scalar::one(), Scalar::zero()}),
                                      hom1({Scalar::zero(), Scalar::one()})},
                                {hom1({Scalar::one(), Scalar::zero()}),
                                 hom1({Scalar::zero(), Scalar::one()})},
                                {{1, 0}, {0, 1}});
  CHECK(tr.is_permissible());
  for (const auto& mu : DegreeWindow(1).enumerate(2))
    CHECK(tr.u_space(mu).size() == full.u_space(mu).size());
}

TEST_CASE("sigma_D on the affine sl2 picture") {
  Fixture fx;
  auto D = DSubalgebra::degree_only(&fx.t, {hom1({Scalar::one()})});
  EalaAlgebra E(&fx.t, D, AffineCocycle::zero());
  LieElement et{{fx.ek(1), Scalar::one()}};
  LieElement ft{{fx.fk(-1), Scalar::one()}};
  DualElement s = E.sigma_D(et, ft);
  // sigma_D(e(x)t, f(x)t^-1) = c^(0)_1
  REQUIRE(s.terms().size() == 1);
  CHECK(s.terms().begin()->first == IVec{0});
  CHECK(s.terms().begin()->second[0] == Scalar::one());
  CHECK(E.sigma_D(et, et).formally_zero());
  LieElement h1{{fx.hk(0), Scalar::one()}};
  CHECK(E.sigma_D(h1, h1).formally_zero());
  // 2-cocycle identity on a few triples (as functionals on D)
  auto basis = D.window_basis(DegreeWindow(2));
  std::vector<LieElement> xs = {et, ft, h1, LieElement{{fx.ek(0), Scalar::one()}}};
  for (const auto& x : xs)
    for (const auto& y : xs)
      for (const auto& z : xs) {
        DualElement c = E.sigma_D(fx.t.bracket(x, y), z) + E.sigma_D(fx.t.bracket(y, z), x) +
                        E.sigma_D(fx.t.bracket(z, x), y);
        for (const auto& b : basis) CHECK(dual_pair(c, b).is_zero());
      }
}

TEST_CASE("eala bracket reproduces the displayed example") {
  Fixture fx;
  auto D = DSubalgebra::degree_only(&fx.t, {hom1({Scalar::one()})});
  EalaAlgebra E(&fx.t, D, AffineCocycle::zero());
  EalaElement u, v;
  u.x = LieElement{{fx.ek(1), Scalar::one()}};
  v.x = LieElement{{fx.fk(-1), Scalar::one()}};
  EalaElement br = E.bracket(u, v);
  // [e(x)t, f(x)t^-1] = h(x)1 + c^(0)_1
  REQUIRE(br.x.size() == 1);
  CHECK(br.x.begin()->first == fx.hk(0));
  REQUIRE(br.c.terms().size() == 1);
  CHECK(br.c.terms().begin()->second[0] == Scalar::one());
  CHECK(br.d.is_zero());
  // [d_theta, e(x)t] = theta(1) e(x)t
  EalaElement dth;
  dth.d = SCDerElement::term({0}, hom1({Scalar::one()}));
  EalaElement r = E.bracket(dth, u);
  CHECK(r.x == u.x);
  CHECK(r.c.formally_zero());
  // form: (c^(0)_1, d_theta) = theta(1) = 1
  EalaElement c01;
  c01.c = DualElement::atom({0}, {1});
  CHECK(E.form(c01, dth) == Scalar::one());
}

TEST_CASE("validate_cocycle") {
  Fixture fx;
  TensorTorus t2(MatrixLie::builtin('A', 1), 2);
  auto D = DSubalgebra::full_scder(&t2);
  Report r = validate_cocycle(D, AffineCocycle::zero(), DegreeWindow(1));
  INFO(r.summary());
  CHECK(r.all_pass());
  // a table with kappa(d,d) != 0 fails
  GroupHom th = hom1({Scalar::zero(), Scalar::one()});
  SCDerElement g0 = SCDerElement::term({2, 0}, th);
  std::map<std::pair<int, int>, DualElement> vals;
  vals[{0, 0}] = DualElement::atom({2, 0}, {0, 1});  // nonzero on D^{(-2,0)}
  AffineCocycle bad = AffineCocycle::table({g0}, vals);
  Report rb = validate_cocycle(D, bad, DegreeWindow(2));
  bool alt_failed = false;
  for (const auto& c : rb.checks)
    if (c.name == "cocycle.alternating" && !c.pass) alt_failed = true;
  CHECK(alt_failed);
  // grading violation
  std::map<std::pair<int, int>, DualElement> vals2;
  GroupHom th2 = hom1({Scalar::one(), Scalar::zero()});
  SCDerElement g1 = SCDerElement::term({0, 2}, th2);
  vals2[{0, 1}] = DualElement::atom({0, 0}, {0, 1});   // should sit at (2,2)
  vals2[{1, 0}] = DualElement::atom({0, 0}, {0, -1});
  AffineCocycle bad2 = AffineCocycle::table({g0, g1}, vals2);
  Report rg = validate_cocycle(D, bad2, DegreeWindow(2));
  bool grade_failed = false;
  for (const auto& c : rg.checks)
    if (c.name == "cocycle.graded" && !c.pass) grade_failed = true;
  CHECK(grade_failed);
}

TEST_CASE("eala axiom checks on E(Tensor(sl2,1), D, 0) at R=3") {
  Fixture fx;
  auto D = DSubalgebra::degree_only(&fx.t, {hom1({Scalar::one()})});
  EalaAlgebra E(&fx.t, D, AffineCocycle::zero());
  CheckerConfig cfg;
  cfg.window = 3;
  cfg.samples = 150;
  Report r = eala_axiom_checks(E, cfg);
  INFO(r.summary());
  CHECK(r.all_pass());
}

TEST_CASE("eala axiom checks with D = full SCDer at R=2") {
  Fixture fx;
  auto D = DSubalgebra::full_scder(&fx.t);
  EalaAlgebra E(&fx.t, D, AffineCocycle::zero());
  CheckerConfig cfg;
  cfg.window = 2;
  cfg.samples = 150;
  Report r = eala_axiom_checks(E, cfg);
  INFO(r.summary());
  CHECK(r.all_pass());
}

TEST_CASE("lifted involution on the affine sl2 EALA") {
  Fixture fx;
  auto D = DSubalgebra::degree_only(&fx.t, {hom1({Scalar::one()})});
  EalaAlgebra E(&fx.t, D, AffineCocycle::zero());
  LieInvolution tau = chevalley_tensor(fx.t);
  DegreeWindow w(2);
  LiftedInvolution lift = lift_involution(E, tau, w);
  CHECK(is_D_invariant(E.D(), w));
  CHECK(lift.e_tau->D().is_permissible());
  CheckerConfig cfg;
  cfg.window = 2;
  cfg.samples = 100;
  Report r = verify_eala_involution(E, lift, cfg);
  INFO(r.summary());
  CHECK(r.all_pass());
}

TEST_CASE("lift with D = full SCDer is again an involution (sky31)") {
  Fixture fx;
  auto D = DSubalgebra::full_scder(&fx.t);
  EalaAlgebra E(&fx.t, D, AffineCocycle::zero());
  LieInvolution tau = chevalley_tensor(fx.t);
  DegreeWindow w(2);
  CHECK(is_D_invariant(D, w));
  CHECK(is_pair_invariant(D, AffineCocycle::zero(), w));
  LiftedInvolution lift = lift_involution(E, tau, w);
  CheckerConfig cfg;
  cfg.window = 2;
  cfg.samples = 100;
  Report r = verify_eala_involution(E, lift, cfg);
  INFO(r.summary());
  CHECK(r.all_pass());
}

TEST_CASE("sky-10(ii): the skew example is permissible but not invariant") {
  TensorTorus t2(MatrixLie::builtin('A', 1), 2);
  std::vector<GroupHom> hom_full = {hom1({Scalar::one(), Scalar::zero()}),
                                    hom1({Scalar::zero(), Scalar::one()})};
  auto D = DSubalgebra::skew_example(&t2, {1, 0}, hom_full, {});
  DegreeWindow w(2);
  CHECK(D.is_permissible());
  CHECK(D.closed_under_bracket(w));
  CHECK_FALSE(is_D_invariant(D, w));
  // intersect with the tau-image: invariant pair with kappa = 0
  auto Dcap = D.intersect(D.tau_image());
  CHECK(Dcap.is_permissible());
  CHECK(is_D_invariant(Dcap, w));
  CHECK(is_pair_invariant(Dcap, AffineCocycle::zero(), w));
  // U^{+gamma} of the intersection is {theta in Uplus ^ Uminus : theta(gamma) = 0} = 0
  CHECK(Dcap.u_space({1, 0}).empty());
  CHECK(D.u_space({1, 0}).size() == 1);
  CHECK(D.u_space({-1, 0}).empty());
}

TEST_CASE("lifted map is a homomorphism into E^tau even when D is skew") {
  TensorTorus t2(MatrixLie::builtin('A', 1), 2);
  std::vector<GroupHom> hom_full = {hom1({Scalar::one(), Scalar::zero()}),
                                    hom1({Scalar::zero(), Scalar::one()})};
  auto D = DSubalgebra::skew_example(&t2, {1, 0}, hom_full, {});
  EalaAlgebra E(&t2, D, AffineCocycle::zero());
  LieInvolution tau = chevalley_tensor(t2);
  DegreeWindow w(1);
  LiftedInvolution lift = lift_involution(E, tau, w);
  CHECK_FALSE(is_D_invariant(D, w));
  CheckerConfig cfg;
  cfg.window = 1;
  cfg.samples = 80;
  Report r = verify_eala_involution(E, lift, cfg);
  // order2 and homomorphism hold; tau maps E to E^tau
  for (const auto& c : r.checks)
    if (c.name == "eala_involution.homomorphism" || c.name == "eala_involution.order2") {
      INFO(c.name << " " << c.witness);
      CHECK(c.pass);
    }
}

TEST_CASE("centroid normalization is the identity for shipped constructions") {
  Fixture fx;
  LieInvolution tau = chevalley_tensor(fx.t);
  auto norm = centroid_normalization(fx.t, tau, DegreeWindow(2));
  for (const auto& [mu, c] : norm) CHECK(c.is_one());
  CHECK(norm.size() == 5);
}
