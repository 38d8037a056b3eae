#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lietorus/checker.hpp"
#include "lietorus/constructions.hpp"

using namespace lt;

namespace {
std::shared_ptr<const TorusAlgebra> quantum2(long k, long n) {
  Scalar q = Scalar::root_of_unity(k, n);
  return std::make_shared<TorusAlgebra>(
      TorusAlgebra::quantum({{Scalar::one(), q}, {q.inverse(), Scalar::one()}}));
}
}  // namespace

TEST_CASE("matrix lie builtins") {
  auto sl2 = MatrixLie::builtin('A', 1);
  CHECK(sl2.dim() == 3);
  // basis order: h, then E_12 (root e1-e2), E_21
  int e = -1, f = -1, h = 0;
  for (int i = 0; i < 3; ++i) {
    if (sl2.atom_root(i) == IVec{1, -1}) e = i;
    if (sl2.atom_root(i) == IVec{-1, 1}) f = i;
  }
  REQUIRE(e >= 0);
  REQUIRE(f >= 0);
  LieCoeffs br = sl2.bracket_atoms(e, f);
  CHECK(br == LieCoeffs{{h, Scalar::one()}});  // [e,f] = h
  CHECK(sl2.form_atoms(e, f) == Scalar::one());
  CHECK(sl2.form_atoms(h, h) == Scalar::integer(2));
  auto so7 = MatrixLie::builtin('B', 3);
  CHECK(so7.dim() == 21);
  CHECK(so7.roots().nonzero_roots().size() == 18);
  auto sp4 = MatrixLie::builtin('C', 2);
  CHECK(sp4.dim() == 10);
  auto so8 = MatrixLie::builtin('D', 4);
  CHECK(so8.dim() == 28);
  // brackets close and satisfy Jacobi on all basis triples (so7 spot check)
  for (int i = 0; i < so7.dim(); i += 5)
    for (int j = 0; j < so7.dim(); j += 3)
      for (int k = 0; k < so7.dim(); k += 4) {
        LieCoeffs s = so7.bracket(so7.bracket_atoms(i, j), LieCoeffs{{k, Scalar::one()}});
        s = lc_add(s, so7.bracket(so7.bracket_atoms(j, k), LieCoeffs{{i, Scalar::one()}}));
        s = lc_add(s, so7.bracket(so7.bracket_atoms(k, i), LieCoeffs{{j, Scalar::one()}}));
        CHECK(lc_is_zero(s));
      }
}

TEST_CASE("matrix lie chevalley") {
  auto sl2 = MatrixLie::builtin('A', 1);
  int e = -1, f = -1;
  for (int i = 0; i < 3; ++i) {
    if (sl2.atom_root(i) == IVec{1, -1}) e = i;
    if (sl2.atom_root(i) == IVec{-1, 1}) f = i;
  }
  CHECK(sl2.chevalley_atom(e) == LieCoeffs{{f, -Scalar::one()}});  // theta(e) = -f
  CHECK(sl2.chevalley_atom(0) == LieCoeffs{{0, -Scalar::one()}});  // theta(h) = -h
  // so7: theta is an involutive automorphism, -id on the Cartan
  auto so7 = MatrixLie::builtin('B', 3);
  for (int i = 0; i < so7.dim(); ++i) {
    LieCoeffs ti = so7.chevalley_atom(i);
    LieCoeffs tti;
    for (const auto& [k, c] : ti) tti = lc_add(tti, lc_scaled(so7.chevalley_atom(k), c));
    CHECK(tti == LieCoeffs{{i, Scalar::one()}});
  }
  for (int h : so7.cartan_atoms())
    CHECK(so7.chevalley_atom(h) == LieCoeffs{{h, -Scalar::one()}});
  for (int i = 0; i < so7.dim(); ++i)
    for (int j = 0; j < so7.dim(); ++j) {
      LieCoeffs lhs;
      for (const auto& [k, c] : so7.bracket_atoms(i, j))
        lhs = lc_add(lhs, lc_scaled(so7.chevalley_atom(k), c));
      LieCoeffs rhs;
      for (const auto& [a, ca] : so7.chevalley_atom(i))
        for (const auto& [b, cb] : so7.chevalley_atom(j))
          rhs = lc_add(rhs, lc_scaled(so7.bracket_atoms(a, b), ca * cb));
      CHECK(lc_add(lhs, lc_scaled(rhs, -Scalar::one())) == LieCoeffs{});
    }
}

TEST_CASE("table route validation") {
  LieTable t;
  t.dim = 3;
  t.cartan = {0};
  t.roots = {{0}, {2}, {-2}};
  t.brackets[{0, 1}] = {{1, Scalar::integer(2)}};
  t.brackets[{0, 2}] = {{2, Scalar::integer(-2)}};
  t.brackets[{1, 2}] = {{0, Scalar::one()}};
  auto g = MatrixLie::from_table(t);
  CHECK(g.dim() == 3);
  CHECK(g.form_atoms(1, 2) == Scalar::integer(4));  // Killing form of sl2: 4
  // corrupt one sign: Jacobi must fail
  LieTable bad = t;
  bad.brackets[{0, 1}] = {{1, Scalar::integer(-2)}};
  CHECK_THROWS_WITH_AS(MatrixLie::from_table(bad), doctest::Contains("InvalidTable"), Error);
  bad.skip_validation = true;
  CHECK(MatrixLie::from_table(bad).dim() == 3);  // negative-control hook
  LieTable self = t;
  self.brackets[{1, 1}] = {{0, Scalar::one()}};
  CHECK_THROWS_WITH_AS(MatrixLie::from_table(self), doctest::Contains("InvalidTable"), Error);
}

TEST_CASE("tensor torus: sl2 x laurent") {
  TensorTorus t(MatrixLie::builtin('A', 1), 1);
  int e = -1, f = -1, h = 0;
  for (int i = 0; i < 3; ++i) {
    if (t.g().atom_root(i) == IVec{1, -1}) e = i;
    if (t.g().atom_root(i) == IVec{-1, 1}) f = i;
  }
  AtomKey ek{{1, -1}, {1}, 0, {e}}, fk{{-1, 1}, {-1}, 0, {f}};
  LieElement br = t.bracket_atoms(ek, fk);
  REQUIRE(br.size() == 1);
  CHECK(br.begin()->first == AtomKey{{0, 0}, {0}, 0, {h}});  // [e@t, f@t^-1] = h@1
  CHECK(t.form_atoms(ek, fk) == Scalar::one());
  CHECK(t.form_atoms(ek, AtomKey{{-1, 1}, {1}, 0, {f}}).is_zero());
  CHECK(t.atoms_at({1, -1}, {5}).size() == 1);
}

TEST_CASE("check_lie_torus on Tensor(sl2,1) at R=3") {
  TensorTorus t(MatrixLie::builtin('A', 1), 1);
  CheckerConfig cfg;
  cfg.window = 3;
  Report r = check_lie_torus(t, cfg);
  INFO(r.summary());
  CHECK(r.all_pass());
  Report rf = check_graded_form(t, cfg);
  INFO(rf.summary());
  CHECK(rf.all_pass());
  Report rc = check_centroid(t, cfg);
  INFO(rc.summary());
  CHECK(rc.all_pass());
}

TEST_CASE("corrupted structure table fails check_lie_torus") {
  LieTable t;
  t.dim = 3;
  t.cartan = {0};
  t.roots = {{0}, {2}, {-2}};
  t.brackets[{0, 1}] = {{1, Scalar::integer(-2)}};  // sign corrupted: breaks Jacobi
  t.brackets[{0, 2}] = {{2, Scalar::integer(-2)}};
  t.brackets[{1, 2}] = {{0, Scalar::one()}};
  t.skip_validation = true;
  TensorTorus bad(MatrixLie::from_table(t), 1);
  CheckerConfig cfg;
  cfg.window = 1;
  Report r = check_lie_torus(bad, cfg);
  bool jacobi_failed = false;
  for (const auto& c : r.checks)
    if ((c.name == "jacobi" || c.name == "LT2.sl2") && !c.pass) jacobi_failed = true;
  CHECK(jacobi_failed);
  CHECK_FALSE(r.all_pass());
}

TEST_CASE("sl torus over the Laurent coordinates") {
  SlTorus t(4, std::make_shared<TorusAlgebra>(TorusAlgebra::laurent(1)));
  // L_0^deg has dimension l = 3 for deg != 0 (no E11 atom: [A,A] = 0)
  CHECK(t.atoms_at(ivec_zero(4), {1}).size() == 3);
  CHECK(t.atoms_at(ivec_zero(4), {0}).size() == 3);
  // [E12, E21] = E11 - E22
  AtomKey a{{1, -1, 0, 0}, {0}, 0, {0, 1}}, b{{-1, 1, 0, 0}, {0}, 0, {1, 0}};
  LieElement br = t.bracket_atoms(a, b);
  REQUIRE(br.size() == 1);
  CHECK(br.begin()->first.kind == 1);
  CHECK(br.begin()->first.aux == IVec{0});
  CheckerConfig cfg;
  cfg.window = 2;
  Report r = check_lie_torus(t, cfg);
  INFO(r.summary());
  CHECK(r.all_pass());
}

TEST_CASE("sl torus over the quantum torus") {
  SlTorus t(4, quantum2(1, 3));
  // commutator_component((1,0)) is true: diagonal gains the E11 atom
  CHECK(t.atoms_at(ivec_zero(4), {1, 0}).size() == 4);
  CHECK(t.atoms_at(ivec_zero(4), {0, 0}).size() == 3);
  CHECK(t.atoms_at(ivec_zero(4), {3, 3}).size() == 3);
  CheckerConfig cfg;
  cfg.window = 1;
  Report r = check_lie_torus(t, cfg);
  INFO(r.summary());
  CHECK(r.all_pass());
  Report rf = check_graded_form(t, cfg);
  INFO(rf.summary());
  CHECK(rf.all_pass());
  Report rc = check_centroid(t, cfg);
  INFO(rc.summary());
  CHECK(rc.all_pass());
  CHECK(t.centroid_supported({3, 0}));
  CHECK_FALSE(t.centroid_supported({1, 0}));
  CHECK_THROWS_WITH_AS(SlTorus(3, quantum2(1, 3)), doctest::Contains("RankTooSmall"), Error);
}

TEST_CASE("psl3 over the octonion torus") {
  Psl3Torus t(std::make_shared<TorusAlgebra>(TorusAlgebra::octonion(3)), 1);
  // [E12 (x) 1, E21 (x) 1] = (E11 - E22) (x) 1 (plus no derivation term)
  AtomKey a{{1, -1, 0}, {0, 0, 0}, 0, {0, 1}}, b{{-1, 1, 0}, {0, 0, 0}, 0, {1, 0}};
  LieElement br = t.bracket_atoms(a, b);
  // D(1,1) = 0 and tr(E12 E21) = 1, so the derivation term is D(x^0,x^0) = 0
  for (const auto& [k, c] : br) CHECK(k.kind != 2);
  REQUIRE(br.size() == 1);
  CHECK(br.begin()->first.kind == 1);
  // [D_{a,b}, x (x) c] = x (x) D_{a,b}(c)
  AtomKey d{{0, 0, 0}, {1, 1, 0}, 2, {0, 1, 0}};  // D(x^{(0,1,0)}, x^{(1,0,0)})
  AtomKey m{{1, 0, -1}, {0, 0, 1}, 0, {0, 2}};
  LieElement r = t.bracket_atoms(d, m);
  for (const auto& [k, c] : r) {
    CHECK(k.kind == 0);
    CHECK(k.deg == IVec{1, 1, 1});
  }
  CHECK_FALSE(r.empty());
}

TEST_CASE("check_lie_torus on PSL3(octonion) at R=1") {
  Psl3Torus t(std::make_shared<TorusAlgebra>(TorusAlgebra::octonion(3)), 1);
  CheckerConfig cfg;
  cfg.window = 1;
  cfg.samples = 60;
  Report r = check_lie_torus(t, cfg);
  INFO(r.summary());
  CHECK(r.all_pass());
}

TEST_CASE("psl3 graded form and centroid") {
  Psl3Torus t(std::make_shared<TorusAlgebra>(TorusAlgebra::octonion(3)), 1);
  CheckerConfig cfg;
  cfg.window = 1;
  cfg.samples = 80;
  Report rf = check_graded_form(t, cfg);
  INFO(rf.summary());
  CHECK(rf.all_pass());
  Report rc = check_centroid(t, cfg);
  INFO(rc.summary());
  CHECK(rc.all_pass());
  CHECK(t.centroid_supported({2, 0, 2}));
  CHECK_FALSE(t.centroid_supported({1, 0, 0}));
}

TEST_CASE("psl3 over a quantum torus uses ad-type derivations") {
  Psl3Torus t(quantum2(1, 4), 1);
  CheckerConfig cfg;
  cfg.window = 1;
  cfg.samples = 40;
  Report r = check_lie_torus(t, cfg);
  INFO(r.summary());
  CHECK(r.all_pass());
}
