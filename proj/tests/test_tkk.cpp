#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lietorus/checker.hpp"
#include "lietorus/involution.hpp"

using namespace lt;

namespace {
std::shared_ptr<const TorusAlgebra> jordan_minus1() {
  return std::make_shared<TorusAlgebra>(TorusAlgebra::jordan_plus(
      {{Scalar::one(), -Scalar::one()}, {-Scalar::one(), Scalar::one()}}));
}
std::shared_ptr<const TorusAlgebra> quantum_minus1() {
  return std::make_shared<TorusAlgebra>(TorusAlgebra::quantum(
      {{Scalar::one(), -Scalar::one()}, {-Scalar::one(), Scalar::one()}}));
}
}  // namespace

TEST_CASE("tkk basics: [1, bar 1] = L(1) and [L(1), ybar] = -ybar") {
  TkkTorus t(jordan_minus1(), 2);
  AtomKey one{{2}, {0, 0}, 0, {}};
  AtomKey barone{{-2}, {0, 0}, 1, {}};
  LieElement br = t.bracket_atoms(one, barone);
  REQUIRE(br.size() == 1);
  CHECK(br.begin()->first.kind == 2);  // L(1)
  CHECK(br.begin()->second == Scalar::one());
  AtomKey l1{{0}, {0, 0}, 2, {}};
  AtomKey ybar{{-2}, {1, 0}, 1, {}};
  LieElement r = t.bracket_atoms(l1, ybar);
  REQUIRE(r.size() == 1);
  CHECK(r.begin()->first == ybar);
  CHECK(r.begin()->second == -Scalar::one());
}

TEST_CASE("tkk sl2 pair: e = x^0, f = 2 bar(x^0) satisfies [[e,f],e] = 2e") {
  TkkTorus t(jordan_minus1(), 2);
  LieElement e{{AtomKey{{2}, {0, 0}, 0, {}}, Scalar::one()}};
  LieElement f{{AtomKey{{-2}, {0, 0}, 1, {}}, Scalar::integer(2)}};
  LieElement h = t.bracket(e, f);
  LieElement he = t.bracket(h, e);
  LieElement diff = le_add(he, le_scaled(e, Scalar::integer(-2)));
  CHECK(t.element_is_zero(diff, 0));
}

TEST_CASE("tkk rejects non-Jordan coordinates") {
  CHECK_THROWS_WITH_AS(TkkTorus(quantum_minus1(), 2), doctest::Contains("NotJordan"), Error);
}

TEST_CASE("check_lie_torus on TKK(JordanPlus(-1, n=2)) at R=2") {
  TkkTorus t(jordan_minus1(), 2);
  CheckerConfig cfg;
  cfg.window = 2;
  cfg.samples = 120;
  Report r = check_lie_torus(t, cfg);
  INFO(r.summary());
  CHECK(r.all_pass());
}

TEST_CASE("tkk graded form and centroid") {
  TkkTorus t(jordan_minus1(), 2);
  CheckerConfig cfg;
  cfg.window = 1;
  cfg.samples = 120;
  Report rf = check_graded_form(t, cfg);
  INFO(rf.summary());
  CHECK(rf.all_pass());
  Report rc = check_centroid(t, cfg);
  INFO(rc.summary());
  CHECK(rc.all_pass());
  CHECK(t.centroid_supported({2, 0}));
  CHECK_FALSE(t.centroid_supported({1, 0}));
}

TEST_CASE("tkk over the clifford torus") {
  // I = {(1,0),(0,1)} so that the semilattice generates the full lattice;
  // R=1 windows cannot see the 2*Lambda_m part of the support, so LT4 needs
  // the radius-2 window
  Semilattice s(2, {{1, 0}, {0, 1}});
  auto j = std::make_shared<TorusAlgebra>(TorusAlgebra::clifford_js(2, s));
  TkkTorus t(j, 2);
  CheckerConfig cfg;
  cfg.window = 2;
  cfg.samples = 80;
  Report r = check_lie_torus(t, cfg);
  INFO(r.summary());
  CHECK(r.all_pass());
}

TEST_CASE("tkk_c hermitian: peirce idempotents and basic brackets") {
  TkkHermitian t(2, quantum_minus1(), {1, 1});
  // e_1 . e_1 = e_1 and e_1 . e_2 = 0 hold by matrix-unit arithmetic; the
  // J-part atoms realize H_2: check [J_11, bar J_11] lands in the T-block.
  AtomKey e1{{2, 0}, {0, 0}, 0, {0, 0}};
  AtomKey bare1{{-2, 0}, {0, 0}, 1, {0, 0}};
  LieElement br = t.bracket_atoms(e1, bare1);
  REQUIRE(br.size() == 1);
  CHECK(br.begin()->first.kind == 2);
  CHECK(br.begin()->first.aux == IVec{0, 0});
  // supp rule: J_ii needs sigma-even degrees
  CHECK(t.atoms_at({2, 0}, {1, 1}).empty());       // s((1,1)) = -1
  CHECK(t.atoms_at({2, 0}, {1, 0}).size() == 1);   // s((1,0)) = +1
  CHECK(t.atoms_at({1, 1}, {1, 1}).size() == 1);   // off-diagonal pair: any degree
  CHECK(t.atoms_at({1, -1}, {1, 1}).size() == 1);  // T-block
}

TEST_CASE("check_lie_torus on TKK_C(H2(Quantum(-1))) at R=2") {
  TkkHermitian t(2, quantum_minus1(), {1, 1});
  CheckerConfig cfg;
  cfg.window = 2;
  cfg.samples = 120;
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

TEST_CASE("tkk_c hermitian at rank 3") {
  TkkHermitian t(3, quantum_minus1(), {1, -1});
  CheckerConfig cfg;
  cfg.window = 1;
  cfg.samples = 80;
  Report r = check_lie_torus(t, cfg);
  INFO(r.summary());
  CHECK(r.all_pass());
}

TEST_CASE("tkk_c redcliff: displayed products and axioms") {
  TkkRedCliff t(1, {{0}, {1}});
  // (1,0,0).(0,1,0) = 0: the bracket [J11, bar J22] must vanish
  AtomKey j11{{2, 0}, {0}, 0, {0, 0}};
  AtomKey barj22{{0, -2}, {0}, 1, {1, 0}};
  CHECK(t.bracket_atoms(j11, barj22).empty());
  // Peirce: the (12)-type atom sits at root e1+e2
  CHECK(t.atoms_at({1, 1}, {1}).size() == 1);   // deg 1 = 2*0 + tau_2
  CHECK(t.atoms_at({1, 1}, {0}).size() == 1);   // deg 0 = tau_1 slot
  CHECK(t.atoms_at({2, 0}, {1}).empty());       // diagonal needs even degrees
  CheckerConfig cfg;
  cfg.window = 2;
  cfg.samples = 120;
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

TEST_CASE("tkk_c redcliff with a rank-2 lattice and m=3") {
  TkkRedCliff t(2, {{0, 0}, {1, 0}, {0, 1}});
  CheckerConfig cfg;
  cfg.window = 1;
  cfg.samples = 80;
  Report r = check_lie_torus(t, cfg);
  INFO(r.summary());
  CHECK(r.all_pass());
}

TEST_CASE("tkk over the hermitian torus") {
  Scalar one = Scalar::one();
  auto j = std::make_shared<TorusAlgebra>(TorusAlgebra::hermitian({{one, -one}, {-one, one}}));
  TkkTorus t(j, 2);
  CheckerConfig cfg;
  cfg.window = 1;
  cfg.samples = 80;
  Report r = check_lie_torus(t, cfg);
  INFO(r.summary());
  CHECK(r.all_pass());
  Report ri = verify_involution(t, chevalley_tkk(t), cfg);
  INFO(ri.summary());
  CHECK(ri.all_pass());
}

TEST_CASE("tau validation") {
  CHECK_THROWS_WITH_AS(TkkRedCliff(1, {{1}, {0}}), doctest::Contains("BadTauList"), Error);
  CHECK_THROWS_WITH_AS(TkkRedCliff(1, {{0}, {2}}), doctest::Contains("BadTauList"), Error);
}
