#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "lietorus/roots.hpp"

using namespace lt;

TEST_CASE("window enumeration") {
  DegreeWindow w0(0);
  CHECK(w0.enumerate(2) == std::vector<IVec>{{0, 0}});
  DegreeWindow w1(1);
  CHECK(w1.enumerate(1) == std::vector<IVec>{{-1}, {0}, {1}});
  CHECK(w1.enumerate(2).size() == 9);
  auto v = w1.enumerate(2);
  CHECK(std::is_sorted(v.begin(), v.end()));
}

TEST_CASE("root system sizes and lists") {
  CHECK(RootSystem::build('A', 2).nonzero_roots().size() == 6);
  CHECK(RootSystem::build('B', 3).nonzero_roots().size() == 18);
  CHECK(RootSystem::build('D', 4).nonzero_roots().size() == 24);
  auto c2 = RootSystem::build('C', 2);
  std::set<IVec> roots(c2.nonzero_roots().begin(), c2.nonzero_roots().end());
  std::set<IVec> expect = {{2, 0}, {-2, 0}, {0, 2}, {0, -2}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  CHECK(roots == expect);
  CHECK_THROWS_WITH_AS(RootSystem::build('E', 6), doctest::Contains("UnsupportedType"), Error);
}

TEST_CASE("cartan integers") {
  auto c2 = RootSystem::build('C', 2);
  CHECK(c2.cartan_integer({2, 0}, {2, 0}) == 2);
  CHECK(c2.cartan_integer({1, -1}, {2, 0}) == 1);
  auto a2 = RootSystem::build('A', 2);
  CHECK(a2.cartan_integer({1, -1, 0}, {0, 1, -1}) == -1);
  CHECK_THROWS_WITH_AS(a2.cartan_integer({1, -1, 0}, {0, 0, 0}), doctest::Contains("ZeroRoot"),
                       Error);
}

TEST_CASE("root systems are closed under negation and reflection") {
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 2}, {'D', 4}}) {
    auto rs = RootSystem::build(t, r);
    for (const auto& a : rs.nonzero_roots()) {
      CHECK(rs.is_root(ivec_neg(a)));
      CHECK(rs.cartan_integer(a, a) == 2);
      CHECK(rs.is_indivisible(a));
      for (const auto& b : rs.nonzero_roots()) {
        int n = rs.cartan_integer(b, a);
        CHECK(n >= -3);
        CHECK(n <= 3);
        IVec refl = ivec_sub(b, ivec_scaled(a, n));
        CHECK((ivec_is_zero(refl) || rs.is_root(refl)));
      }
    }
  }
}

TEST_CASE("group homs evaluate Z-linearly") {
  GroupHom h({Scalar::one(), Scalar::root_of_unity(1, 4)});
  CHECK(h.eval({2, 0}) == Scalar::integer(2));
  CHECK(h.eval({1, 1}) == Scalar::one() + Scalar::root_of_unity(1, 4));
  CHECK(h.eval({0, -1}) == -Scalar::root_of_unity(1, 4));
}

TEST_CASE("semilattice membership") {
  Semilattice s(2, {{1, 0}});
  CHECK(s.contains({0, 0}));
  CHECK(s.contains({3, 2}));
  CHECK_FALSE(s.contains({0, 1}));
  CHECK(s.coset_of({2, -2}) == -1);
  CHECK(s.coset_of({-1, 2}) == 0);
  // invariance under translation by 2 Lambda_m
  for (auto v : {IVec{1, 0}, IVec{0, 1}, IVec{1, 1}, IVec{0, 0}})
    CHECK(s.contains(v) == s.contains(ivec_add(v, {2, -4})));
  CHECK_THROWS_WITH_AS(Semilattice(2, {{2, 0}}), doctest::Contains("BadSemilattice"), Error);
  CHECK_THROWS_WITH_AS(Semilattice(2, {{1, 0}, {1, 2}}), doctest::Contains("BadSemilattice"),
                       Error);
}

TEST_CASE("custom root systems") {
  auto rs = RootSystem::custom({{2}, {-2}}, {{{{2}, {2}}, 2}, {{{-2}, {2}}, -2},
                                             {{{2}, {-2}}, -2}, {{{-2}, {-2}}, 2}},
                               "A1-tkk");
  CHECK(rs.rank() == 1);
  CHECK(rs.is_root({2}));
  CHECK(rs.cartan_integer({-2}, {2}) == -2);
}
