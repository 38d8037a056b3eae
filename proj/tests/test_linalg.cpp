#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lietorus/linalg.hpp"

using namespace lt;

namespace {
Scalar zeta(long k, long n) { return Scalar::root_of_unity(k, n); }
}  // namespace

TEST_CASE("rank and kernel of rational matrices") {
  ScalarMatrix m(2, 2);
  m.at(0, 0) = Scalar::one();
  m.at(0, 1) = Scalar::one();
  m.at(1, 0) = Scalar::one();
  m.at(1, 1) = Scalar::one();
  CHECK(m.rank() == 1);
  auto ker = m.kernel_basis();
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == -Scalar::one());
  CHECK(ker[0][1] == Scalar::one());
}

TEST_CASE("rank over a cyclotomic field") {
  // [[1, z3], [z3^2, 1]]: second row is z3^2 * first row.
  ScalarMatrix m(2, 2);
  m.at(0, 0) = Scalar::one();
  m.at(0, 1) = zeta(1, 3);
  m.at(1, 0) = zeta(2, 3);
  m.at(1, 1) = Scalar::one();
  CHECK(m.at(1, 0) * m.at(0, 1) == m.at(1, 1));  // exact dependence
  CHECK(m.rank() == 1);
}

TEST_CASE("solve reports inconsistency") {
  ScalarMatrix m(2, 1);
  m.at(0, 0) = Scalar::one();
  m.at(1, 0) = Scalar::one();
  CHECK(m.solve({Scalar::integer(2), Scalar::integer(2)})[0] == Scalar::integer(2));
  CHECK_THROWS_WITH_AS(m.solve({Scalar::one(), Scalar::integer(2)}),
                       doctest::Contains("Inconsistent"), Error);
}

TEST_CASE("integer kernel") {
  SUBCASE("1 + z3 has no integer relation") {
    ScalarMatrix m(1, 2);
    m.at(0, 0) = Scalar::one();
    m.at(0, 1) = zeta(1, 3);
    CHECK(integer_kernel(m).empty());
  }
  SUBCASE("[1, 0]") {
    ScalarMatrix m(1, 2);
    m.at(0, 0) = Scalar::one();
    CHECK(integer_kernel(m) == std::vector<IVec>{{0, 1}});
  }
  SUBCASE("[2, 4]") {
    ScalarMatrix m(1, 2);
    m.at(0, 0) = Scalar::integer(2);
    m.at(0, 1) = Scalar::integer(4);
    CHECK(integer_kernel(m) == std::vector<IVec>{{2, -1}});
  }
  SUBCASE("kernel vectors satisfy M v = 0 exactly") {
    ScalarMatrix m(2, 3);
    m.at(0, 0) = zeta(1, 4);
    m.at(0, 1) = zeta(1, 4);
    m.at(0, 2) = Scalar::zero();
    m.at(1, 0) = Scalar::one();
    m.at(1, 1) = Scalar::one();
    m.at(1, 2) = Scalar::integer(3);
    for (const auto& v : integer_kernel(m)) {
      for (int i = 0; i < m.rows(); ++i) {
        Scalar s = Scalar::zero();
        for (int j = 0; j < m.cols(); ++j)
          s += m.at(i, j).scaled(Rational(static_cast<long>(v[static_cast<size_t>(j)])));
        CHECK(s.is_zero());
      }
    }
    CHECK(lattice_rank(integer_kernel(m), 3) == 1);
  }
}

TEST_CASE("lattice helpers") {
  CHECK(generates_full_lattice({{1, 0}, {0, 1}}, 2));
  CHECK(generates_full_lattice({{1, 2}, {1, 3}}, 2));
  CHECK_FALSE(generates_full_lattice({{2, 0}, {0, 1}}, 2));
  CHECK(in_lattice_span({{2, 0}, {0, 3}}, {4, 3}));
  CHECK_FALSE(in_lattice_span({{2, 0}, {0, 3}}, {1, 0}));
  CHECK(lattice_rank({{1, 1}, {2, 2}}, 2) == 1);
}

TEST_CASE("column space comparison") {
  ScalarMatrix a(2, 1), b(2, 2);
  a.at(0, 0) = Scalar::one();
  a.at(1, 0) = zeta(1, 3);
  b.at(0, 0) = zeta(2, 3);
  b.at(1, 0) = Scalar::one();
  b.at(0, 1) = zeta(2, 3).scaled(Rational(2));
  b.at(1, 1) = Scalar::integer(2);
  CHECK(same_column_space(a, b));
  b.at(1, 1) = Scalar::integer(3);
  CHECK_FALSE(same_column_space(a, b));
}
