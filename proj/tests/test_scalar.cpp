#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lietorus/scalar.hpp"

using namespace lt;

namespace {
Scalar zeta(long k, long n) { return Scalar::root_of_unity(k, n); }

Scalar random_scalar(std::mt19937_64& rng, long conductor) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  std::vector<Rational> c(static_cast<size_t>(euler_phi(conductor)));
  for (auto& x : c) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return Scalar::from_coeffs(conductor, std::move(c));
}
}  // namespace

TEST_CASE("cyclotomic relations") {
  CHECK(zeta(1, 4) * zeta(1, 4) == -Scalar::one());
  CHECK((Scalar::one() + zeta(1, 3) + zeta(2, 3)).is_zero());
  CHECK(zeta(2, 4) == -Scalar::one());
  CHECK(zeta(3, 3).is_one());
}

TEST_CASE("inverse of zeta_8^3 reduces to zeta_8^5") {
  Scalar a = zeta(3, 8);
  Scalar inv = a.inverse();
  CHECK(inv * a == Scalar::one());  // independent check: the product is 1
  CHECK(inv == zeta(5, 8));
}

TEST_CASE("zeta_6 embeds as -zeta_3^2") {
  Scalar z6 = zeta(1, 6);
  CHECK(z6 == -zeta(2, 3));
  CHECK(z6.pow(6).is_one());
  CHECK_FALSE(z6.pow(3).is_one());
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_WITH_AS(Scalar::zero().inverse(), doctest::Contains("DivisionByZero"), Error);
  CHECK_THROWS_WITH_AS(zeta(1, 0), doctest::Contains("InvalidConductor"), Error);
}

TEST_CASE("field axioms hold on sampled triples") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 60; ++it) {
    long n = std::vector<long>{1, 3, 4, 6, 8, 12}[static_cast<size_t>(it % 6)];
    Scalar a = random_scalar(rng, n), b = random_scalar(rng, 4), c = random_scalar(rng, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one());
  }
}

TEST_CASE("conj is an involutive field automorphism") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 40; ++it) {
    Scalar a = random_scalar(rng, 12), b = random_scalar(rng, 8);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
  }
  CHECK(zeta(1, 8).conj() == zeta(7, 8));
}

TEST_CASE("sqrt of roots of unity") {
  CHECK(Scalar::one().sqrt_root_of_unity() == Scalar::one());
  CHECK(zeta(1, 2).sqrt_root_of_unity() == zeta(1, 4));  // sqrt(-1) = zeta_4
  CHECK(zeta(1, 3).sqrt_root_of_unity() == zeta(1, 6));
  CHECK_THROWS_WITH_AS(Scalar::integer(2).sqrt_root_of_unity(),
                       doctest::Contains("NotRootOfUnity"), Error);
}

TEST_CASE("sqrt squares back for every root of unity, N <= 24") {
  for (long n = 1; n <= 24; ++n)
    for (long k = 0; k < n; ++k) {
      Scalar u = zeta(k, n);
      Scalar v = u.sqrt_root_of_unity();
      CHECK(v * v == u);
    }
}

TEST_CASE("root-of-unity order detection") {
  CHECK(*zeta(1, 8).root_of_unity_order() == 8);
  CHECK(*zeta(2, 8).root_of_unity_order() == 4);
  CHECK(*(-Scalar::one()).root_of_unity_order() == 2);
  CHECK(*Scalar::one().root_of_unity_order() == 1);
  CHECK_FALSE(Scalar(1, 2).root_of_unity_order().has_value());
  CHECK_FALSE((Scalar::one() + zeta(1, 4)).root_of_unity_order().has_value());
}

TEST_CASE("text grammar round-trips") {
  Scalar s = Scalar(1, 2) - zeta(3, 8);
  CHECK(s.str() == "1/2 - 1*z^3");
  CHECK(Scalar::parse("1/2 - 1*z^3", 8) == s);
  CHECK(Scalar::parse("2", 1) == Scalar::integer(2));
  CHECK(Scalar::parse("-1*z^1 + 1*z^2", 3) == zeta(2, 3) - zeta(1, 3));
  std::mt19937_64 rng(11);
  for (int it = 0; it < 30; ++it) {
    Scalar a = random_scalar(rng, 12);
    CHECK(Scalar::parse(a.str(), 12) == a);
  }
}

TEST_CASE("mixed conductor arithmetic promotes via lcm") {
  Scalar a = zeta(1, 4), b = zeta(1, 3);
  Scalar p = a * b;
  CHECK(p == zeta(7, 12));
  CHECK(p.conductor() == 12);
  CHECK(zeta(1, 4) + zeta(1, 6) == zeta(3, 12) + zeta(2, 12));
}
