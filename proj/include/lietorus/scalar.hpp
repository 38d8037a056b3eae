#ifndef LIETORUS_SCALAR_HPP
#define LIETORUS_SCALAR_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "lietorus/error.hpp"

namespace lt {

using Rational = mpq_class;

/// Element of the cyclotomic field Q(zeta_N), stored on the power basis
/// 1, z, ..., z^{phi(N)-1} modulo the N-th cyclotomic polynomial.
/// Always kept reduced, so equality at a fixed conductor is coefficient-wise.
/// Mixed-conductor arithmetic embeds both operands into Q(zeta_lcm).
class Scalar {
public:
  Scalar() : n_(1), c_(1, Rational(0)) {}
  explicit Scalar(const Rational& r) : n_(1), c_(1, r) {}
  Scalar(long num, long den);

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(Rational(1)); }
  static Scalar integer(long v) { return Scalar(Rational(v)); }
  /// zeta_N^k, canonical form. InvalidConductor if N < 1.
  static Scalar root_of_unity(long k, long n);
  /// Raw constructor from a coefficient vector (reduced on entry).
  static Scalar from_coeffs(long n, std::vector<Rational> coeffs);

  long conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const { return *this == one(); }
  bool is_rational() const;
  /// Rational part; fails unless is_rational().
  Rational rational_value() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Multiplicative inverse. DivisionByZero on 0.
  Scalar inverse() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
  /// Field automorphism zeta_N -> zeta_N^{-1}.
  Scalar conj() const;
  Scalar pow(long e) const;
  Scalar scaled(const Rational& r) const;

  /// Smallest m >= 1 with this^m = 1, or nullopt if not a root of unity.
  std::optional<long> root_of_unity_order() const;
  bool is_root_of_unity() const { return root_of_unity_order().has_value(); }

  /// Square root of a root of unity u with order dividing N, returned in
  /// Q(zeta_{2N}) as zeta_{2N}^k with the smallest non-negative k.
  /// NotRootOfUnity otherwise.
  Scalar sqrt_root_of_unity() const;

  /// Re-express in Q(zeta_m); m must be a multiple of the conductor.
  Scalar promoted(long m) const;

  /// Text form per the scalar grammar, e.g. "1/2 - 1*z^3" or "-2/3".
  std::string str() const;
  static Scalar parse(const std::string& text, long conductor);

  /// Deterministic total order (conductor, then coefficients). Used for
  /// canonical term ordering in reports; not a numeric order.
  static int compare(const Scalar& a, const Scalar& b);
  bool operator<(const Scalar& o) const { return compare(*this, o) < 0; }

private:
  long n_;
  std::vector<Rational> c_;
  void reduce_();
};

long euler_phi(long n);
long lcm_long(long a, long b);

/// Monic coefficients (low to high) of the N-th cyclotomic polynomial.
const std::vector<Rational>& cyclotomic_polynomial(long n);

inline Scalar operator*(long k, const Scalar& s) { return s.scaled(Rational(k)); }

}  // namespace lt

#endif
