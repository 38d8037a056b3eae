#include "lietorus/scalar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace lt {

namespace {

using Poly = std::vector<Rational>;  // low-to-high coefficients

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  poly_trim(r);
  return r;
}

/// Exact division a / b, remainder must vanish.
Poly poly_div_exact(Poly a, const Poly& b) {
  poly_trim(a);
  Poly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    poly_trim(a);
  }
  return q;
}

/// Remainder of a modulo monic b.
Poly poly_mod(Poly a, const Poly& b) {
  poly_trim(a);
  while (a.size() >= b.size()) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    poly_trim(a);
  }
  return a;
}

/// Extended Euclid: returns (g, u) with u*a = g mod m, g a nonzero constant
/// when gcd(a, m) = 1 (m irreducible here).
std::pair<Poly, Poly> poly_half_gcdext(Poly a, Poly m) {
  Poly r0 = std::move(m), r1 = std::move(a);
  Poly u0 = {}, u1 = {Rational(1)};  // coefficients of `a`
  poly_trim(r0);
  poly_trim(r1);
  while (!r1.empty()) {
    // r0 = q*r1 + r2
    Poly r2 = r0;
    Poly q(r2.size() >= r1.size() ? r2.size() - r1.size() + 1 : 0, Rational(0));
    while (r2.size() >= r1.size() && !r2.empty()) {
      Rational c = r2.back() / r1.back();
      size_t shift = r2.size() - r1.size();
      q[shift] += c;
      for (size_t i = 0; i < r1.size(); ++i) r2[shift + i] -= c * r1[i];
      poly_trim(r2);
    }
    Poly u2 = u0;
    Poly qu1 = poly_mul(q, u1);
    if (u2.size() < qu1.size()) u2.resize(qu1.size(), Rational(0));
    for (size_t i = 0; i < qu1.size(); ++i) u2[i] -= qu1[i];
    poly_trim(u2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  return {r0, u0};
}

std::vector<long> divisors(long n) {
  std::vector<long> d;
  for (long i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

const std::vector<Rational>& cyclotomic_polynomial(long n) {
  static std::map<long, Poly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Poly p(n + 1, Rational(0));  // x^n - 1
  p[0] = -1;
  p[n] = 1;
  for (long d : divisors(n))
    if (d < n) p = poly_div_exact(p, cyclotomic_polynomial(d));
  return cache.emplace(n, std::move(p)).first->second;
}

Scalar::Scalar(long num, long den) : n_(1), c_(1) {
  require(den != 0, "DivisionByZero", "rational with zero denominator");
  c_[0] = Rational(num, den);
  c_[0].canonicalize();
}

void Scalar::reduce_() {
  const Poly& phi = cyclotomic_polynomial(n_);
  size_t deg = phi.size() - 1;  // = euler_phi(n_)
  if (c_.size() >= phi.size()) c_ = poly_mod(std::move(c_), phi);
  c_.resize(deg, Rational(0));
}

Scalar Scalar::from_coeffs(long n, std::vector<Rational> coeffs) {
  require(n >= 1, "InvalidConductor", "conductor must be >= 1");
  Scalar s;
  s.n_ = n;
  s.c_ = std::move(coeffs);
  s.reduce_();
  return s;
}

Scalar Scalar::root_of_unity(long k, long n) {
  require(n >= 1, "InvalidConductor", "conductor must be >= 1");
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
  c[static_cast<size_t>(k)] = 1;
  return from_coeffs(n, std::move(c));
}

bool Scalar::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

bool Scalar::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Scalar::rational_value() const {
  require(is_rational(), "NotRational", "scalar is not rational: " + str());
  return c_[0];
}

Scalar Scalar::promoted(long m) const {
  require(m % n_ == 0, "InvalidConductor", "promotion target is not a multiple");
  if (m == n_) return *this;
  long step = m / n_;
  std::vector<Rational> c(static_cast<size_t>(euler_phi(n_) - 1) * step + 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i * step] = c_[i];
  return from_coeffs(m, std::move(c));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  long m = lcm_long(n_, o.n_);
  Scalar a = promoted(m), b = o.promoted(m);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  long m = lcm_long(n_, o.n_);
  Scalar a = promoted(m), b = o.promoted(m);
  return from_coeffs(m, poly_mul(a.c_, b.c_));
}

bool Scalar::operator==(const Scalar& o) const {
  if (n_ == o.n_) return c_ == o.c_;
  long m = lcm_long(n_, o.n_);
  return promoted(m).c_ == o.promoted(m).c_;
}

Scalar Scalar::inverse() const {
  require(!is_zero(), "DivisionByZero", "inverse of zero");
  Poly a = c_;
  poly_trim(a);
  auto [g, u] = poly_half_gcdext(a, cyclotomic_polynomial(n_));
  // Phi_N irreducible over Q, so g is a nonzero constant.
  require(g.size() == 1 && g[0] != 0, "DivisionByZero", "gcd degeneracy");
  Rational inv_g = 1 / g[0];
  for (auto& x : u) x *= inv_g;
  return from_coeffs(n_, std::move(u));
}

Scalar Scalar::conj() const {
  std::vector<Rational> c(static_cast<size_t>(n_), Rational(0));
  c[0] = c_[0];
  for (size_t i = 1; i < c_.size(); ++i) c[static_cast<size_t>(n_) - i] += c_[i];
  return from_coeffs(n_, std::move(c));
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = one(), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Scalar Scalar::scaled(const Rational& r) const {
  Scalar s = *this;
  for (auto& x : s.c_) x *= r;
  return s;
}

std::optional<long> Scalar::root_of_unity_order() const {
  if (is_zero()) return std::nullopt;
  long bound = lcm_long(2, n_);  // roots of unity in Q(zeta_N) form <-1, zeta_N>
  Scalar p = *this;
  for (long k = 1; k <= bound; ++k) {
    if (p.is_one()) return k;
    p *= *this;
  }
  return std::nullopt;
}

Scalar Scalar::sqrt_root_of_unity() const {
  require(is_root_of_unity(), "NotRootOfUnity", "sqrt requested of " + str());
  long two_n = 2 * n_;
  Scalar target = promoted(two_n);
  for (long k = 0; k < two_n; ++k) {
    Scalar v = root_of_unity(k, two_n);
    if (v * v == target) return v;
  }
  // Order did not divide N (e.g. -zeta_N with N odd).
  fail("NotRootOfUnity", "no square root in Q(zeta_2N) for " + str());
}

std::string Scalar::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational a = c_[i];
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (i == 0)
      os << a.get_str();
    else
      os << a.get_str() << "*z^" << i;
  }
  if (first) os << "0";
  return os.str();
}

Scalar Scalar::parse(const std::string& text, long conductor) {
  require(conductor >= 1, "InvalidConductor", "conductor must be >= 1");
  std::vector<Rational> c(static_cast<size_t>(euler_phi(conductor)), Rational(0));
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (any) {
      fail("ParseError", "expected '+' or '-' in scalar: " + text);
    }
    size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
      ++i;
    require(i > start, "ParseError", "expected rational in scalar: " + text);
    Rational a(text.substr(start, i - start));
    a.canonicalize();
    if (sign < 0) a = -a;
    long k = 0;
    skip_ws();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip_ws();
      require(i < text.size() && text[i] == 'z', "ParseError", "expected z^k: " + text);
      ++i;
      require(i < text.size() && text[i] == '^', "ParseError", "expected z^k: " + text);
      ++i;
      size_t es = i;
      if (i < text.size() && text[i] == '-') ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      require(i > es, "ParseError", "expected exponent: " + text);
      k = std::stol(text.substr(es, i - es));
    }
    k %= conductor;
    if (k < 0) k += conductor;
    std::vector<Rational> term(static_cast<size_t>(k) + 1, Rational(0));
    term[static_cast<size_t>(k)] = a;
    Scalar t = from_coeffs(conductor, std::move(term));
    for (size_t j = 0; j < c.size(); ++j) c[j] += t.coeffs()[j];
    any = true;
    skip_ws();
  }
  require(any, "ParseError", "empty scalar text");
  return from_coeffs(conductor, std::move(c));
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  long m = lcm_long(a.n_, b.n_);
  Scalar x = a.promoted(m), y = b.promoted(m);
  for (size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] < y.c_[i]) return -1;
    if (y.c_[i] < x.c_[i]) return 1;
  }
  return 0;
}

}  // namespace lt
