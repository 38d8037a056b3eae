#include "lietorus/torus.hpp"

#include <sstream>

namespace lt {

namespace {

void validate_quantum_matrix(const std::vector<std::vector<Scalar>>& q, bool pm_one_only) {
  size_t n = q.size();
  for (const auto& row : q)
    require(row.size() == n, "InvalidQuantumMatrix", "matrix must be square");
  for (size_t i = 0; i < n; ++i) {
    require(q[i][i].is_one(), "InvalidQuantumMatrix", "q_ii must be 1");
    for (size_t j = 0; j < n; ++j) {
      require((q[i][j] * q[j][i]).is_one(), "InvalidQuantumMatrix", "q_ij q_ji must be 1");
      require(q[i][j].is_root_of_unity(), "NonRootOfUnityParameter",
              "parameter " + q[i][j].str() + " is not a root of unity");
      if (pm_one_only)
        require(q[i][j].is_one() || q[i][j] == -Scalar::one(), "InvalidQuantumMatrix",
                "entries must be +-1, got " + q[i][j].str());
    }
  }
}

std::vector<std::vector<Scalar>> ones_matrix(int n) {
  std::vector<std::vector<Scalar>> q(static_cast<size_t>(n),
                                     std::vector<Scalar>(static_cast<size_t>(n), Scalar::one()));
  return q;
}

long orders_lcm(const std::vector<std::vector<Scalar>>& q) {
  long m = 1;
  for (const auto& row : q)
    for (const auto& x : row) m = lcm_long(m, *x.root_of_unity_order());
  return m;
}

// Sparse element of the internal quantum torus K_w used by the Albert family.
using KwElem = std::map<IVec, Scalar>;

}  // namespace

std::string family_name(TorusFamily f) {
  switch (f) {
    case TorusFamily::Laurent: return "laurent";
    case TorusFamily::Quantum: return "quantum";
    case TorusFamily::Octonion: return "octonion";
    case TorusFamily::JordanPlus: return "jordan_plus";
    case TorusFamily::Hermitian: return "hermitian";
    case TorusFamily::CliffordJS: return "clifford_js";
    case TorusFamily::Albert: return "albert";
  }
  return "?";
}

TorusAlgebra TorusAlgebra::laurent(int n) {
  require(n >= 0, "InvalidQuantumMatrix", "rank must be >= 0");
  TorusAlgebra a;
  a.family_ = TorusFamily::Laurent;
  a.n_ = n;
  a.q_ = ones_matrix(n);
  a.order_lcm_ = 1;
  return a;
}

TorusAlgebra TorusAlgebra::quantum(std::vector<std::vector<Scalar>> q) {
  validate_quantum_matrix(q, false);
  TorusAlgebra a;
  a.family_ = TorusFamily::Quantum;
  a.n_ = static_cast<int>(q.size());
  a.order_lcm_ = orders_lcm(q);
  a.q_ = std::move(q);
  return a;
}

TorusAlgebra TorusAlgebra::octonion(int n) {
  require(n >= 3, "InvalidQuantumMatrix", "octonion torus needs rank >= 3");
  TorusAlgebra a;
  a.family_ = TorusFamily::Octonion;
  a.n_ = n;
  a.order_lcm_ = 2;
  return a;
}

TorusAlgebra TorusAlgebra::jordan_plus(std::vector<std::vector<Scalar>> q) {
  validate_quantum_matrix(q, false);
  TorusAlgebra a;
  a.family_ = TorusFamily::JordanPlus;
  a.n_ = static_cast<int>(q.size());
  a.order_lcm_ = orders_lcm(q);
  a.q_ = std::move(q);
  return a;
}

TorusAlgebra TorusAlgebra::hermitian(std::vector<std::vector<Scalar>> e) {
  validate_quantum_matrix(e, true);
  TorusAlgebra a;
  a.family_ = TorusFamily::Hermitian;
  a.n_ = static_cast<int>(e.size());
  a.order_lcm_ = orders_lcm(e);
  a.q_ = std::move(e);
  return a;
}

TorusAlgebra TorusAlgebra::clifford_js(int n, Semilattice s) {
  require(s.m() >= 2 && s.m() <= n, "BadSemilattice", "need 2 <= m <= n");
  TorusAlgebra a;
  a.family_ = TorusFamily::CliffordJS;
  a.n_ = n;
  a.s_ = std::move(s);
  a.order_lcm_ = 1;
  return a;
}

TorusAlgebra TorusAlgebra::albert(int n) {
  require(n >= 3, "InvalidQuantumMatrix", "Albert torus needs rank >= 3");
  TorusAlgebra a;
  a.family_ = TorusFamily::Albert;
  a.n_ = n;
  // Internal parameter matrix w: w_12 = omega (primitive cube root of 1).
  a.q_ = ones_matrix(n);
  a.q_[0][1] = Scalar::root_of_unity(1, 3);
  a.q_[1][0] = Scalar::root_of_unity(2, 3);
  a.order_lcm_ = 3;
  return a;
}

bool TorusAlgebra::supports(const IVec& deg) const {
  require(static_cast<int>(deg.size()) == n_, "RankMismatch", "degree rank");
  switch (family_) {
    case TorusFamily::Hermitian:
      return reversal_sign(deg).is_one();
    case TorusFamily::CliffordJS: {
      IVec head(deg.begin(), deg.begin() + s_.m());
      return s_.contains(head);
    }
    default:
      return true;
  }
}

Scalar TorusAlgebra::reversal_sign(const IVec& a) const {
  // bar(x^a) = r(a) x^a with r(a) = prod_{i<j} q_ij^{-a_i a_j}.
  Scalar r = Scalar::one();
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      long e = -static_cast<long>(a[static_cast<size_t>(i)] * a[static_cast<size_t>(j)]);
      if (e != 0) r *= q_[static_cast<size_t>(i)][static_cast<size_t>(j)].pow(e);
    }
  return r;
}

Scalar TorusAlgebra::k_quantum(const IVec& a, const IVec& b) const {
  // Normal ordering of x^a x^b with x^a = x_1^{a_1} ... x_n^{a_n}:
  // swapping x_i past x_j (i > j) contributes q_ij^{a_i b_j}.
  Scalar k = Scalar::one();
  for (int i = 1; i < n_; ++i)
    for (int j = 0; j < i; ++j) {
      long e = static_cast<long>(a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)]);
      if (e != 0) k *= q_[static_cast<size_t>(i)][static_cast<size_t>(j)].pow(e);
    }
  return k;
}

Scalar TorusAlgebra::k_albert(const IVec& a, const IVec& b) const {
  // Triple model over the internal quantum torus K_w; raw exponent vectors
  // live in Z^n with the third slot counting u_3 directly.
  const Rational half(1, 2);
  auto kw_mul = [&](const KwElem& x, const KwElem& y) {
    KwElem r;
    for (const auto& [ra, ca] : x)
      for (const auto& [rb, cb] : y) {
        Scalar c = ca * cb * k_quantum(ra, rb);
        if (c.is_zero()) continue;
        IVec deg = ivec_add(ra, rb);
        auto it = r.find(deg);
        if (it == r.end())
          r.emplace(deg, c);
        else {
          it->second += c;
          if (it->second.is_zero()) r.erase(it);
        }
      }
    return r;
  };
  auto kw_add = [](KwElem x, const KwElem& y) {
    for (const auto& [d, c] : y) {
      auto it = x.find(d);
      if (it == x.end())
        x.emplace(d, c);
      else {
        it->second += c;
        if (it->second.is_zero()) x.erase(it);
      }
    }
    return x;
  };
  auto kw_scale = [](KwElem x, const Rational& r) {
    for (auto& [d, c] : x) c = c.scaled(r);
    return x;
  };
  auto kw_jmul = [&](const KwElem& x, const KwElem& y) {
    return kw_scale(kw_add(kw_mul(x, y), kw_mul(y, x)), half);
  };
  // Generic trace: tr(u^r) = 3 u^r for central monomials, 0 otherwise.
  auto kw_tr = [&](const KwElem& x) {
    KwElem r;
    for (const auto& [d, c] : x) {
      long d0 = ((d[0] % 3) + 3) % 3, d1 = ((d[1] % 3) + 3) % 3;
      if (d0 == 0 && d1 == 0) r.emplace(d, c.scaled(Rational(3)));
    }
    return r;
  };
  auto kw_bar = [&](const KwElem& x) {  // x -> x cross 1 = -x/2 + tr(x)/2
    return kw_add(kw_scale(x, Rational(-1, 2)), kw_scale(kw_tr(x), half));
  };
  auto kw_cross = [&](const KwElem& x, const KwElem& y) {
    KwElem r = kw_jmul(x, y);
    r = kw_add(r, kw_scale(kw_mul(kw_tr(x), y), Rational(-1, 2)));
    r = kw_add(r, kw_scale(kw_mul(kw_tr(y), x), Rational(-1, 2)));
    r = kw_add(r, kw_scale(kw_mul(kw_tr(x), kw_tr(y)), half));
    r = kw_add(r, kw_scale(kw_tr(kw_jmul(x, y)), Rational(-1, 2)));
    return r;
  };

  // x^alpha as a triple of K_w elements, slot by alpha_3 mod 3.
  auto to_triple = [&](const IVec& al) {
    std::array<KwElem, 3> t;
    long a3 = ((al[2] % 3) + 3) % 3;
    IVec raw = al;
    if (a3 == 1) raw[2] -= 1;
    if (a3 == 2) raw[2] += 1;
    raw[2] /= 3;
    t[static_cast<size_t>(a3)].emplace(raw, Scalar::one());
    return t;
  };
  auto ta = to_triple(a), tb = to_triple(b);
  IVec u3 = ivec_unit(n_, 2), u3inv = ivec_neg(u3);
  KwElem mu3{{u3, Scalar::one()}}, mu3inv{{u3inv, Scalar::one()}};

  std::array<KwElem, 3> res;
  res[0] = kw_jmul(ta[0], tb[0]);
  res[0] = kw_add(res[0], kw_bar(kw_mul(ta[1], tb[2])));
  res[0] = kw_add(res[0], kw_bar(kw_mul(tb[1], ta[2])));
  res[1] = kw_mul(kw_bar(ta[0]), tb[1]);
  res[1] = kw_add(res[1], kw_mul(kw_bar(tb[0]), ta[1]));
  res[1] = kw_add(res[1], kw_mul(mu3inv, kw_cross(ta[2], tb[2])));
  res[2] = kw_mul(tb[2], kw_bar(ta[0]));
  res[2] = kw_add(res[2], kw_mul(ta[2], kw_bar(tb[0])));
  res[2] = kw_add(res[2], kw_mul(mu3, kw_cross(ta[1], tb[1])));

  IVec target = ivec_add(a, b);
  Scalar coeff = Scalar::zero();
  for (int slot = 0; slot < 3; ++slot) {
    for (const auto& [raw, c] : res[static_cast<size_t>(slot)]) {
      IVec deg = raw;
      deg[2] *= 3;
      if (slot == 1) deg[2] += 1;
      if (slot == 2) deg[2] -= 1;
      require(deg == target, "InternalError", "Albert product left the expected degree");
      coeff += c;
    }
  }
  return coeff;
}

Scalar TorusAlgebra::k(const IVec& a, const IVec& b) const {
  if (!supports(a) || !supports(b)) return Scalar::zero();
  switch (family_) {
    case TorusFamily::Laurent:
      return Scalar::one();
    case TorusFamily::Quantum:
      return k_quantum(a, b);
    case TorusFamily::Octonion: {
      // eps(a,b) = a3 b1 + a2 b1 + a3 b2 + a1 b2 b3 + a2 b1 b3 + a3 b1 b2 (mod 2)
      auto m2 = [](std::int64_t x) { return ((x % 2) + 2) % 2; };
      std::int64_t e = a[2] * b[0] + a[1] * b[0] + a[2] * b[1] + a[0] * b[1] * b[2] +
                       a[1] * b[0] * b[2] + a[2] * b[0] * b[1];
      return m2(e) == 0 ? Scalar::one() : -Scalar::one();
    }
    case TorusFamily::JordanPlus:
    case TorusFamily::Hermitian:
      return (k_quantum(a, b) + k_quantum(b, a)).scaled(Rational(1, 2));
    case TorusFamily::CliffordJS: {
      IVec ha(a.begin(), a.begin() + s_.m()), hb(b.begin(), b.begin() + s_.m());
      int ca = s_.coset_of(ha), cb = s_.coset_of(hb);
      if (ca == -1 || cb == -1 || ca == cb) return Scalar::one();
      return Scalar::zero();
    }
    case TorusFamily::Albert:
      return k_albert(a, b);
  }
  return Scalar::zero();
}

std::vector<IVec> TorusAlgebra::generating_degrees() const {
  std::vector<IVec> out;
  switch (family_) {
    case TorusFamily::Hermitian: {
      for (const auto& d : DegreeWindow(1).enumerate(n_))
        if (supports(d) && !ivec_is_zero(d)) out.push_back(d);
      // x^{2 e_i} is always symmetric; steps of 2 e_i reach every residue
      for (int i = 0; i < n_; ++i) {
        out.push_back(ivec_scaled(ivec_unit(n_, i), 2));
        out.push_back(ivec_scaled(ivec_unit(n_, i), -2));
      }
      break;
    }
    case TorusFamily::CliffordJS: {
      for (int i = 0; i < s_.m(); ++i) {
        out.push_back(ivec_scaled(ivec_unit(n_, i), 2));
        out.push_back(ivec_scaled(ivec_unit(n_, i), -2));
      }
      for (int i = s_.m(); i < n_; ++i) {
        out.push_back(ivec_unit(n_, i));
        out.push_back(ivec_neg(ivec_unit(n_, i)));
      }
      for (const auto& rep : s_.reps()) {
        IVec t = ivec_zero(n_);
        for (int i = 0; i < s_.m(); ++i)
          t[static_cast<size_t>(i)] = ((rep[static_cast<size_t>(i)] % 2) + 2) % 2;
        out.push_back(t);
      }
      break;
    }
    case TorusFamily::Albert: {
      for (const auto& d : DegreeWindow(1).enumerate(n_))
        if (!ivec_is_zero(d)) out.push_back(d);
      break;
    }
    default: {
      for (int i = 0; i < n_; ++i) {
        out.push_back(ivec_unit(n_, i));
        out.push_back(ivec_neg(ivec_unit(n_, i)));
      }
      break;
    }
  }
  return out;
}

long TorusAlgebra::param_order_lcm() const { return order_lcm_; }

bool TorusAlgebra::center_support(const IVec& deg) const {
  require(is_associative(), "NotAssociative", "center support needs an associative torus");
  for (int i = 0; i < n_; ++i) {
    Scalar p = Scalar::one();
    for (int j = 0; j < n_; ++j) {
      long e = static_cast<long>(deg[static_cast<size_t>(j)]);
      if (e != 0) p *= q_[static_cast<size_t>(i)][static_cast<size_t>(j)].pow(e);
    }
    if (!p.is_one()) return false;
  }
  return true;
}

bool TorusAlgebra::commutator_component(const IVec& deg) const {
  require(is_associative(), "NotAssociative", "commutator component needs an associative torus");
  // Structure constants are periodic in beta mod the parameter-order lcm.
  long m = order_lcm_;
  DegreeWindow w(0, std::vector<int>(static_cast<size_t>(n_), static_cast<int>(m - 1)));
  IVec lo(static_cast<size_t>(n_), 0);
  IVec beta(static_cast<size_t>(n_), 0);
  while (true) {
    IVec gamma = ivec_sub(deg, beta);
    if (k_quantum(beta, gamma) != k_quantum(gamma, beta)) return true;
    int i = n_ - 1;
    while (i >= 0 && beta[static_cast<size_t>(i)] == m - 1) {
      beta[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++beta[static_cast<size_t>(i)];
  }
  return false;
}

TorusElement TorusElement::monomial(const TorusAlgebra* alg, const IVec& deg, const Scalar& c) {
  TorusElement e(alg);
  e.add_term(deg, c);
  return e;
}

TorusElement TorusElement::unit(const TorusAlgebra* alg) {
  return monomial(alg, ivec_zero(alg->rank()));
}

void TorusElement::add_term(const IVec& deg, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = t_.find(deg);
  if (it == t_.end())
    t_.emplace(deg, c);
  else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Scalar TorusElement::coeff(const IVec& deg) const {
  auto it = t_.find(deg);
  return it == t_.end() ? Scalar::zero() : it->second;
}

Scalar TorusElement::constant_term() const {
  return alg_ ? coeff(ivec_zero(alg_->rank())) : Scalar::zero();
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
  require(!alg_ || !o.alg_ || alg_ == o.alg_, "AlgebraMismatch", "torus element addition");
  TorusElement r = *this;
  if (!r.alg_) r.alg_ = o.alg_;
  for (const auto& [d, c] : o.t_) r.add_term(d, c);
  return r;
}

TorusElement TorusElement::operator-() const {
  TorusElement r(alg_);
  for (const auto& [d, c] : t_) r.t_.emplace(d, -c);
  return r;
}

TorusElement TorusElement::operator-(const TorusElement& o) const { return *this + (-o); }

TorusElement TorusElement::scaled(const Scalar& c) const {
  TorusElement r(alg_);
  if (c.is_zero()) return r;
  for (const auto& [d, x] : t_) {
    Scalar y = x * c;
    if (!y.is_zero()) r.t_.emplace(d, y);
  }
  return r;
}

bool TorusElement::operator==(const TorusElement& o) const { return t_ == o.t_; }

std::string TorusElement::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : t_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*x^" << ivec_str(d);
    first = false;
  }
  return os.str();
}

TorusElement mul(const TorusElement& u, const TorusElement& v) {
  require(u.algebra() && v.algebra() && u.algebra() == v.algebra(), "AlgebraMismatch",
          "torus multiplication across algebras");
  const TorusAlgebra* a = u.algebra();
  TorusElement r(a);
  for (const auto& [da, ca] : u.terms())
    for (const auto& [db, cb] : v.terms()) {
      Scalar k = a->k(da, db);
      if (k.is_zero()) continue;
      r.add_term(ivec_add(da, db), ca * cb * k);
    }
  return r;
}

TorusElement homog_inverse(const TorusElement& x) {
  require(!x.is_zero(), "ZeroElement", "inverse of zero");
  require(x.is_homogeneous(), "NotHomogeneous", "inverse of a non-homogeneous element");
  const auto& [deg, c] = *x.terms().begin();
  const TorusAlgebra* a = x.algebra();
  Scalar kk = a->k(deg, ivec_neg(deg));
  require(!kk.is_zero(), "ZeroElement", "component pairing degenerates");
  return TorusElement::monomial(a, ivec_neg(deg), (c * kk).inverse());
}

TorusElement TorusInvolution::apply_monomial(const IVec& deg, const Scalar& c) const {
  return TorusElement::monomial(alg_, ivec_neg(deg), c);
}

TorusElement TorusInvolution::apply(const TorusElement& x) const {
  require(x.algebra() == alg_, "AlgebraMismatch", "involution applied across algebras");
  TorusElement r(alg_);
  for (const auto& [d, c] : x.terms()) r.add_term(ivec_neg(d), c);
  return r;
}

TorusInvolution pre_chevalley_torus(const TorusAlgebra& alg) { return TorusInvolution(&alg); }

AntiInvolution anti_involution(const TorusAlgebra& alg, AntiInvolutionKind kind,
                               const std::vector<int>& e) {
  AntiInvolution s;
  s.alg_ = &alg;
  s.kind_ = kind;
  switch (kind) {
    case AntiInvolutionKind::SigmaE: {
      require(alg.family() == TorusFamily::Quantum || alg.family() == TorusFamily::Laurent,
              "IncompatibleKind", "sigma_e lives on an associative quantum torus");
      for (const auto& row : alg.qmatrix())
        for (const auto& x : row)
          require(x.is_one() || x == -Scalar::one(), "IncompatibleKind",
                  "sigma_e needs a +-1 quantum matrix");
      require(static_cast<int>(e.size()) == alg.rank(), "IncompatibleKind",
              "sigma_e needs one sign per generator");
      for (int x : e)
        require(x == 1 || x == -1, "IncompatibleKind", "e entries must be +-1");
      s.e_ = e;
      break;
    }
    case AntiInvolutionKind::HermitianBar: {
      require(alg.family() == TorusFamily::Quantum || alg.family() == TorusFamily::Laurent,
              "IncompatibleKind", "bar lives on an associative quantum torus");
      for (const auto& row : alg.qmatrix())
        for (const auto& x : row)
          require(x.is_one() || x == -Scalar::one(), "IncompatibleKind",
                  "bar needs a +-1 quantum matrix");
      s.e_.assign(static_cast<size_t>(alg.rank()), 1);
      break;
    }
    case AntiInvolutionKind::OctonionStandard:
      require(alg.family() == TorusFamily::Octonion, "IncompatibleKind",
              "standard sigma lives on the octonion torus");
      break;
  }
  return s;
}

Scalar AntiInvolution::sign_on(const IVec& deg) const {
  if (kind_ == AntiInvolutionKind::OctonionStandard) {
    // Fixes even Cayley-part degrees, negates the rest; validated by the
    // anti-homomorphism sweep.
    bool even = deg[0] % 2 == 0 && deg[1] % 2 == 0 && deg[2] % 2 == 0;
    return even ? Scalar::one() : -Scalar::one();
  }
  Scalar sign = alg_->reversal_sign(deg);
  for (size_t i = 0; i < e_.size(); ++i) {
    long a = static_cast<long>(deg[i]);
    if (e_[i] == -1 && (a % 2 + 2) % 2 == 1) sign = -sign;
  }
  return sign;
}

TorusElement AntiInvolution::apply(const TorusElement& x) const {
  require(x.algebra() == alg_, "AlgebraMismatch", "anti-involution applied across algebras");
  TorusElement r(alg_);
  for (const auto& [d, c] : x.terms()) r.add_term(d, c * sign_on(d));
  return r;
}

}  // namespace lt
