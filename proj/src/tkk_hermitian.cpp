#include "lietorus/constructions.hpp"

namespace lt {

namespace {
constexpr int kP = 0;  // J part
constexpr int kQ = 1;  // bar part
constexpr int kM = 2;  // inner-structure operator T_{x^deg E_ij}
}  // namespace

TkkHermitian::TkkHermitian(int ell, std::shared_ptr<const TorusAlgebra> coords,
                           std::vector<int> e)
    : ell_(ell),
      coords_(std::move(coords)),
      sigma_(anti_involution(*coords_, AntiInvolutionKind::SigmaE,
                             e.empty() ? std::vector<int>(static_cast<size_t>(coords_->rank()), 1)
                                       : e)),
      rs_(RootSystem::build('C', ell)) {
  require(ell >= 2, "RankTooSmall", "H_l needs l >= 2");
  require(coords_->is_associative(), "NotAssociative",
          "the matrix Hermitian coordinates must be associative");
  // Peirce sanity: the diagonal idempotents are orthogonal and sum to 1.
  // e_i = E_ii with entry 1; orthogonality is matrix-unit arithmetic, checked
  // here against the coordinate algebra's unit just to bar degenerate input.
  require(coords_->k(ivec_zero(coords_->rank()), ivec_zero(coords_->rank())).is_one(), "BadPeirce",
          "coordinate unit is degenerate");
}

std::string TkkHermitian::name() const {
  return "tkk_c(H" + std::to_string(ell_) + "(" + family_name(coords_->family()) + "))";
}

Scalar TkkHermitian::sigma_sign(const IVec& deg) const { return sigma_.sign_on(deg); }

std::vector<AtomKey> TkkHermitian::atoms_at(const IVec& root, const IVec& deg) const {
  std::vector<AtomKey> out;
  // roots: +-(e_i + e_j) for P/Q (including 2 e_i), e_i - e_j and 0 for M
  int plus_i = -1, plus_j = -1, minus_i = -1, minus_j = -1;
  bool zero = ivec_is_zero(root);
  if (!zero && !rs_.is_root(root)) return out;
  for (int k = 0; k < ell_; ++k) {
    auto v = root[static_cast<size_t>(k)];
    if (v == 2) plus_i = plus_j = k;
    if (v == -2) minus_i = minus_j = k;
    if (v == 1) (plus_i < 0 ? plus_i : plus_j) = k;
    if (v == -1) (minus_i < 0 ? minus_i : minus_j) = k;
  }
  if (zero) {
    // diagonal operators T_{x^deg E_ii}; drop the last one when the identity
    // multiple T_{x^deg I} degenerates to zero (central sigma-odd degree)
    bool degenerate = centroid_like_central(deg) && sigma_sign(deg) == -Scalar::one();
    for (int i = 0; i < ell_ - (degenerate ? 1 : 0); ++i) out.push_back({root, deg, kM, {i, i}});
    return out;
  }
  if (plus_i >= 0 && minus_i >= 0) {
    out.push_back({root, deg, kM, {plus_i, minus_i}});
    return out;
  }
  if (plus_i >= 0) {
    if (plus_i == plus_j && !sigma_sign(deg).is_one()) return out;  // J_ii needs s(deg) = +1
    out.push_back({root, deg, kP, {plus_i, plus_j}});
    return out;
  }
  if (minus_i == minus_j && !sigma_sign(deg).is_one()) return out;
  out.push_back({root, deg, kQ, {minus_i, minus_j}});
  return out;
}

bool TkkHermitian::centroid_like_central(const IVec& deg) const {
  for (int i = 0; i < coords_->rank(); ++i) {
    Scalar p = Scalar::one();
    for (int j = 0; j < coords_->rank(); ++j) {
      long e = static_cast<long>(deg[static_cast<size_t>(j)]);
      if (e != 0) p *= coords_->qmatrix()[static_cast<size_t>(i)][static_cast<size_t>(j)].pow(e);
    }
    if (!p.is_one()) return false;
  }
  return true;
}

TkkHermitian::MatA TkkHermitian::matrix_of(const AtomKey& a) const {
  MatA m;
  int i = static_cast<int>(a.aux[0]), j = static_cast<int>(a.aux[1]);
  if (a.kind == kM) {
    m[{i, j}] = TorusElement::monomial(coords_.get(), a.deg);
    return m;
  }
  m[{i, j}] = TorusElement::monomial(coords_.get(), a.deg);
  if (i != j)
    m[{j, i}] = TorusElement::monomial(coords_.get(), a.deg, sigma_sign(a.deg));
  return m;
}

TkkHermitian::MatA TkkHermitian::mat_mul(const MatA& x, const MatA& y) const {
  MatA r;
  for (const auto& [ij, xe] : x)
    for (const auto& [kl, ye] : y) {
      if (ij.second != kl.first) continue;
      TorusElement p = mul(xe, ye);
      if (p.is_zero()) continue;
      auto key = std::make_pair(ij.first, kl.second);
      auto it = r.find(key);
      if (it == r.end())
        r.emplace(key, p);
      else {
        it->second = it->second + p;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  return r;
}

TkkHermitian::MatA TkkHermitian::star(const MatA& x) const {
  MatA r;
  for (const auto& [ij, xe] : x) r[{ij.second, ij.first}] = sigma_.apply(xe);
  return r;
}

LieElement TkkHermitian::from_m_block(const MatA& m, const IVec& deg) const {
  // decompose T_M; when T_{x^deg I} = 0 the diagonal is normalized by
  // subtracting the trailing coefficient from every diagonal entry
  std::vector<Scalar> diag(static_cast<size_t>(ell_), Scalar::zero());
  LieElement out;
  for (const auto& [ij, e] : m) {
    if (e.is_zero()) continue;
    Scalar c = e.coeff(deg);
    require(e.terms().size() == 1 && !c.is_zero(), "InternalError",
            "m-block entry is not homogeneous of the expected degree");
    auto [i, j] = ij;
    if (i == j) {
      diag[static_cast<size_t>(i)] = c;
      continue;
    }
    IVec root = ivec_sub(ivec_unit(ell_, i), ivec_unit(ell_, j));
    le_accumulate(out, {root, deg, kM, {i, j}}, c);
  }
  bool degenerate = centroid_like_central(deg) && sigma_sign(deg) == -Scalar::one();
  if (degenerate) {
    Scalar last = diag[static_cast<size_t>(ell_ - 1)];
    for (auto& d : diag) d -= last;
  }
  IVec zero_root = ivec_zero(ell_);
  for (int i = 0; i < ell_; ++i)
    le_accumulate(out, {zero_root, deg, kM, {i, i}}, diag[static_cast<size_t>(i)]);
  return out;
}

LieElement TkkHermitian::from_sym_block(const MatA& m, const IVec& deg, bool barpart) const {
  LieElement out;
  int kind = barpart ? kQ : kP;
  for (const auto& [ij, e] : m) {
    auto [i, j] = ij;
    if (i > j) continue;  // the (j,i) entry is sigma-determined; verified below
    if (e.is_zero()) continue;
    Scalar c = e.coeff(deg);
    require(e.terms().size() == 1 && !c.is_zero(), "InternalError",
            "sym-block entry is not homogeneous of the expected degree");
    if (i < j) {
      auto other = m.find({j, i});
      require(other != m.end() && other->second == sigma_.apply(e), "InternalError",
              "sym block is not sigma-symmetric");
    } else {
      require(sigma_sign(deg).is_one(), "InternalError", "diagonal entry with sigma-odd degree");
    }
    IVec root = ivec_add(ivec_unit(ell_, i), ivec_unit(ell_, j));
    if (barpart) root = ivec_neg(root);
    le_accumulate(out, {root, deg, kind, {i, j}}, c);
  }
  return out;
}

LieElement TkkHermitian::bracket_atoms(const AtomKey& a, const AtomKey& b) const {
  IVec deg = ivec_add(a.deg, b.deg);
  const Rational half(1, 2);
  if (a.kind == kM && b.kind == kM) {
    // [T_M, T_N] = T_{[M,N]/2}
    MatA mn = mat_mul(matrix_of(a), matrix_of(b));
    MatA nm = mat_mul(matrix_of(b), matrix_of(a));
    MatA c;
    for (const auto& [ij, e] : mn) c[ij] = e.scaled(Scalar(1, 2));
    for (const auto& [ij, e] : nm) {
      auto it = c.find(ij);
      TorusElement t = e.scaled(Scalar(-1, 2));
      if (it == c.end())
        c.emplace(ij, t);
      else {
        it->second = it->second + t;
        if (it->second.is_zero()) c.erase(it);
      }
    }
    return from_m_block(c, deg);
  }
  if (a.kind == kM || b.kind == kM) {
    const AtomKey& e = a.kind == kM ? a : b;
    const AtomKey& v = a.kind == kM ? b : a;
    Scalar sign = a.kind == kM ? Scalar::one() : -Scalar::one();
    MatA M = matrix_of(e), p = matrix_of(v);
    MatA r;
    auto acc = [&](const MatA& part, const Scalar& s) {
      for (const auto& [ij, x] : part) {
        TorusElement t = x.scaled(s);
        auto it = r.find(ij);
        if (it == r.end())
          r.emplace(ij, t);
        else {
          it->second = it->second + t;
          if (it->second.is_zero()) r.erase(it);
        }
      }
    };
    if (v.kind == kP) {
      // [T_M, x] = (M p + p M*)/2
      acc(mat_mul(M, p), sign.scaled(half));
      acc(mat_mul(p, star(M)), sign.scaled(half));
      return from_sym_block(r, deg, false);
    }
    // [T_M, ybar] = bar((-M* q - q M)/2)
    acc(mat_mul(star(M), p), (-sign).scaled(half));
    acc(mat_mul(p, M), (-sign).scaled(half));
    return from_sym_block(r, deg, true);
  }
  if (a.kind == b.kind) return {};  // [P,P] = [Q,Q] = 0
  // [x, ybar] = T_{x y} (matrix product), [ybar, x] = -T_{x y}
  const AtomKey& x = a.kind == kP ? a : b;
  const AtomKey& y = a.kind == kP ? b : a;
  Scalar sign = a.kind == kP ? Scalar::one() : -Scalar::one();
  MatA prod = mat_mul(matrix_of(x), matrix_of(y));
  MatA scaledm;
  for (const auto& [ij, e] : prod) scaledm[ij] = e.scaled(sign);
  return from_m_block(scaledm, deg);
}

Scalar TkkHermitian::form_atoms(const AtomKey& a, const AtomKey& b) const {
  if (!ivec_is_zero(ivec_add(a.deg, b.deg)) || !ivec_is_zero(ivec_add(a.root, b.root)))
    return Scalar::zero();
  auto trace_ct = [&](const MatA& m) {
    Scalar s = Scalar::zero();
    for (const auto& [ij, e] : m)
      if (ij.first == ij.second) s += e.constant_term();
    return s;
  };
  if (a.kind == kM && b.kind == kM) {
    // ct tr(M N + M* N*)
    MatA mn = mat_mul(matrix_of(a), matrix_of(b));
    MatA msns = mat_mul(star(matrix_of(a)), star(matrix_of(b)));
    return trace_ct(mn) + trace_ct(msns);
  }
  if ((a.kind == kP && b.kind == kQ) || (a.kind == kQ && b.kind == kP)) {
    const AtomKey& x = a.kind == kP ? a : b;
    const AtomKey& y = a.kind == kP ? b : a;
    return trace_ct(mat_mul(matrix_of(x), matrix_of(y)));
  }
  return Scalar::zero();
}

bool TkkHermitian::centroid_supported(const IVec& mu) const {
  return centroid_like_central(mu) && sigma_sign(mu).is_one();
}

LieElement TkkHermitian::centroid_apply(const IVec& mu, const AtomKey& a) const {
  require(centroid_supported(mu), "UnsupportedCentroidDegree",
          "degree " + ivec_str(mu) + " is not central");
  Scalar k = coords_->k(mu, a.deg);
  IVec deg = ivec_add(a.deg, mu);
  if (a.kind == kM) {
    MatA m;
    int i = static_cast<int>(a.aux[0]), j = static_cast<int>(a.aux[1]);
    m[{i, j}] = TorusElement::monomial(coords_.get(), deg, k);
    return from_m_block(m, deg);
  }
  LieElement r;
  le_accumulate(r, {a.root, deg, a.kind, a.aux}, k);
  return r;
}

std::string TkkHermitian::atom_desc(const AtomKey& a) const {
  std::string pos = "(" + std::to_string(a.aux[0] + 1) + "," + std::to_string(a.aux[1] + 1) + ")";
  switch (a.kind) {
    case kP: return "J" + pos + "@x^" + ivec_str(a.deg);
    case kQ: return "bar(J" + pos + ")@x^" + ivec_str(a.deg);
    default: return "T[x^" + ivec_str(a.deg) + "E" + pos + "]";
  }
}

}  // namespace lt

namespace lt {

std::shared_ptr<LieTorus> make_tkk_c_hermitian(int ell, std::shared_ptr<const TorusAlgebra> coords,
                                               std::vector<int> e) {
  if (coords->family() == TorusFamily::Octonion) {
    require(ell == 3, "OctonionRankNot3", "octonion Hermitian coordinates need l = 3");
    fail("UnsupportedCoordinates",
         "H_3(octonion) TKK is not implemented; see the project notes");
  }
  return std::make_shared<TkkHermitian>(ell, std::move(coords), std::move(e));
}

}  // namespace lt
