#include "lietorus/constructions.hpp"

namespace lt {

namespace {
constexpr int kOffDiag = 0;
constexpr int kDiagDiff = 1;
constexpr int kDiagFirst = 2;
}  // namespace

SlTorus::SlTorus(int ell_plus_1, std::shared_ptr<const TorusAlgebra> coords)
    : m_(ell_plus_1), coords_(std::move(coords)), rs_(RootSystem::build('A', ell_plus_1 - 1)) {
  require(ell_plus_1 >= 4, "RankTooSmall", "type A_l with l >= 3 requires l+1 >= 4");
  require(coords_->is_associative(), "NotAssociative",
          "sl_{l+1} needs an associative coordinate torus");
}

std::string SlTorus::name() const {
  return "sl(" + std::to_string(m_) + "," + family_name(coords_->family()) + ")";
}

bool SlTorus::commutator_cached(const IVec& deg) const {
  auto it = cc_cache_.find(deg);
  if (it != cc_cache_.end()) return it->second;
  bool v = coords_->commutator_component(deg);
  cc_cache_.emplace(deg, v);
  return v;
}

std::vector<AtomKey> SlTorus::atoms_at(const IVec& root, const IVec& deg) const {
  std::vector<AtomKey> out;
  if (ivec_is_zero(root)) {
    for (int i = 0; i + 1 < m_; ++i) out.push_back({root, deg, kDiagDiff, {i}});
    if (commutator_cached(deg)) out.push_back({root, deg, kDiagFirst, {}});
    return out;
  }
  if (!rs_.is_root(root)) return out;
  int i = -1, j = -1;
  for (int k = 0; k < m_; ++k) {
    if (root[static_cast<size_t>(k)] == 1) i = k;
    if (root[static_cast<size_t>(k)] == -1) j = k;
  }
  out.push_back({root, deg, kOffDiag, {i, j}});
  return out;
}

std::vector<std::tuple<int, int, Scalar>> SlTorus::entries(const AtomKey& a) const {
  switch (a.kind) {
    case kOffDiag:
      return {{static_cast<int>(a.aux[0]), static_cast<int>(a.aux[1]), Scalar::one()}};
    case kDiagDiff: {
      int i = static_cast<int>(a.aux[0]);
      return {{i, i, Scalar::one()}, {i + 1, i + 1, -Scalar::one()}};
    }
    case kDiagFirst:
      return {{0, 0, Scalar::one()}};
  }
  fail("InternalError", "unknown sl atom kind");
}

LieElement SlTorus::from_entries(const std::map<std::pair<int, int>, Scalar>& e,
                                 const IVec& deg) const {
  LieElement out;
  std::vector<Scalar> diag(static_cast<size_t>(m_), Scalar::zero());
  for (const auto& [ij, c] : e) {
    auto [i, j] = ij;
    if (c.is_zero()) continue;
    if (i == j) {
      diag[static_cast<size_t>(i)] = c;
      continue;
    }
    IVec root = ivec_sub(ivec_unit(m_, i), ivec_unit(m_, j));
    le_accumulate(out, {root, deg, kOffDiag, {i, j}}, c);
  }
  // diag = sum a_i (E_ii - E_{i+1,i+1}) + b E_11
  std::vector<Scalar> a(static_cast<size_t>(m_ - 1), Scalar::zero());
  a[static_cast<size_t>(m_ - 2)] = -diag[static_cast<size_t>(m_ - 1)];
  for (int i = m_ - 2; i >= 1; --i)
    a[static_cast<size_t>(i - 1)] = a[static_cast<size_t>(i)] - diag[static_cast<size_t>(i)];
  Scalar b = diag[0] - a[0];
  IVec zero = ivec_zero(m_);
  for (int i = 0; i + 1 < m_; ++i)
    le_accumulate(out, {zero, deg, kDiagDiff, {i}}, a[static_cast<size_t>(i)]);
  if (!b.is_zero()) {
    require(commutator_cached(deg), "InternalError",
            "trace part fell outside [A,A]; bracket closure violated");
    le_accumulate(out, {zero, deg, kDiagFirst, {}}, b);
  }
  return out;
}

LieElement SlTorus::bracket_atoms(const AtomKey& x, const AtomKey& y) const {
  std::map<std::pair<int, int>, Scalar> acc;
  Scalar kxy = coords_->k(x.deg, y.deg), kyx = coords_->k(y.deg, x.deg);
  for (const auto& [i, j, c] : entries(x))
    for (const auto& [k, l, d] : entries(y)) {
      if (j == k) {
        Scalar v = c * d * kxy;
        if (!v.is_zero()) {
          auto key = std::make_pair(i, l);
          auto it = acc.find(key);
          if (it == acc.end()) acc.emplace(key, v);
          else it->second += v;
        }
      }
      if (l == i) {
        Scalar v = c * d * kyx;
        if (!v.is_zero()) {
          auto key = std::make_pair(k, j);
          auto it = acc.find(key);
          if (it == acc.end()) acc.emplace(key, -v);
          else it->second -= v;
        }
      }
    }
  return from_entries(acc, ivec_add(x.deg, y.deg));
}

Scalar SlTorus::form_atoms(const AtomKey& x, const AtomKey& y) const {
  // constant term of tr(XY)
  if (!ivec_is_zero(ivec_add(x.deg, y.deg))) return Scalar::zero();
  Scalar k = coords_->k(x.deg, y.deg);
  Scalar s = Scalar::zero();
  for (const auto& [i, j, c] : entries(x))
    for (const auto& [kk, l, d] : entries(y))
      if (j == kk && l == i) s += c * d * k;
  return s;
}

bool SlTorus::centroid_supported(const IVec& mu) const { return coords_->center_support(mu); }

LieElement SlTorus::centroid_apply(const IVec& mu, const AtomKey& a) const {
  require(centroid_supported(mu), "UnsupportedCentroidDegree",
          "degree " + ivec_str(mu) + " is not central");
  Scalar k = coords_->k(mu, a.deg);
  LieElement r;
  le_accumulate(r, {a.root, ivec_add(a.deg, mu), a.kind, a.aux}, k);
  return r;
}

std::string SlTorus::atom_desc(const AtomKey& a) const {
  switch (a.kind) {
    case kOffDiag:
      return "x^" + ivec_str(a.deg) + "E(" + std::to_string(a.aux[0] + 1) + "," +
             std::to_string(a.aux[1] + 1) + ")";
    case kDiagDiff:
      return "x^" + ivec_str(a.deg) + "(E" + std::to_string(a.aux[0] + 1) +
             std::to_string(a.aux[0] + 1) + "-E" + std::to_string(a.aux[0] + 2) +
             std::to_string(a.aux[0] + 2) + ")";
    default:
      return "x^" + ivec_str(a.deg) + "E11";
  }
}

}  // namespace lt
