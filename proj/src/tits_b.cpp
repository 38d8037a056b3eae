#include "lietorus/constructions_titsb.hpp"

namespace lt {

namespace {
constexpr int kG = 0;   // g-basis atom: aux = (index), deg in 2Z^n
constexpr int kVW = 1;  // v_a (x) x^s w_i: aux = (a, i), deg = 2s + tau_i
constexpr int kDW = 2;  // D_{x^s w_i, w_j}: aux = (i, j) with i < j, deg = 2s + tau_i + tau_j
}  // namespace

TitsBTorus::TitsBTorus(int ell, int n, std::vector<IVec> taus)
    : ell_(ell), n_(n), taus_(std::move(taus)), g_(MatrixLie::builtin('B', ell)) {
  require(ell >= 3, "RankTooSmall", "type B_l needs l >= 3");
  require(!taus_.empty(), "BadTauList", "need m >= 1 (tau_1 = 0 is the scalar slot)");
  require(ivec_is_zero(taus_[0]), "BadTauList", "tau_1 must be 0");
  for (const auto& t : taus_)
    require(static_cast<int>(t.size()) == n_, "BadTauList", "tau rank mismatch");
  for (size_t i = 0; i < taus_.size(); ++i)
    for (size_t j = i + 1; j < taus_.size(); ++j) {
      bool same = true;
      for (int k = 0; k < n_; ++k)
        if (((taus_[i][static_cast<size_t>(k)] - taus_[j][static_cast<size_t>(k)]) % 2 + 2) % 2)
          same = false;
      require(!same, "BadTauList", "tau_i = tau_j mod 2Z^n");
    }
  // weights of the defining so(2l+1) representation: v_a has weight
  // e_a (a < l), -e_{a-l} (l <= a < 2l), 0 (a = 2l)
}

std::string TitsBTorus::name() const {
  return "tits_b(l=" + std::to_string(ell_) + ",m=" + std::to_string(taus_.size()) + ")";
}

IVec TitsBTorus::v_weight(int a) const {
  if (a < ell_) return ivec_unit(ell_, a);
  if (a < 2 * ell_) return ivec_neg(ivec_unit(ell_, a - ell_));
  return ivec_zero(ell_);
}

static bool all_even(const IVec& v) {
  for (auto x : v)
    if (((x % 2) + 2) % 2) return false;
  return true;
}

/// module index i >= 1 with deg = 2s + tau_i (w-slot), or -1.
int TitsBTorus::w_index(const IVec& deg) const {
  for (size_t i = 1; i < taus_.size(); ++i)
    if (all_even(ivec_sub(deg, taus_[i]))) return static_cast<int>(i);
  return -1;
}

std::vector<AtomKey> TitsBTorus::atoms_at(const IVec& root, const IVec& deg) const {
  std::vector<AtomKey> out;
  if (!ivec_is_zero(root) && !g_.roots().is_root(root)) return out;
  if (all_even(deg))
    for (int b : g_.atoms_with_root(root)) out.push_back({root, deg, kG, {b}});
  // VW atoms occupy short roots and 0 (the v_{2l+1} line)
  bool vw_root = ivec_is_zero(root);
  int va = 2 * ell_;
  for (int a = 0; a < 2 * ell_ && !vw_root; ++a)
    if (v_weight(a) == root) {
      vw_root = true;
      va = a;
    }
  if (vw_root) {
    int wi = w_index(deg);
    if (wi >= 0) out.push_back({root, deg, kVW, {va, wi}});
  }
  if (ivec_is_zero(root)) {
    for (size_t i = 1; i < taus_.size(); ++i)
      for (size_t j = i + 1; j < taus_.size(); ++j)
        if (all_even(ivec_sub(ivec_sub(deg, taus_[i]), taus_[j])))
          out.push_back({root, deg, kDW, {static_cast<int>(i), static_cast<int>(j)}});
  }
  return out;
}

LieElement TitsBTorus::bracket_atoms(const AtomKey& a, const AtomKey& b) const {
  LieElement out;
  IVec deg = ivec_add(a.deg, b.deg);
  auto g_atom = [&](int idx, const IVec& d, const Scalar& c) {
    le_accumulate(out, {g_.atom_root(idx), d, kG, {idx}}, c);
  };
  auto vw_atom = [&](int va, const IVec& d, const Scalar& c) {
    le_accumulate(out, {v_weight(va), d, kVW, {va, w_index(d)}}, c);
  };
  auto dw_atom = [&](int i, int j, const IVec& d, const Scalar& c) {
    if (i == j) return;
    if (i < j)
      le_accumulate(out, {ivec_zero(ell_), d, kDW, {i, j}}, c);
    else
      le_accumulate(out, {ivec_zero(ell_), d, kDW, {j, i}}, -c);
  };

  if (a.kind == kG && b.kind == kG) {
    for (const auto& [k, c] : g_.bracket_atoms(static_cast<int>(a.aux[0]),
                                               static_cast<int>(b.aux[0])))
      g_atom(k, deg, c);
    return out;
  }
  if ((a.kind == kG && b.kind == kVW) || (a.kind == kVW && b.kind == kG)) {
    const AtomKey& g = a.kind == kG ? a : b;
    const AtomKey& v = a.kind == kG ? b : a;
    Scalar sign = a.kind == kG ? Scalar::one() : -Scalar::one();
    // [D (x) b, x (x) y] = D x (x) b y
    const ScalarMatrix& m = g_.matrix(static_cast<int>(g.aux[0]));
    int va = static_cast<int>(v.aux[0]);
    for (int r = 0; r < 2 * ell_ + 1; ++r)
      if (!m.at(r, va).is_zero()) vw_atom(r, deg, m.at(r, va) * sign);
    return out;
  }
  if (a.kind == kG || b.kind == kG) return out;  // [D (x) b, a (x) E] = 0
  if (a.kind == kVW && b.kind == kVW) {
    // [x (x) y, x' (x) y'] = D_{x,x'} (x) T(y y') + T(x x') (x) D_{y,y'}
    int va = static_cast<int>(a.aux[0]), vb = static_cast<int>(b.aux[0]);
    int wi = static_cast<int>(a.aux[1]), wj = static_cast<int>(b.aux[1]);
    // T(y y') = g(y, y') = delta_{ij} x^{s+t+tau_i}; the D_{x,x'} part
    if (wi == wj) {
      // D_{v_a, v_b} = -[L_{v_a}, L_{v_b}] in Cliff(f): as a matrix,
      // u -> f(v_a, u) v_b - f(v_b, u) v_a
      ScalarMatrix m(2 * ell_ + 1, 2 * ell_ + 1);
      auto fpair = [&](int r, int s) {
        if (r < ell_ && s == r + ell_) return Scalar::one();
        if (s < ell_ && r == s + ell_) return Scalar::one();
        if (r == 2 * ell_ && s == 2 * ell_) return Scalar::one();
        return Scalar::zero();
      };
      for (int u = 0; u < 2 * ell_ + 1; ++u) {
        Scalar c1 = fpair(va, u), c2 = fpair(vb, u);
        if (!c1.is_zero()) m.at(vb, u) += c1;
        if (!c2.is_zero()) m.at(va, u) -= c2;
      }
      for (const auto& [k, c] : g_.decompose(m)) g_atom(k, deg, c);
    }
    // T(x x') (x) D_{y,y'} = f(v_a, v_b) D_{y,y'}
    Scalar f = Scalar::zero();
    if (va < ell_ && vb == va + ell_) f = Scalar::one();
    if (vb < ell_ && va == vb + ell_) f = Scalar::one();
    if (va == 2 * ell_ && vb == 2 * ell_) f = Scalar::one();
    if (!f.is_zero()) dw_atom(wi, wj, deg, f);
    return out;
  }
  if (a.kind == kDW && b.kind == kDW) {
    // [E, E'] = D_{E w, w'} + D_{w, E w'} for E' = D_{w, w'}
    int i1 = static_cast<int>(a.aux[0]), j1 = static_cast<int>(a.aux[1]);
    int i2 = static_cast<int>(b.aux[0]), j2 = static_cast<int>(b.aux[1]);
    // E(x^t w_k) = g(w-part...) : D_{u,v}(w) = g(u,w) v - g(v,w) u with
    // u = x^s w_{i1}, v = w_{j1}
    if (i2 == i1) dw_atom(j1, j2, deg, Scalar::one());
    if (i2 == j1) dw_atom(i1, j2, deg, -Scalar::one());
    if (j2 == i1) dw_atom(i2, j1, deg, Scalar::one());
    if (j2 == j1) dw_atom(i2, i1, deg, -Scalar::one());
    return out;
  }
  // DW with VW: [1 (x) E, x (x) y] = x (x) E y
  const AtomKey& e = a.kind == kDW ? a : b;
  const AtomKey& v = a.kind == kDW ? b : a;
  Scalar sign = a.kind == kDW ? Scalar::one() : -Scalar::one();
  int i = static_cast<int>(e.aux[0]), j = static_cast<int>(e.aux[1]);
  int va = static_cast<int>(v.aux[0]), wk = static_cast<int>(v.aux[1]);
  // E(x^t w_k) = g(x^s w_i, x^t w_k) w_j - g(w_j, x^t w_k) x^s w_i
  if (wk == i) vw_atom(va, deg, sign);
  if (wk == j) vw_atom(va, deg, -sign);
  return out;
}

Scalar TitsBTorus::form_atoms(const AtomKey& a, const AtomKey& b) const {
  if (!ivec_is_zero(ivec_add(a.deg, b.deg)) || !ivec_is_zero(ivec_add(a.root, b.root)))
    return Scalar::zero();
  if (a.kind != b.kind) return Scalar::zero();
  if (a.kind == kG) {
    return g_.form_atoms(static_cast<int>(a.aux[0]), static_cast<int>(b.aux[0]));
  }
  if (a.kind == kVW) {
    // -2 f(v_a, v_b) ct(g(y, y'))
    int va = static_cast<int>(a.aux[0]), vb = static_cast<int>(b.aux[0]);
    int wi = static_cast<int>(a.aux[1]), wj = static_cast<int>(b.aux[1]);
    if (wi != wj) return Scalar::zero();
    Scalar f = Scalar::zero();
    if (va < ell_ && vb == va + ell_) f = Scalar::one();
    if (vb < ell_ && va == vb + ell_) f = Scalar::one();
    if (va == 2 * ell_ && vb == 2 * ell_) f = Scalar::one();
    return f.scaled(Rational(-2));
  }
  // <D_{y1,y1'}, D_{y2,y2'}> = 2 ct(g(y1, D_2(y1')))
  if (a.aux != b.aux) return Scalar::zero();
  // D_2(w_{j}) with matching indices gives -x^{...} w_i; pairing with x^s w_i
  // produces -2 at exactly opposite degrees
  return Scalar::integer(-2);
}

bool TitsBTorus::centroid_supported(const IVec& mu) const { return all_even(mu); }

LieElement TitsBTorus::centroid_apply(const IVec& mu, const AtomKey& a) const {
  require(centroid_supported(mu), "UnsupportedCentroidDegree",
          "degree " + ivec_str(mu) + " is not central");
  LieElement r;
  AtomKey k = a;
  k.deg = ivec_add(a.deg, mu);
  le_accumulate(r, k, Scalar::one());
  return r;
}

std::string TitsBTorus::atom_desc(const AtomKey& a) const {
  switch (a.kind) {
    case kG:
      return "g[" + std::to_string(a.aux[0]) + "]@x^" + ivec_str(a.deg);
    case kVW:
      return "v" + std::to_string(a.aux[0] + 1) + "(x)w" + std::to_string(a.aux[1] + 1) + "@x^" +
             ivec_str(a.deg);
    default:
      return "D(w" + std::to_string(a.aux[0] + 1) + ",w" + std::to_string(a.aux[1] + 1) + ")@x^" +
             ivec_str(a.deg);
  }
}

}  // namespace lt
