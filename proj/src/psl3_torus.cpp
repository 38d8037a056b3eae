#include "lietorus/constructions.hpp"

namespace lt {

namespace {
constexpr int kOff = 0;
constexpr int kDiag = 1;
constexpr int kDer = 2;

// 3x3 scalar matrices as flat arrays
using M3 = std::array<Scalar, 9>;
M3 m3_zero() { return M3{}; }
Scalar& at3(M3& m, int i, int j) { return m[static_cast<size_t>(3 * i + j)]; }
const Scalar& at3(const M3& m, int i, int j) { return m[static_cast<size_t>(3 * i + j)]; }
M3 m3_mul(const M3& a, const M3& b) {
  M3 r = m3_zero();
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      if (at3(a, i, k).is_zero()) continue;
      for (int j = 0; j < 3; ++j) at3(r, i, j) += at3(a, i, k) * at3(b, k, j);
    }
  return r;
}
Scalar m3_tr(const M3& a) { return at3(a, 0, 0) + at3(a, 1, 1) + at3(a, 2, 2); }
}  // namespace

Psl3Torus::Psl3Torus(std::shared_ptr<const TorusAlgebra> coords, int gen_radius)
    : coords_(std::move(coords)), rs_(RootSystem::build('A', 2)), gen_radius_(gen_radius) {
  require(coords_->is_alternative(), "NotAlternative",
          "psl3 needs an alternative coordinate torus");
}

std::string Psl3Torus::name() const { return "psl3(" + family_name(coords_->family()) + ")"; }

std::vector<AtomKey> Psl3Torus::atoms_at(const IVec& root, const IVec& deg) const {
  std::vector<AtomKey> out;
  if (ivec_is_zero(root)) {
    for (int i = 0; i < 2; ++i) out.push_back({root, deg, kDiag, {i}});
    // windowed inner-derivation atoms D(x^mu, x^{deg-mu})
    for (const auto& mu : DegreeWindow(gen_radius_).enumerate(rank())) {
      IVec nu = ivec_sub(deg, mu);
      if (mu < nu) out.push_back({root, deg, kDer, mu});
    }
    return out;
  }
  if (!rs_.is_root(root)) return out;
  int i = -1, j = -1;
  for (int k = 0; k < 3; ++k) {
    if (root[static_cast<size_t>(k)] == 1) i = k;
    if (root[static_cast<size_t>(k)] == -1) j = k;
  }
  out.push_back({root, deg, kOff, {i, j}});
  return out;
}

// matrix part of a non-Der atom
static M3 matrix_of(const AtomKey& a) {
  M3 m = m3_zero();
  if (a.kind == kOff) {
    at3(m, static_cast<int>(a.aux[0]), static_cast<int>(a.aux[1])) = Scalar::one();
  } else {
    int i = static_cast<int>(a.aux[0]);
    at3(m, i, i) = Scalar::one();
    at3(m, i + 1, i + 1) = -Scalar::one();
  }
  return m;
}

// decompose a traceless matrix at a fixed degree into kOff/kDiag atoms
static void traceless_to_atoms(const M3& m, const IVec& deg, LieElement& out) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j || at3(m, i, j).is_zero()) continue;
      IVec root = ivec_sub(ivec_unit(3, i), ivec_unit(3, j));
      le_accumulate(out, {root, deg, kOff, {i, j}}, at3(m, i, j));
    }
  Scalar a0 = at3(m, 0, 0);
  Scalar a1 = at3(m, 0, 0) + at3(m, 1, 1);
  IVec zero = ivec_zero(3);
  le_accumulate(out, {zero, deg, kDiag, {0}}, a0);
  le_accumulate(out, {zero, deg, kDiag, {1}}, a1);
}

OperatorElement Psl3Torus::der_part(const LieElement& x) const {
  OperatorElement op(coords_.get());
  for (const auto& [k, c] : x)
    if (k.kind == kDer)
      op = op + OperatorElement::alt_inner(coords_.get(), k.aux, ivec_sub(k.deg, k.aux), c);
  return op;
}

LieElement Psl3Torus::der_atoms_from(const OperatorElement& op, const IVec&) const {
  LieElement out;
  for (const auto& [p, c] : op.terms()) {
    require(p.kind == PrimKind::AltInner, "InternalError", "psl3 derivation part expects D terms");
    le_accumulate(out, {ivec_zero(3), ivec_add(p.a, p.b), kDer, p.a}, c);
  }
  return out;
}

LieElement Psl3Torus::bracket_atoms(const AtomKey& x, const AtomKey& y) const {
  LieElement out;
  IVec deg = ivec_add(x.deg, y.deg);
  bool xd = x.kind == kDer, yd = y.kind == kDer;
  if (xd && yd) {
    OperatorElement d1 = OperatorElement::alt_inner(coords_.get(), x.aux, ivec_sub(x.deg, x.aux));
    OperatorElement d2 = OperatorElement::alt_inner(coords_.get(), y.aux, ivec_sub(y.deg, y.aux));
    return der_atoms_from(d1.bracket(d2), deg);
  }
  if (xd || yd) {
    // [D_{a,b}, m (x) c] = m (x) D_{a,b}(c)
    const AtomKey& d = xd ? x : y;
    const AtomKey& m = xd ? y : x;
    OperatorElement op = OperatorElement::alt_inner(coords_.get(), d.aux, ivec_sub(d.deg, d.aux));
    TorusElement img = op.eval_monomial(m.deg);
    Scalar sign = xd ? Scalar::one() : -Scalar::one();
    M3 mm = matrix_of(m);
    for (const auto& [dg, c] : img.terms()) {
      LieElement part;
      traceless_to_atoms(mm, dg, part);
      for (const auto& [k, v] : part) le_accumulate(out, k, v * c * sign);
    }
    return out;
  }
  // matrix-matrix: the three-term display
  M3 mx = matrix_of(x), my = matrix_of(y);
  Scalar kxy = coords_->k(x.deg, y.deg), kyx = coords_->k(y.deg, x.deg);
  Scalar sym = (kxy + kyx).scaled(Rational(1, 2));
  Scalar asym = (kxy - kyx).scaled(Rational(1, 2));
  M3 xy = m3_mul(mx, my), yx = m3_mul(my, mx);
  Scalar trxy = m3_tr(xy);
  // [x,y] (x) (ab+ba)/2
  M3 comm = m3_zero();
  for (int i = 0; i < 9; ++i) comm[static_cast<size_t>(i)] = xy[static_cast<size_t>(i)] - yx[static_cast<size_t>(i)];
  M3 acomm = m3_zero();
  for (int i = 0; i < 9; ++i) acomm[static_cast<size_t>(i)] = xy[static_cast<size_t>(i)] + yx[static_cast<size_t>(i)];
  Scalar third_tr = trxy.scaled(Rational(2, 3));
  for (int i = 0; i < 3; ++i) at3(acomm, i, i) -= third_tr;
  M3 total = m3_zero();
  for (int i = 0; i < 9; ++i)
    total[static_cast<size_t>(i)] =
        comm[static_cast<size_t>(i)] * sym + acomm[static_cast<size_t>(i)] * asym;
  traceless_to_atoms(total, deg, out);
  // (1/3) tr(xy) D_{a,b}
  if (!trxy.is_zero()) {
    OperatorElement d = OperatorElement::alt_inner(coords_.get(), x.deg, y.deg,
                                                   trxy.scaled(Rational(1, 3)));
    out = le_add(out, der_atoms_from(d, deg));
  }
  return out;
}

Scalar Psl3Torus::form_atoms(const AtomKey& x, const AtomKey& y) const {
  if (!ivec_is_zero(ivec_add(x.deg, y.deg))) return Scalar::zero();
  bool xd = x.kind == kDer, yd = y.kind == kDer;
  if (xd != yd) return Scalar::zero();  // matrix and derivation summands are orthogonal
  if (!xd) {
    // tr(m m') * ct(a . b) with a.b the symmetrized coefficient
    Scalar sym = (coords_->k(x.deg, y.deg) + coords_->k(y.deg, x.deg)).scaled(Rational(1, 2));
    return m3_tr(m3_mul(matrix_of(x), matrix_of(y))) * sym;
  }
  // <D_{a,b}, D'> = -3 ct(a * D'(b))
  OperatorElement d2 = OperatorElement::alt_inner(coords_.get(), y.aux, ivec_sub(y.deg, y.aux));
  TorusElement img = d2.eval_monomial(ivec_sub(x.deg, x.aux));
  TorusElement a = TorusElement::monomial(coords_.get(), x.aux);
  return mul(a, img).constant_term().scaled(Rational(-3));
}

bool Psl3Torus::centroid_supported(const IVec& mu) const {
  if (coords_->family() == TorusFamily::Octonion) {
    return mu[0] % 2 == 0 && mu[1] % 2 == 0 && mu[2] % 2 == 0;
  }
  return coords_->center_support(mu);
}

LieElement Psl3Torus::centroid_apply(const IVec& mu, const AtomKey& a) const {
  require(centroid_supported(mu), "UnsupportedCentroidDegree",
          "degree " + ivec_str(mu) + " is not central");
  LieElement r;
  if (a.kind == kDer) {
    // z . D_{a,b} = D_{z a, b}
    IVec first = ivec_add(a.aux, mu);
    Scalar c = coords_->k(mu, a.aux);
    OperatorElement d =
        OperatorElement::alt_inner(coords_.get(), first, ivec_sub(a.deg, a.aux), c);
    return der_atoms_from(d, ivec_add(a.deg, mu));
  }
  le_accumulate(r, {a.root, ivec_add(a.deg, mu), a.kind, a.aux}, coords_->k(mu, a.deg));
  return r;
}

bool Psl3Torus::element_is_zero(const LieElement& x, int) const {
  OperatorElement op(coords_.get());
  for (const auto& [k, c] : x) {
    if (k.kind != kDer) return false;
    op = op + OperatorElement::alt_inner(coords_.get(), k.aux, ivec_sub(k.deg, k.aux), c);
  }
  return op.derivation_is_zero();
}

ScalarMatrix Psl3Torus::coordinatize(const std::vector<LieElement>& xs, int) const {
  // concrete part: union of non-Der keys; Der part: evaluation coordinates
  std::vector<AtomKey> keys;
  for (const auto& x : xs)
    for (const auto& [k, c] : x)
      if (k.kind != kDer) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  // Derivations are injectively determined by their generator values, so the
  // radius-1 evaluation window gives faithful coordinates for the D-part.
  std::vector<IVec> win = DegreeWindow(1).enumerate(rank());
  std::vector<std::map<std::pair<IVec, IVec>, Scalar>> evals(xs.size());
  std::vector<std::pair<IVec, IVec>> ekeys;
  for (size_t i = 0; i < xs.size(); ++i) {
    OperatorElement op = der_part(xs[i]);
    if (op.formally_zero()) continue;
    for (const auto& din : win) {
      TorusElement img = op.eval_monomial(din);
      for (const auto& [dout, c] : img.terms()) {
        evals[i].emplace(std::make_pair(din, dout), c);
        ekeys.emplace_back(din, dout);
      }
    }
  }
  std::sort(ekeys.begin(), ekeys.end());
  ekeys.erase(std::unique(ekeys.begin(), ekeys.end()), ekeys.end());
  ScalarMatrix m(static_cast<int>(xs.size()), static_cast<int>(keys.size() + ekeys.size()));
  for (size_t i = 0; i < xs.size(); ++i) {
    for (const auto& [k, c] : xs[i]) {
      if (k.kind == kDer) continue;
      auto it = std::lower_bound(keys.begin(), keys.end(), k);
      m.at(static_cast<int>(i), static_cast<int>(it - keys.begin())) = c;
    }
    for (const auto& [ek, c] : evals[i]) {
      auto it = std::lower_bound(ekeys.begin(), ekeys.end(), ek);
      m.at(static_cast<int>(i), static_cast<int>(keys.size() + (it - ekeys.begin()))) = c;
    }
  }
  return m;
}

std::string Psl3Torus::atom_desc(const AtomKey& a) const {
  switch (a.kind) {
    case kOff:
      return "E(" + std::to_string(a.aux[0] + 1) + "," + std::to_string(a.aux[1] + 1) + ")@x^" +
             ivec_str(a.deg);
    case kDiag:
      return "h" + std::to_string(a.aux[0] + 1) + "@x^" + ivec_str(a.deg);
    default:
      return "D(x^" + ivec_str(a.aux) + ",x^" + ivec_str(ivec_sub(a.deg, a.aux)) + ")";
  }
}

}  // namespace lt
