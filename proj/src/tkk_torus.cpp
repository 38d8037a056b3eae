#include "lietorus/constructions.hpp"

namespace lt {

namespace {
constexpr int kJ = 0;
constexpr int kJbar = 1;
constexpr int kOpL = 2;
constexpr int kOpJI = 3;

RootSystem a1_model() {
  return RootSystem::custom({{2}, {-2}},
                            {{{{2}, {2}}, 2},
                             {{{-2}, {2}}, -2},
                             {{{2}, {-2}}, -2},
                             {{{-2}, {-2}}, 2}},
                            "A1");
}
}  // namespace

TkkTorus::TkkTorus(std::shared_ptr<const TorusAlgebra> coords, int gen_radius)
    : coords_(std::move(coords)), rs_(a1_model()), gen_radius_(gen_radius) {
  require(coords_->is_jordan(), "NotJordan", "TKK needs a Jordan coordinate torus");
}

std::string TkkTorus::name() const { return "tkk(" + family_name(coords_->family()) + ")"; }

std::vector<AtomKey> TkkTorus::atoms_at(const IVec& root, const IVec& deg) const {
  std::vector<AtomKey> out;
  if (root == IVec{2}) {
    if (coords_->supports(deg)) out.push_back({root, deg, kJ, {}});
  } else if (root == IVec{-2}) {
    if (coords_->supports(deg)) out.push_back({root, deg, kJbar, {}});
  } else if (ivec_is_zero(root)) {
    if (coords_->supports(deg)) out.push_back({root, deg, kOpL, {}});
    for (const auto& mu : DegreeWindow(gen_radius_).enumerate(rank())) {
      IVec nu = ivec_sub(deg, mu);
      if (mu < nu && coords_->supports(mu) && coords_->supports(nu))
        out.push_back({root, deg, kOpJI, mu});
    }
  }
  return out;
}

OperatorElement TkkTorus::op_part(const LieElement& x) const {
  OperatorElement op(coords_.get());
  for (const auto& [k, c] : x) {
    if (k.kind == kOpL)
      op = op + OperatorElement::lmul(coords_.get(), k.deg, c);
    else if (k.kind == kOpJI)
      op = op + OperatorElement::jinner(coords_.get(), k.aux, ivec_sub(k.deg, k.aux), c);
  }
  return op;
}

LieElement TkkTorus::op_atoms_from(const OperatorElement& op) const {
  LieElement out;
  IVec zero{0};
  for (const auto& [p, c] : op.terms()) {
    if (p.kind == PrimKind::L)
      le_accumulate(out, {zero, p.a, kOpL, {}}, c);
    else
      le_accumulate(out, {zero, ivec_add(p.a, p.b), kOpJI, p.a}, c);
  }
  return out;
}

LieElement TkkTorus::bracket_atoms(const AtomKey& a, const AtomKey& b) const {
  LieElement out;
  bool aop = a.kind == kOpL || a.kind == kOpJI;
  bool bop = b.kind == kOpL || b.kind == kOpJI;
  IVec zero{0};
  if (aop && bop) {
    OperatorElement ea = op_part(LieElement{{a, Scalar::one()}});
    OperatorElement eb = op_part(LieElement{{b, Scalar::one()}});
    return op_atoms_from(ea.bracket(eb));
  }
  if (aop || bop) {
    const AtomKey& e = aop ? a : b;
    const AtomKey& v = aop ? b : a;
    Scalar sign = aop ? Scalar::one() : -Scalar::one();
    OperatorElement op = op_part(LieElement{{e, Scalar::one()}});
    if (v.kind == kJ) {
      // [E, x] = E(x)
      TorusElement img = op.eval_monomial(v.deg);
      for (const auto& [d, c] : img.terms()) le_accumulate(out, {{2}, d, kJ, {}}, c * sign);
    } else {
      // [E, ybar] = bar(Ebar(y)); Ebar flips the sign of the L-part
      OperatorElement flipped(coords_.get());
      for (const auto& [p, c] : op.terms())
        flipped.add_term(p, p.kind == PrimKind::L ? -c : c);
      TorusElement img = flipped.eval_monomial(v.deg);
      for (const auto& [d, c] : img.terms()) le_accumulate(out, {{-2}, d, kJbar, {}}, c * sign);
    }
    return out;
  }
  if (a.kind == b.kind) return out;  // [J,J] = [Jbar,Jbar] = 0
  // [x, ybar] = x tri y = L_{x y} + [L_x, L_y]
  const AtomKey& x = a.kind == kJ ? a : b;
  const AtomKey& y = a.kind == kJ ? b : a;
  Scalar sign = a.kind == kJ ? Scalar::one() : -Scalar::one();
  Scalar kxy = coords_->k(x.deg, y.deg);
  le_accumulate(out, {zero, ivec_add(x.deg, y.deg), kOpL, {}}, kxy * sign);
  OperatorElement ji = OperatorElement::jinner(coords_.get(), x.deg, y.deg, sign);
  return le_add(out, op_atoms_from(ji));
}

Scalar TkkTorus::form_atoms(const AtomKey& a, const AtomKey& b) const {
  if (!ivec_is_zero(ivec_add(a.deg, b.deg)) || !ivec_is_zero(ivec_add(a.root, b.root)))
    return Scalar::zero();
  bool aop = a.kind == kOpL || a.kind == kOpJI;
  bool bop = b.kind == kOpL || b.kind == kOpJI;
  if (aop != bop) return Scalar::zero();
  if (!aop) {
    // (x, ybar) = ct(x . y)
    if (a.kind == b.kind) return Scalar::zero();
    return coords_->k(a.deg, b.deg);
  }
  // <E, L_c> = ct(E(c)); <E, JI(c,d)> = ct(E(c) . x^d) - ct(E(c . d))
  OperatorElement e = op_part(LieElement{{a, Scalar::one()}});
  if (b.kind == kOpL) {
    return e.eval_monomial(b.deg).constant_term();
  }
  IVec c = b.aux, d = ivec_sub(b.deg, b.aux);
  TorusElement ec = e.eval_monomial(c);
  Scalar first = mul(ec, TorusElement::monomial(coords_.get(), d)).constant_term();
  Scalar kcd = coords_->k(c, d);
  Scalar second = e.eval_monomial(ivec_add(c, d)).constant_term() * kcd;
  return first - second;
}

bool TkkTorus::centroid_supported(const IVec& mu) const {
  if (!coords_->supports(mu)) return false;
  switch (coords_->family()) {
    case TorusFamily::JordanPlus:
    case TorusFamily::Hermitian: {
      // central in the underlying quantum torus
      for (int i = 0; i < coords_->rank(); ++i) {
        Scalar p = Scalar::one();
        for (int j = 0; j < coords_->rank(); ++j) {
          long e = static_cast<long>(mu[static_cast<size_t>(j)]);
          if (e != 0) p *= coords_->qmatrix()[static_cast<size_t>(i)][static_cast<size_t>(j)].pow(e);
        }
        if (!p.is_one()) return false;
      }
      return true;
    }
    case TorusFamily::CliffordJS: {
      IVec head(mu.begin(), mu.begin() + coords_->semilattice().m());
      return coords_->semilattice().coset_of(head) == -1;
    }
    case TorusFamily::Albert:
      return mu[0] % 3 == 0 && mu[1] % 3 == 0 && mu[2] % 3 == 0;
    default:
      return true;  // Laurent-type
  }
}

LieElement TkkTorus::centroid_apply(const IVec& mu, const AtomKey& a) const {
  require(centroid_supported(mu), "UnsupportedCentroidDegree",
          "degree " + ivec_str(mu) + " is not central");
  LieElement r;
  Scalar k;
  switch (a.kind) {
    case kJ:
    case kJbar:
    case kOpL:
      k = coords_->k(mu, a.deg);
      le_accumulate(r, {a.root, ivec_add(a.deg, mu), a.kind, a.aux}, k);
      return r;
    default: {
      // z . [L_a, L_b] = [L_{z a}, L_b]
      k = coords_->k(mu, a.aux);
      OperatorElement ji = OperatorElement::jinner(coords_.get(), ivec_add(a.aux, mu),
                                                   ivec_sub(a.deg, a.aux), k);
      return op_atoms_from(ji);
    }
  }
}

bool TkkTorus::element_is_zero(const LieElement& x, int) const {
  OperatorElement op(coords_.get());
  for (const auto& [k, c] : x) {
    if (k.kind == kJ || k.kind == kJbar) return false;
    if (k.kind == kOpL)
      op = op + OperatorElement::lmul(coords_.get(), k.deg, c);
    else
      op = op + OperatorElement::jinner(coords_.get(), k.aux, ivec_sub(k.deg, k.aux), c);
  }
  if (op.formally_zero()) return true;
  // op = L_a + D: op(1) = a fixes the multiplication part; the rest is a
  // derivation, determined by its values on a generating set.
  if (!op.eval_monomial(ivec_zero(rank())).is_zero()) return false;
  for (const auto& deg : coords_->generating_degrees())
    if (!op.eval_monomial(deg).is_zero()) return false;
  return true;
}

ScalarMatrix TkkTorus::coordinatize(const std::vector<LieElement>& xs, int) const {
  std::vector<AtomKey> keys;
  for (const auto& x : xs)
    for (const auto& [k, c] : x)
      if (k.kind == kJ || k.kind == kJbar) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<IVec> win;
  win.push_back(ivec_zero(rank()));
  for (const auto& d : coords_->generating_degrees()) win.push_back(d);
  std::vector<std::map<std::pair<IVec, IVec>, Scalar>> evals(xs.size());
  std::vector<std::pair<IVec, IVec>> ekeys;
  for (size_t i = 0; i < xs.size(); ++i) {
    OperatorElement op = op_part(xs[i]);
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
      if (k.kind != kJ && k.kind != kJbar) continue;
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

std::string TkkTorus::atom_desc(const AtomKey& a) const {
  switch (a.kind) {
    case kJ: return "x^" + ivec_str(a.deg);
    case kJbar: return "bar(x^" + ivec_str(a.deg) + ")";
    case kOpL: return "L(x^" + ivec_str(a.deg) + ")";
    default:
      return "[L(x^" + ivec_str(a.aux) + "),L(x^" + ivec_str(ivec_sub(a.deg, a.aux)) + ")]";
  }
}

}  // namespace lt
