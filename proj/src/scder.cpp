#include <sstream>

#include "lietorus/eala.hpp"

namespace lt {

namespace {
bool hom_is_zero(const GroupHom& h) {
  for (const auto& v : h.values())
    if (!v.is_zero()) return false;
  return true;
}

ScalarMatrix hom_matrix(const std::vector<GroupHom>& hs, int n) {
  ScalarMatrix m(static_cast<int>(hs.size()), n);
  for (size_t i = 0; i < hs.size(); ++i)
    for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = hs[i].values()[static_cast<size_t>(j)];
  return m;
}

/// Deterministic basis of the span of the given homs.
std::vector<GroupHom> hom_span_basis(const std::vector<GroupHom>& hs, int n) {
  if (hs.empty()) return {};
  ScalarMatrix m = hom_matrix(hs, n);
  std::vector<int> pivots = m.rref_in_place();
  std::vector<GroupHom> out;
  for (size_t r = 0; r < pivots.size(); ++r) {
    std::vector<Scalar> v(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) v[static_cast<size_t>(j)] = m.at(static_cast<int>(r), j);
    out.emplace_back(std::move(v));
  }
  return out;
}

/// {theta in span(hs) : theta(mu) = 0}, deterministic basis.
std::vector<GroupHom> hom_mu_kernel(const std::vector<GroupHom>& hs, const IVec& mu, int n) {
  std::vector<GroupHom> basis = hom_span_basis(hs, n);
  if (basis.empty()) return {};
  // solve sum c_i theta_i(mu) = 0
  ScalarMatrix m(1, static_cast<int>(basis.size()));
  for (size_t i = 0; i < basis.size(); ++i) m.at(0, static_cast<int>(i)) = basis[i].eval(mu);
  auto ker = m.kernel_basis();
  std::vector<GroupHom> out;
  for (const auto& coeffs : ker) {
    std::vector<Scalar> v(static_cast<size_t>(n), Scalar::zero());
    for (size_t i = 0; i < basis.size(); ++i)
      for (int j = 0; j < n; ++j) v[static_cast<size_t>(j)] += basis[i].values()[static_cast<size_t>(j)] * coeffs[i];
    GroupHom g{std::move(v)};
    if (!hom_is_zero(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<GroupHom> full_hom_basis(int n) {
  std::vector<GroupHom> out;
  for (int i = 0; i < n; ++i) {
    std::vector<Scalar> v(static_cast<size_t>(n), Scalar::zero());
    v[static_cast<size_t>(i)] = Scalar::one();
    out.emplace_back(std::move(v));
  }
  return out;
}
}  // namespace

SCDerElement SCDerElement::term(const IVec& mu, const GroupHom& theta) {
  require(theta.eval(mu).is_zero(), "InvalidSCDer", "theta(mu) must vanish");
  SCDerElement d;
  d.accumulate(mu, theta);
  return d;
}

void SCDerElement::accumulate(const IVec& mu, const GroupHom& theta) {
  if (hom_is_zero(theta)) return;
  auto it = t_.find(mu);
  if (it == t_.end())
    t_.emplace(mu, theta);
  else {
    it->second = it->second + theta;
    if (hom_is_zero(it->second)) t_.erase(it);
  }
}

bool SCDerElement::is_zero() const { return t_.empty(); }

SCDerElement SCDerElement::operator+(const SCDerElement& o) const {
  SCDerElement r = *this;
  for (const auto& [mu, th] : o.t_) r.accumulate(mu, th);
  return r;
}

SCDerElement SCDerElement::operator-() const { return scaled(-Scalar::one()); }

SCDerElement SCDerElement::scaled(const Scalar& c) const {
  SCDerElement r;
  if (c.is_zero()) return r;
  for (const auto& [mu, th] : t_) r.t_.emplace(mu, th.scaled(c));
  return r;
}

std::string SCDerElement::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mu, th] : t_) {
    if (!first) os << " + ";
    os << "chi^" << ivec_str(mu) << " d[";
    for (size_t i = 0; i < th.values().size(); ++i)
      os << (i ? "," : "") << th.values()[i].str();
    os << "]";
    first = false;
  }
  return os.str();
}

SCDerElement scder_bracket(const SCDerElement& a, const SCDerElement& b) {
  SCDerElement out;
  for (const auto& [mu, theta] : a.terms())
    for (const auto& [nu, psi] : b.terms()) {
      IVec sum = ivec_add(mu, nu);
      out.accumulate(sum, psi.scaled(theta.eval(nu)));
      out.accumulate(sum, theta.scaled(-psi.eval(mu)));
    }
  return out;
}

LieElement scder_act(const LieTorus& t, const SCDerElement& d, const LieElement& x) {
  LieElement out;
  for (const auto& [mu, theta] : d.terms()) {
    require(t.centroid_supported(mu), "UnsupportedCentroidDegree",
            "chi^" + ivec_str(mu) + " is not a centroid degree of " + t.name());
    for (const auto& [k, c] : x) {
      Scalar s = theta.eval(k.deg) * c;
      if (s.is_zero()) continue;
      LieElement shifted = t.centroid_apply(mu, k);
      for (const auto& [k2, c2] : shifted) le_accumulate(out, k2, c2 * s);
    }
  }
  return out;
}

DualElement DualElement::atom(const IVec& mu, const IVec& lambda, const Scalar& c) {
  DualElement e;
  std::vector<Scalar> v(lambda.size());
  for (size_t i = 0; i < lambda.size(); ++i) v[i] = Scalar::integer(lambda[i]);
  e.accumulate(mu, v, c);
  return e;
}

DualElement DualElement::from_vector(const IVec& mu, std::vector<Scalar> v) {
  DualElement e;
  e.accumulate(mu, v, Scalar::one());
  return e;
}

void DualElement::accumulate(const IVec& mu, const std::vector<Scalar>& v, const Scalar& c) {
  if (c.is_zero()) return;
  bool allzero = true;
  for (const auto& x : v)
    if (!(x * c).is_zero()) allzero = false;
  if (allzero) return;
  auto it = t_.find(mu);
  if (it == t_.end()) {
    std::vector<Scalar> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] * c;
    t_.emplace(mu, std::move(w));
  } else {
    bool nowzero = true;
    for (size_t i = 0; i < v.size(); ++i) {
      it->second[i] += v[i] * c;
      if (!it->second[i].is_zero()) nowzero = false;
    }
    if (nowzero) t_.erase(it);
  }
}

DualElement DualElement::operator+(const DualElement& o) const {
  DualElement r = *this;
  for (const auto& [mu, v] : o.t_) r.accumulate(mu, v, Scalar::one());
  return r;
}

DualElement DualElement::operator-() const { return scaled(-Scalar::one()); }

DualElement DualElement::scaled(const Scalar& c) const {
  DualElement r;
  for (const auto& [mu, v] : t_) r.accumulate(mu, v, c);
  return r;
}

std::string DualElement::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mu, v] : t_) {
    if (!first) os << " + ";
    os << "c^" << ivec_str(mu) << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
    os << "]";
    first = false;
  }
  return os.str();
}

Scalar dual_pair(const DualElement& c, const SCDerElement& d) {
  Scalar s = Scalar::zero();
  for (const auto& [mu, v] : c.t_) {
    auto it = d.terms().find(ivec_neg(mu));
    if (it == d.terms().end()) continue;
    for (size_t i = 0; i < v.size(); ++i) s += v[i] * it->second.values()[i];
  }
  return s;
}

DualElement dual_act(const SCDerElement& d, const DualElement& c) {
  // (d.c)(d') = c([d', d]); for d = chi^nu d_psi and the component c^(mu)_v,
  // the result is c^(mu+nu)_w with w = psi(v) nu - psi(-mu-nu) v.
  DualElement out;
  for (const auto& [nu, psi] : d.terms())
    for (const auto& [mu, v] : c.terms()) {
      IVec target = ivec_add(mu, nu);
      Scalar psiv = Scalar::zero();
      for (size_t i = 0; i < v.size(); ++i) psiv += v[i] * psi.values()[i];
      std::vector<Scalar> w(v.size(), Scalar::zero());
      for (size_t i = 0; i < v.size(); ++i)
        w[i] = psiv.scaled(Rational(static_cast<long>(nu[i])));
      Scalar shift = psi.eval(ivec_neg(target));
      for (size_t i = 0; i < v.size(); ++i) w[i] -= shift * v[i];
      out.accumulate(target, w, Scalar::one());
    }
  return out;
}

SCDerElement scder_tau(const SCDerElement& d) {
  SCDerElement out;
  for (const auto& [mu, theta] : d.terms()) out.accumulate(ivec_neg(mu), -theta);
  return out;
}

DualElement dual_tau(const DualElement& c) {
  DualElement out;
  for (const auto& [mu, v] : c.terms()) {
    std::vector<Scalar> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
    out.accumulate(ivec_neg(mu), w, Scalar::one());
  }
  return out;
}

// ---------------------------------------------------------------------------

DSubalgebra DSubalgebra::full_scder(const LieTorus* L) {
  DSubalgebra d(L, Kind::FullScder);
  d.u_ = full_hom_basis(L->rank());
  return d;
}

DSubalgebra DSubalgebra::degree_only(const LieTorus* L, std::vector<GroupHom> u) {
  DSubalgebra d(L, Kind::DegreeOnly);
  d.u_ = std::move(u);
  return d;
}

DSubalgebra DSubalgebra::triple(const LieTorus* L, std::vector<GroupHom> u,
                                std::vector<GroupHom> uprime, std::vector<IVec> gens) {
  DSubalgebra d(L, Kind::Triple);
  d.u_ = std::move(u);
  d.uprime_ = std::move(uprime);
  d.gamma_prime_gens_ = std::move(gens);
  return d;
}

DSubalgebra DSubalgebra::skew_example(const LieTorus* L, const IVec& gamma,
                                      std::vector<GroupHom> uplus, std::vector<GroupHom> uminus) {
  require(L->rank() > 1, "NotPermissible", "the skew example needs rank > 1");
  require(!ivec_is_zero(gamma) && L->centroid_supported(gamma), "UnsupportedCentroidDegree",
          "gamma must be a nonzero centroid degree");
  DSubalgebra d(L, Kind::SkewExample);
  d.u_ = full_hom_basis(L->rank());
  d.uplus_ = std::move(uplus);
  d.uminus_ = std::move(uminus);
  d.gamma_ = gamma;
  return d;
}

DSubalgebra DSubalgebra::intersect(const DSubalgebra& other) const {
  DSubalgebra d(L_, Kind::Intersection);
  d.left_ = std::make_shared<DSubalgebra>(*this);
  d.right_ = std::make_shared<DSubalgebra>(other);
  return d;
}

DSubalgebra DSubalgebra::tau_image() const {
  DSubalgebra d = *this;
  d.flipped_ = !d.flipped_;
  return d;
}

std::vector<GroupHom> DSubalgebra::raw_u_space(const IVec& mu) const {
  int n = rank();
  if (!L_->centroid_supported(mu)) return {};
  bool zero = ivec_is_zero(mu);
  switch (kind_) {
    case Kind::FullScder:
      return zero ? hom_span_basis(u_, n) : hom_mu_kernel(full_hom_basis(n), mu, n);
    case Kind::DegreeOnly:
      return zero ? hom_span_basis(u_, n) : std::vector<GroupHom>{};
    case Kind::Triple: {
      if (zero) return hom_span_basis(u_, n);
      if (!in_lattice_span(gamma_prime_gens_, mu)) return {};
      return hom_mu_kernel(uprime_, mu, n);
    }
    case Kind::SkewExample: {
      if (zero) return hom_span_basis(u_, n);
      if (mu == gamma_) return hom_mu_kernel(uplus_, mu, n);
      if (mu == ivec_neg(gamma_)) return hom_mu_kernel(uminus_, mu, n);
      return {};
    }
    case Kind::Intersection: {
      auto a = left_->u_space(mu), b = right_->u_space(mu);
      if (a.empty() || b.empty()) return {};
      // intersection of spans: kernel of [A; -B] stacked coefficients
      ScalarMatrix m(n, static_cast<int>(a.size() + b.size()));
      for (size_t i = 0; i < a.size(); ++i)
        for (int j = 0; j < n; ++j) m.at(j, static_cast<int>(i)) = a[i].values()[static_cast<size_t>(j)];
      for (size_t i = 0; i < b.size(); ++i)
        for (int j = 0; j < n; ++j)
          m.at(j, static_cast<int>(a.size() + i)) = -b[i].values()[static_cast<size_t>(j)];
      auto ker = m.kernel_basis();
      std::vector<GroupHom> out;
      for (const auto& coeffs : ker) {
        std::vector<Scalar> v(static_cast<size_t>(n), Scalar::zero());
        for (size_t i = 0; i < a.size(); ++i)
          for (int j = 0; j < n; ++j) v[static_cast<size_t>(j)] += a[i].values()[static_cast<size_t>(j)] * coeffs[i];
        GroupHom g{std::move(v)};
        if (!hom_is_zero(g)) out.push_back(std::move(g));
      }
      return hom_span_basis(out, n);
    }
  }
  return {};
}

std::vector<GroupHom> DSubalgebra::u_space(const IVec& mu) const {
  return raw_u_space(flipped_ ? ivec_neg(mu) : mu);
}

bool DSubalgebra::is_permissible() const {
  std::vector<GroupHom> u0 = u_space(ivec_zero(rank()));
  if (u0.empty()) return rank() == 0;
  ScalarMatrix m = hom_matrix(u0, rank());
  return integer_kernel(m).empty();
}

std::vector<SCDerElement> DSubalgebra::window_basis(const DegreeWindow& w) const {
  std::vector<SCDerElement> out;
  for (const auto& mu : w.enumerate(rank()))
    for (const auto& theta : u_space(mu)) out.push_back(SCDerElement::term(mu, theta));
  return out;
}

bool DSubalgebra::closed_under_bracket(const DegreeWindow& w) const {
  auto basis = window_basis(w);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      SCDerElement br = scder_bracket(a, b);
      for (const auto& [mu, theta] : br.terms()) {
        // theta must lie in U_D^mu
        auto u = u_space(mu);
        ScalarMatrix m(rank(), static_cast<int>(u.size()));
        for (size_t i = 0; i < u.size(); ++i)
          for (int j = 0; j < rank(); ++j)
            m.at(j, static_cast<int>(i)) = u[i].values()[static_cast<size_t>(j)];
        std::vector<Scalar> rhs(static_cast<size_t>(rank()));
        for (int j = 0; j < rank(); ++j) rhs[static_cast<size_t>(j)] = theta.values()[static_cast<size_t>(j)];
        std::vector<Scalar> sol;
        if (!m.solve_consistent(rhs, sol)) return false;
      }
    }
  return true;
}

std::string DSubalgebra::desc() const {
  switch (kind_) {
    case Kind::FullScder: return flipped_ ? "tau(full_scder)" : "full_scder";
    case Kind::DegreeOnly: return flipped_ ? "tau(degree_only)" : "degree_only";
    case Kind::Triple: return flipped_ ? "tau(triple)" : "triple";
    case Kind::SkewExample: return flipped_ ? "tau(skew_example)" : "skew_example";
    case Kind::Intersection: return "(" + left_->desc() + " ^ " + right_->desc() + ")";
  }
  return "?";
}

bool is_D_invariant(const DSubalgebra& d, const DegreeWindow& w) {
  int n = d.rank();
  for (const auto& mu : w.enumerate(n)) {
    auto a = d.u_space(mu), b = d.u_space(ivec_neg(mu));
    if (a.size() != b.size()) return false;
    if (a.empty()) continue;
    ScalarMatrix ma(n, static_cast<int>(a.size())), mb(n, static_cast<int>(b.size()));
    for (size_t i = 0; i < a.size(); ++i)
      for (int j = 0; j < n; ++j) ma.at(j, static_cast<int>(i)) = a[i].values()[static_cast<size_t>(j)];
    for (size_t i = 0; i < b.size(); ++i)
      for (int j = 0; j < n; ++j) mb.at(j, static_cast<int>(i)) = b[i].values()[static_cast<size_t>(j)];
    if (!same_column_space(ma, mb)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

AffineCocycle AffineCocycle::zero() { return AffineCocycle(); }

AffineCocycle AffineCocycle::table(std::vector<SCDerElement> gens,
                                   std::map<std::pair<int, int>, DualElement> values) {
  AffineCocycle k;
  k.kind_ = Kind::Table;
  k.gens_ = std::move(gens);
  k.values_ = std::move(values);
  return k;
}

AffineCocycle AffineCocycle::tau_image() const {
  if (kind_ == Kind::Zero) return *this;
  AffineCocycle k;
  k.kind_ = Kind::Tau;
  k.left_ = std::make_shared<AffineCocycle>(*this);
  return k;
}

AffineCocycle AffineCocycle::operator+(const AffineCocycle& o) const {
  if (kind_ == Kind::Zero) return o;
  if (o.kind_ == Kind::Zero) return *this;
  AffineCocycle k;
  k.kind_ = Kind::Sum;
  k.left_ = std::make_shared<AffineCocycle>(*this);
  k.right_ = std::make_shared<AffineCocycle>(o);
  return k;
}

DualElement AffineCocycle::eval(const SCDerElement& a, const SCDerElement& b) const {
  switch (kind_) {
    case Kind::Zero:
      return {};
    case Kind::Tau:
      return dual_tau(left_->eval(scder_tau(a), scder_tau(b)));
    case Kind::Sum:
      return left_->eval(a, b) + right_->eval(a, b);
    case Kind::Table:
      break;
  }
  // coordinates of a, b in the generator list, per centroidal degree
  auto coords = [&](const SCDerElement& x) {
    std::vector<Scalar> cs(gens_.size(), Scalar::zero());
    // solve per mu: each term must be a combination of generators at mu
    for (const auto& [mu, theta] : x.terms()) {
      std::vector<int> idx;
      for (size_t g = 0; g < gens_.size(); ++g) {
        const auto& ts = gens_[g].terms();
        if (ts.size() == 1 && ts.begin()->first == mu) idx.push_back(static_cast<int>(g));
      }
      size_t n = theta.values().size();
      ScalarMatrix m(static_cast<int>(n), static_cast<int>(idx.size()));
      for (size_t i = 0; i < idx.size(); ++i) {
        const GroupHom& g = gens_[static_cast<size_t>(idx[i])].terms().begin()->second;
        for (size_t j = 0; j < n; ++j) m.at(static_cast<int>(j), static_cast<int>(i)) = g.values()[j];
      }
      std::vector<Scalar> rhs(theta.values().begin(), theta.values().end());
      std::vector<Scalar> sol;
      // terms outside the generator span contribute zero (the table defines
      // the bilinear extension vanishing off its generators)
      if (!m.solve_consistent(rhs, sol)) continue;
      for (size_t i = 0; i < idx.size(); ++i) cs[static_cast<size_t>(idx[i])] += sol[i];
    }
    return cs;
  };
  std::vector<Scalar> ca = coords(a), cb = coords(b);
  DualElement out;
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (ca[i].is_zero()) continue;
    for (size_t j = 0; j < gens_.size(); ++j) {
      if (cb[j].is_zero()) continue;
      auto it = values_.find({static_cast<int>(i), static_cast<int>(j)});
      if (it != values_.end()) out = out + it->second.scaled(ca[i] * cb[j]);
    }
  }
  return out;
}

}  // namespace lt
