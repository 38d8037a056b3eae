#include <random>

#include "lietorus/eala.hpp"

namespace lt {

namespace {
std::vector<GroupHom> dual_basis_vectors(const std::vector<GroupHom>& u, int n) {
  // vectors v_j (as scalar n-vectors) with theta_i(v_j) = delta_ij; exists on
  // the span of u when u is linearly independent (it is: u_space bases are)
  std::vector<GroupHom> out;
  if (u.empty()) return out;
  ScalarMatrix m(static_cast<int>(u.size()), n);
  for (size_t i = 0; i < u.size(); ++i)
    for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = u[i].values()[static_cast<size_t>(j)];
  for (size_t j = 0; j < u.size(); ++j) {
    std::vector<Scalar> rhs(u.size(), Scalar::zero());
    rhs[j] = Scalar::one();
    std::vector<Scalar> v = m.solve(rhs);
    out.emplace_back(std::move(v));
  }
  return out;
}
}  // namespace

Report validate_cocycle(const DSubalgebra& d, const AffineCocycle& kappa, const DegreeWindow& w) {
  Report rep;
  rep.window = w.radius();
  std::vector<SCDerElement> basis = d.window_basis(w);
  rep.atoms_checked = static_cast<long>(basis.size());
  IVec zero = ivec_zero(d.rank());

  bool ok_alt = true, ok_d0 = true, ok_sym = true, ok_grade = true, ok_cyc = true;
  std::string wit_alt, wit_d0, wit_sym, wit_grade, wit_cyc;
  auto functional_zero = [&](const DualElement& c) {
    for (const auto& e : basis)
      if (!dual_pair(c, e).is_zero()) return false;
    return true;
  };
  for (const auto& a : basis) {
    DualElement kaa = kappa.eval(a, a);
    if (!functional_zero(kaa)) {
      ok_alt = false;
      wit_alt = "kappa(d,d) != 0 at d = " + a.str();
    }
    if (a.terms().size() == 1 && ivec_is_zero(a.terms().begin()->first)) {
      for (const auto& b : basis)
        if (!functional_zero(kappa.eval(a, b))) {
          ok_d0 = false;
          wit_d0 = "kappa(D^0, D) != 0 at (" + a.str() + ", " + b.str() + ")";
        }
    }
  }
  for (const auto& a : basis)
    for (const auto& b : basis) {
      DualElement kab = kappa.eval(a, b);
      // grading: components of kappa(D^mu1, D^mu2) sit at mu1+mu2
      IVec mu1 = a.terms().begin()->first, mu2 = b.terms().begin()->first;
      for (const auto& [mu, v] : kab.terms())
        if (!(mu == ivec_add(mu1, mu2))) {
          ok_grade = false;
          wit_grade = "kappa component at " + ivec_str(mu) + " for degrees " + ivec_str(mu1) +
                      ", " + ivec_str(mu2);
        }
      for (const auto& c : basis) {
        Scalar lhs = dual_pair(kab, c);
        Scalar rhs = dual_pair(kappa.eval(b, c), a);
        if (!(lhs == rhs)) {
          ok_sym = false;
          wit_sym = "kappa(d1,d2)(d3) != kappa(d2,d3)(d1)";
        }
        // cyclic derivation identity
        DualElement left = kappa.eval(scder_bracket(a, b), c) +
                           kappa.eval(scder_bracket(b, c), a) +
                           kappa.eval(scder_bracket(c, a), b);
        DualElement right = dual_act(a, kappa.eval(b, c)) + dual_act(b, kappa.eval(c, a)) +
                            dual_act(c, kappa.eval(a, b));
        if (!functional_zero(left + (-right))) {
          ok_cyc = false;
          wit_cyc = "cyclic identity fails";
        }
      }
    }
  rep.add("cocycle.alternating", ok_alt, wit_alt);
  rep.add("cocycle.d0_annihilates", ok_d0, wit_d0);
  rep.add("cocycle.cyclic_symmetry", ok_sym, wit_sym);
  rep.add("cocycle.graded", ok_grade, wit_grade);
  rep.add("cocycle.derivation_identity", ok_cyc, wit_cyc);
  return rep;
}

bool is_pair_invariant(const DSubalgebra& d, const AffineCocycle& kappa, const DegreeWindow& w) {
  if (!is_D_invariant(d, w)) return false;
  std::vector<SCDerElement> basis = d.window_basis(w);
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) {
        // kappa(d1,d2)(tau d3) = kappa(tau d1, tau d2)(d3)
        Scalar lhs = dual_pair(kappa.eval(a, b), scder_tau(c));
        Scalar rhs = dual_pair(kappa.eval(scder_tau(a), scder_tau(b)), c);
        if (!(lhs == rhs)) return false;
      }
  return true;
}

EalaAlgebra::EalaAlgebra(const LieTorus* L, DSubalgebra D, AffineCocycle kappa,
                         bool require_permissible)
    : L_(L), D_(std::move(D)), kappa_(std::move(kappa)) {
  if (require_permissible)
    require(D_.is_permissible(), "NotPermissible",
            "the evaluation map of D^0 is not injective on the degree lattice");
}

DualElement EalaAlgebra::sigma_D(const LieElement& x, const LieElement& y) const {
  // sigma_D(x, y)(chi^mu d_theta) = (chi^mu d_theta (x), y)
  DualElement out;
  for (const auto& [ka, ca] : x)
    for (const auto& [kb, cb] : y) {
      IVec mu = ivec_neg(ivec_add(ka.deg, kb.deg));
      if (!L_->centroid_supported(mu)) continue;
      LieElement shifted = L_->centroid(mu, LieElement{{ka, ca}});
      Scalar s = L_->form(shifted, LieElement{{kb, cb}});
      if (s.is_zero()) continue;
      std::vector<Scalar> v(ka.deg.size());
      for (size_t i = 0; i < ka.deg.size(); ++i)
        v[i] = s.scaled(Rational(static_cast<long>(ka.deg[i])));
      out = out + DualElement::from_vector(mu, std::move(v));
    }
  return out;
}

EalaElement EalaAlgebra::bracket(const EalaElement& u, const EalaElement& v) const {
  EalaElement out;
  out.x = L_->bracket(u.x, v.x);
  out.x = le_add(out.x, scder_act(*L_, u.d, v.x));
  out.x = le_add(out.x, le_scaled(scder_act(*L_, v.d, u.x), -Scalar::one()));
  out.c = sigma_D(u.x, v.x) + dual_act(u.d, v.c) + (-dual_act(v.d, u.c)) + kappa_.eval(u.d, v.d);
  out.d = scder_bracket(u.d, v.d);
  return out;
}

Scalar EalaAlgebra::form(const EalaElement& u, const EalaElement& v) const {
  return L_->form(u.x, v.x) + dual_pair(u.c, v.d) + dual_pair(v.c, u.d);
}

bool EalaAlgebra::element_is_zero(const EalaElement& u, const DegreeWindow& w, int eqr) const {
  if (!L_->element_is_zero(u.x, eqr)) return false;
  if (!u.d.is_zero()) return false;
  if (u.c.formally_zero()) return true;
  for (const auto& e : D_.window_basis(w))
    if (!dual_pair(u.c, e).is_zero()) return false;
  return true;
}

std::vector<EalaAlgebra::EAtom> EalaAlgebra::window_atoms(const DegreeWindow& w) const {
  std::vector<EAtom> out;
  for (const auto& a : L_->atoms_in_window(w)) {
    EAtom e;
    e.part = 0;
    e.lie = a;
    e.idx = 0;
    e.elem.x = LieElement{{a, Scalar::one()}};
    e.desc = L_->atom_desc(a);
    out.push_back(std::move(e));
  }
  int n = L_->rank();
  for (const auto& mu : w.enumerate(n)) {
    // dual atoms: the basis of (D^{-mu})* realized by vectors dual to the
    // U^{-mu} basis
    auto u = D_.u_space(ivec_neg(mu));
    auto duals = dual_basis_vectors(u, n);
    for (size_t j = 0; j < duals.size(); ++j) {
      EAtom e;
      e.part = 1;
      e.mu = mu;
      e.idx = static_cast<int>(j);
      e.elem.c = DualElement::from_vector(
          mu, std::vector<Scalar>(duals[j].values().begin(), duals[j].values().end()));
      e.desc = "c^" + ivec_str(mu) + "[" + std::to_string(j) + "]";
      out.push_back(std::move(e));
    }
    auto us = D_.u_space(mu);
    for (size_t j = 0; j < us.size(); ++j) {
      EAtom e;
      e.part = 2;
      e.mu = mu;
      e.idx = static_cast<int>(j);
      e.elem.d = SCDerElement::term(mu, us[j]);
      e.desc = "chi^" + ivec_str(mu) + "d[" + std::to_string(j) + "]";
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<EalaElement> EalaAlgebra::cartan_basis() const {
  std::vector<EalaElement> out;
  for (const auto& h : L_->h_atoms()) {
    EalaElement e;
    e.x = LieElement{{h, Scalar::one()}};
    out.push_back(std::move(e));
  }
  int n = L_->rank();
  IVec zero = ivec_zero(n);
  auto u0 = D_.u_space(zero);
  for (const auto& v : dual_basis_vectors(u0, n)) {
    EalaElement e;
    e.c = DualElement::from_vector(zero,
                                   std::vector<Scalar>(v.values().begin(), v.values().end()));
    out.push_back(std::move(e));
  }
  for (const auto& th : u0) {
    EalaElement e;
    e.d = SCDerElement::term(zero, th);
    out.push_back(std::move(e));
  }
  return out;
}

Report eala_axiom_checks(const EalaAlgebra& e, const CheckerConfig& cfg) {
  Report rep;
  rep.window = cfg.window;
  DegreeWindow w(cfg.window);
  const LieTorus& L = e.torus();
  std::vector<EalaAlgebra::EAtom> atoms = e.window_atoms(w);
  rep.atoms_checked = static_cast<long>(atoms.size());
  std::vector<EalaElement> H = e.cartan_basis();
  const int eqr = cfg.eq_radius;

  // --- A1: invariance (sampled triples) + nondegenerate component pairing ---
  {
    bool ok = true;
    std::string wit;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<size_t> d(0, atoms.size() - 1);
    for (int s = 0; s < cfg.samples; ++s) {
      const auto &a = atoms[d(rng)], &b = atoms[d(rng)], &c = atoms[d(rng)];
      Scalar lhs = e.form(e.bracket(a.elem, b.elem), c.elem);
      Scalar rhs = e.form(a.elem, e.bracket(b.elem, c.elem));
      if (!(lhs == rhs)) {
        ok = false;
        wit = "([x,y],z) != (x,[y,z]) at (" + a.desc + ", " + b.desc + ", " + c.desc + ")";
        break;
      }
    }
    rep.add("A1.invariant", ok, wit);
  }
  {
    // group atoms by bigrade labels: part 0 -> (root, deg); parts 1/2 -> mu
    auto label_of = [&](const EalaAlgebra::EAtom& a) {
      if (a.part == 0) return std::make_tuple(0, a.lie.root, a.lie.deg);
      return std::make_tuple(a.part, IVec{}, a.mu);
    };
    auto opposite = [&](const std::tuple<int, IVec, IVec>& l) {
      auto [p, r, d] = l;
      if (p == 0) return std::make_tuple(0, ivec_neg(r), ivec_neg(d));
      return std::make_tuple(p == 1 ? 2 : 1, IVec{}, ivec_neg(d));
    };
    std::map<std::tuple<int, IVec, IVec>, std::vector<size_t>> groups;
    for (size_t i = 0; i < atoms.size(); ++i) groups[label_of(atoms[i])].push_back(i);
    bool ok = true;
    std::string wit;
    for (const auto& [lab, idxs] : groups) {
      auto op = groups.find(opposite(lab));
      size_t cols = op == groups.end() ? 0 : op->second.size();
      ScalarMatrix gram(static_cast<int>(idxs.size()), static_cast<int>(cols));
      for (size_t i = 0; i < idxs.size(); ++i)
        for (size_t j = 0; j < cols; ++j)
          gram.at(static_cast<int>(i), static_cast<int>(j)) =
              e.form(atoms[idxs[i]].elem, atoms[op->second[j]].elem);
      int dim = static_cast<int>(idxs.size());
      if (std::get<0>(lab) == 0) {
        // operator atoms may be linearly dependent: use evaluation rank
        std::vector<LieElement> rows;
        for (size_t i : idxs) rows.push_back(atoms[i].elem.x);
        dim = L.coordinatize(rows, eqr).rank();
      }
      if (gram.rank() < dim) {
        ok = false;
        wit = "degenerate pairing on the component of " + atoms[idxs[0]].desc;
        break;
      }
    }
    rep.add("A1.nondegenerate", ok, wit);
  }

  // --- A2: window atoms are simultaneous ad(H)-eigenvectors ---------------
  {
    bool ok = true;
    std::string wit;
    for (const auto& a : atoms) {
      bool zero_tuple = true;
      for (const auto& h : H) {
        EalaElement br = e.bracket(h, a.elem);
        // br must be proportional to a
        // compute candidate eigenvalue from the leading part
        Scalar ev = Scalar::zero();
        bool found = false;
        if (a.part == 0 && !br.x.empty()) {
          auto it = br.x.find(a.elem.x.begin()->first);
          if (it != br.x.end()) {
            ev = it->second;
            found = true;
          }
        } else if (a.part == 2 && !br.d.is_zero()) {
          auto it = br.d.terms().find(a.mu);
          if (it != br.d.terms().end()) {
            // ratio against the first nonzero coordinate of a's theta
            const GroupHom& base = a.elem.d.terms().begin()->second;
            for (size_t i = 0; i < base.values().size(); ++i)
              if (!base.values()[i].is_zero()) {
                ev = it->second.values()[i] * base.values()[i].inverse();
                found = true;
                break;
              }
          }
        } else if (a.part == 1 && !br.c.formally_zero()) {
          auto it = br.c.terms().find(a.mu);
          if (it != br.c.terms().end()) {
            const auto& base = a.elem.c.terms().begin()->second;
            for (size_t i = 0; i < base.size(); ++i)
              if (!base[i].is_zero()) {
                ev = it->second[i] * base[i].inverse();
                found = true;
                break;
              }
          }
        }
        EalaElement expect;
        expect.x = le_scaled(a.elem.x, ev);
        expect.c = a.elem.c.scaled(ev);
        expect.d = a.elem.d.scaled(ev);
        EalaElement diff;
        diff.x = le_add(br.x, le_scaled(expect.x, -Scalar::one()));
        diff.c = br.c + (-expect.c);
        diff.d = br.d + (-expect.d);
        if (!e.element_is_zero(diff, w, eqr)) {
          ok = false;
          wit = "not an ad(H)-eigenvector: " + a.desc;
          break;
        }
        if (found && !ev.is_zero()) zero_tuple = false;
      }
      if (!ok) break;
      // E_0 = H: atoms with an all-zero eigentuple must be Cartan atoms
      bool is_cartan = (a.part != 0 && ivec_is_zero(a.mu)) ||
                       (a.part == 0 && ivec_is_zero(a.lie.root) && ivec_is_zero(a.lie.deg));
      if (zero_tuple && !is_cartan) {
        ok = false;
        wit = "zero eigentuple outside H at " + a.desc + " (ev injectivity fails)";
        break;
      }
    }
    rep.add("A2.root_decomposition", ok, wit);
  }

  // --- A3: local nilpotency of non-isotropic root vectors ------------------
  {
    // bound: 1 + longest alpha-string in Delta
    int longest = 0;
    for (const auto& alpha : L.delta().nonzero_roots())
      for (const auto& beta : L.delta().nonzero_roots()) {
        int len = 1;
        IVec cur = ivec_add(beta, alpha);
        while (L.delta().is_root(cur)) {
          ++len;
          cur = ivec_add(cur, alpha);
        }
        longest = std::max(longest, len);
      }
    int bound = 2 + longest;
    bool ok = true;
    std::string wit;
    std::mt19937_64 rng(cfg.seed + 1);
    std::uniform_int_distribution<size_t> d(0, atoms.size() - 1);
    int tested = 0;
    for (const auto& a : atoms) {
      if (a.part != 0 || ivec_is_zero(a.lie.root)) continue;
      if (++tested > 40) break;  // sampled subset of root vectors
      for (int s = 0; s < 10; ++s) {
        EalaElement cur = atoms[d(rng)].elem;
        for (int k = 0; k < bound; ++k) cur = e.bracket(a.elem, cur);
        if (!e.element_is_zero(cur, w, eqr)) {
          ok = false;
          wit = "ad(" + a.desc + ")^" + std::to_string(bound) + " does not vanish";
          break;
        }
      }
      if (!ok) break;
    }
    rep.add("A3.locally_nilpotent", ok, wit);
  }

  // --- A5: the root Z-span has rank l + n ----------------------------------
  {
    std::vector<IVec> roots;
    for (const auto& a : atoms) {
      IVec v;
      if (a.part == 0) {
        v = a.lie.root;
        for (auto x : a.lie.deg) v.push_back(x);
      } else {
        v = ivec_zero(L.delta().dim());
        for (auto x : a.mu) v.push_back(x);
      }
      roots.push_back(std::move(v));
    }
    int rank = lattice_rank(roots, L.delta().dim() + L.rank());
    bool ok = rank == L.delta().rank() + L.rank();
    rep.add("A5.finite_rank", ok,
            "observed root span has rank " + std::to_string(rank) + ", expected " +
                std::to_string(L.delta().rank() + L.rank()));
  }

  // --- A6: indecomposability of the non-isotropic roots --------------------
  {
    std::vector<IVec> ni;
    for (const auto& a : atoms)
      if (a.part == 0 && !ivec_is_zero(a.lie.root)) {
        IVec v = a.lie.root;
        for (auto x : a.lie.deg) v.push_back(x);
        ni.push_back(std::move(v));
      }
    std::sort(ni.begin(), ni.end());
    ni.erase(std::unique(ni.begin(), ni.end()), ni.end());
    // connectivity under nonzero pairing of the finite parts
    size_t n = ni.size();
    std::vector<bool> seen(n, false);
    std::vector<size_t> stack;
    if (n) {
      stack.push_back(0);
      seen[0] = true;
    }
    int dimq = L.delta().dim();
    while (!stack.empty()) {
      size_t i = stack.back();
      stack.pop_back();
      for (size_t j = 0; j < n; ++j) {
        if (seen[j]) continue;
        std::int64_t dot = 0;
        for (int k = 0; k < dimq; ++k)
          dot += ni[i][static_cast<size_t>(k)] * ni[j][static_cast<size_t>(k)];
        if (dot != 0) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
    bool ok = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    rep.add("A6.indecomposable", ok, "the non-isotropic window root graph is disconnected");
  }
  return rep;
}

std::map<IVec, Scalar> centroid_normalization(const LieTorus& t, const LieInvolution& tau,
                                              const DegreeWindow& w) {
  // tau-bar(chi^mu) = eta_mu chi^{-mu}; the normalized basis rescales chi^mu
  // by eta_mu^{-1/2}
  std::map<IVec, Scalar> out;
  for (const auto& mu : w.enumerate(t.rank())) {
    if (!t.centroid_supported(mu)) continue;
    // find a witness atom with a nonzero centroid image
    Scalar eta;
    bool found = false;
    for (const auto& a : t.atoms_in_window(DegreeWindow(1))) {
      // tau(chi^mu(tau(a))) vs chi^{-mu}(a)
      LieElement lhs = tau.apply(t.centroid(mu, tau.apply_atom(a)));
      LieElement rhs = t.centroid(ivec_neg(mu), LieElement{{a, Scalar::one()}});
      if (rhs.empty() || lhs.empty()) continue;
      auto it = lhs.find(rhs.begin()->first);
      if (it == lhs.end()) continue;
      eta = it->second * rhs.begin()->second.inverse();
      found = true;
      break;
    }
    require(found, "InternalError", "no witness for the centroid normalization");
    out.emplace(mu, eta.sqrt_root_of_unity().inverse());
  }
  return out;
}

LiftedInvolution lift_involution(const EalaAlgebra& e, const LieInvolution& tau,
                                 const DegreeWindow& w) {
  // centroid tau-normalization pass: identity for all shipped constructions
  auto norm = centroid_normalization(e.torus(), tau, w);
  for (const auto& [mu, c] : norm)
    require(c.is_one(), "InternalError",
            "centroid basis requires a non-trivial tau-normalization at " + ivec_str(mu));
  LiftedInvolution lift;
  lift.tau = tau;
  lift.e_tau = std::make_shared<EalaAlgebra>(&e.torus(), e.D().tau_image(),
                                             e.kappa().tau_image(), false);
  return lift;
}

EalaElement LiftedInvolution::apply(const EalaElement& u) const {
  EalaElement out;
  out.x = tau.apply(u.x);
  out.c = dual_tau(u.c);
  out.d = scder_tau(u.d);
  return out;
}

Report verify_eala_involution(const EalaAlgebra& e, const LiftedInvolution& lift,
                              const CheckerConfig& cfg) {
  Report rep;
  rep.window = cfg.window;
  DegreeWindow w(cfg.window);
  auto atoms = e.window_atoms(w);
  rep.atoms_checked = static_cast<long>(atoms.size());
  const EalaAlgebra& etau = *lift.e_tau;
  const int eqr = cfg.eq_radius;

  {
    bool ok = true;
    std::string wit;
    for (const auto& a : atoms) {
      EalaElement twice = lift.apply(lift.apply(a.elem));
      EalaElement diff;
      diff.x = le_add(twice.x, le_scaled(a.elem.x, -Scalar::one()));
      diff.c = twice.c + (-a.elem.c);
      diff.d = twice.d + (-a.elem.d);
      if (!e.element_is_zero(diff, w, eqr)) {
        ok = false;
        wit = "tau-bar^2 != id at " + a.desc;
        break;
      }
    }
    rep.add("eala_involution.order2", ok, wit);
  }
  {
    // Lie algebra map E -> E^tau (Theorem-style: holds even without
    // D-invariance): tau[u,v]_E = [tau u, tau v]_{E^tau}
    bool ok = true;
    std::string wit;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<size_t> d(0, atoms.size() - 1);
    long n2 = static_cast<long>(atoms.size()) * static_cast<long>(atoms.size());
    std::vector<std::pair<size_t, size_t>> plan;
    if (n2 <= 2 * cfg.full_triple_budget) {
      for (size_t i = 0; i < atoms.size(); ++i)
        for (size_t j = 0; j < atoms.size(); ++j) plan.emplace_back(i, j);
    } else {
      for (int s = 0; s < 10 * cfg.samples; ++s) plan.emplace_back(d(rng), d(rng));
    }
    for (const auto& [i, j] : plan) {
      EalaElement lhs = lift.apply(e.bracket(atoms[i].elem, atoms[j].elem));
      EalaElement rhs = etau.bracket(lift.apply(atoms[i].elem), lift.apply(atoms[j].elem));
      EalaElement diff;
      diff.x = le_add(lhs.x, le_scaled(rhs.x, -Scalar::one()));
      diff.c = lhs.c + (-rhs.c);
      diff.d = lhs.d + (-rhs.d);
      // zero-test duals against the union of both window bases
      bool zero = e.torus().element_is_zero(diff.x, eqr) && diff.d.is_zero();
      if (zero && !diff.c.formally_zero()) {
        for (const auto& b : e.D().window_basis(w))
          if (!dual_pair(diff.c, b).is_zero()) zero = false;
        for (const auto& b : etau.D().window_basis(w))
          if (!dual_pair(diff.c, b).is_zero()) zero = false;
      }
      if (!zero) {
        ok = false;
        wit = "tau-bar is not a homomorphism at (" + atoms[i].desc + ", " + atoms[j].desc + ")";
        break;
      }
    }
    rep.add("eala_involution.homomorphism", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (const auto& h : e.cartan_basis()) {
      EalaElement img = lift.apply(h);
      EalaElement diff;
      diff.x = le_add(img.x, h.x);
      diff.c = img.c + h.c;
      diff.d = img.d + h.d;
      if (!e.element_is_zero(diff, w, eqr)) {
        ok = false;
        wit = "tau-bar != -id on the Cartan H";
        break;
      }
    }
    rep.add("eala_involution.cartan_negation", ok, wit);
  }
  return rep;
}

}  // namespace lt
