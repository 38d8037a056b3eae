#include <algorithm>

#include "lietorus/constructions_titsb.hpp"

namespace lt {

namespace {

using Poly = std::vector<Scalar>;  // low-to-high

Scalar poly_eval(const Poly& p, const Scalar& x) {
  Scalar r = Scalar::zero();
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

Poly poly_deflate(const Poly& p, const Scalar& root) {
  // synthetic division by (x - root); remainder must vanish
  Poly q(p.size() - 1);
  Scalar carry = Scalar::zero();
  for (size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * root;
    q[i - 1] = carry;
  }
  return q;
}

/// Minimal polynomial of an exact matrix, low-to-high, monic.
Poly minimal_polynomial(const ScalarMatrix& a) {
  int d = a.rows();
  std::vector<ScalarMatrix> powers;
  ScalarMatrix id(d, d);
  for (int i = 0; i < d; ++i) id.at(i, i) = Scalar::one();
  powers.push_back(id);
  for (int k = 1; k <= d; ++k) powers.push_back(powers.back() * a);
  for (int deg = 1; deg <= d; ++deg) {
    // solve sum_{k<deg} c_k A^k = -A^deg
    ScalarMatrix m(d * d, deg);
    std::vector<Scalar> rhs(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        for (int k = 0; k < deg; ++k)
          m.at(i * d + j, k) = powers[static_cast<size_t>(k)].at(i, j);
        rhs[static_cast<size_t>(i) * d + j] = -powers[static_cast<size_t>(deg)].at(i, j);
      }
    std::vector<Scalar> c;
    if (m.solve_consistent(rhs, c)) {
      Poly p(static_cast<size_t>(deg) + 1);
      for (int k = 0; k < deg; ++k) p[static_cast<size_t>(k)] = c[static_cast<size_t>(k)];
      p[static_cast<size_t>(deg)] = Scalar::one();
      return p;
    }
  }
  fail("InternalError", "no minimal polynomial found");
}

/// Exact root list of a minimal polynomial over a candidate budget of small
/// rationals times roots of unity. NotDiagonalizable when roots cannot all be
/// resolved (with multiplicity 1 each, as required for diagonalizability).
std::vector<Scalar> resolve_spectrum(Poly p, long conductor_hint) {
  std::vector<Scalar> roots;
  std::vector<Scalar> cands;
  cands.push_back(Scalar::zero());
  std::vector<Rational> rats;
  for (long num = 1; num <= 6; ++num)
    for (long den = 1; den <= 4; ++den) {
      Rational r(num, den);
      r.canonicalize();
      rats.push_back(r);
    }
  std::sort(rats.begin(), rats.end());
  rats.erase(std::unique(rats.begin(), rats.end()), rats.end());
  long n = lcm_long(lcm_long(conductor_hint, 12), 8);
  for (const auto& r : rats)
    for (long k = 0; k < n; ++k) {
      Scalar u = Scalar::root_of_unity(k, n).scaled(r);
      cands.push_back(u);
      cands.push_back(-u);
    }
  while (p.size() > 1) {
    bool found = false;
    for (const auto& c : cands)
      if (poly_eval(p, c).is_zero()) {
        roots.push_back(c);
        p = poly_deflate(p, c);
        found = true;
        break;
      }
    if (!found)
      fail("NotDiagonalizable", "could not resolve the ad-spectrum exactly");
  }
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      require(!(roots[i] == roots[j]), "NotDiagonalizable",
              "minimal polynomial has a repeated root; ad(h') is not semisimple");
  return roots;
}

}  // namespace

MultiLoopTorus::MultiLoopTorus(MatrixLie g, std::vector<ScalarMatrix> sigmas,
                               std::vector<long> periods, std::vector<LieCoeffs> hprime)
    : g_(std::move(g)),
      sigmas_(std::move(sigmas)),
      periods_(std::move(periods)),
      nu_(static_cast<int>(periods_.size())),
      rs_(RootSystem::custom({}, {}, "multiloop")) {
  require(sigmas_.size() == periods_.size(), "NonCommutingAutomorphisms",
          "one period per automorphism");
  int d = g_.dim();
  // exact validation: automorphism property, finite order, commutation
  for (size_t s = 0; s < sigmas_.size(); ++s) {
    const ScalarMatrix& m = sigmas_[s];
    require(m.rows() == d && m.cols() == d, "NonCommutingAutomorphisms",
            "automorphism matrix has the wrong shape");
    ScalarMatrix p = m;
    for (long k = 1; k < periods_[s]; ++k) p = p * m;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        require(p.at(i, j) == (i == j ? Scalar::one() : Scalar::zero()), "NonCommutingAutomorphisms",
                "sigma does not have the declared finite order");
    auto apply = [&](const LieCoeffs& x) {
      LieCoeffs r;
      for (const auto& [k, c] : x)
        for (int i = 0; i < d; ++i)
          if (!m.at(i, k).is_zero()) r = lc_add(r, LieCoeffs{{i, m.at(i, k) * c}});
      return r;
    };
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        LieCoeffs lhs = apply(g_.bracket_atoms(i, j));
        LieCoeffs rhs = g_.bracket(apply(LieCoeffs{{i, Scalar::one()}}),
                                   apply(LieCoeffs{{j, Scalar::one()}}));
        require(lc_add(lhs, lc_scaled(rhs, -Scalar::one())).empty(), "NonCommutingAutomorphisms",
                "sigma is not a Lie algebra automorphism");
      }
  }
  for (size_t s = 0; s + 1 < sigmas_.size(); ++s)
    for (size_t t = s + 1; t < sigmas_.size(); ++t) {
      ScalarMatrix st = sigmas_[s] * sigmas_[t];
      ScalarMatrix ts = sigmas_[t] * sigmas_[s];
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          require(st.at(i, j) == ts.at(i, j), "NonCommutingAutomorphisms",
                  "automorphisms do not commute");
    }
  hprime_ = hprime;
  decompose_eigenspaces(hprime);
}

void MultiLoopTorus::decompose_eigenspaces(const std::vector<LieCoeffs>& hprime) {
  int d = g_.dim();
  // joint eigenspaces over the residue group
  std::vector<IVec> residues;
  {
    IVec cur(static_cast<size_t>(nu_), 0);
    while (true) {
      residues.push_back(cur);
      int i = nu_ - 1;
      while (i >= 0 && cur[static_cast<size_t>(i)] == periods_[static_cast<size_t>(i)] - 1) {
        cur[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++cur[static_cast<size_t>(i)];
    }
  }
  // h' must be fixed by every sigma and pairwise ad-commuting
  for (const auto& h : hprime) {
    for (size_t s = 0; s < sigmas_.size(); ++s) {
      std::vector<Scalar> v(static_cast<size_t>(d));
      for (const auto& [k, c] : h) v[static_cast<size_t>(k)] = c;
      for (int i = 0; i < d; ++i) {
        Scalar img = Scalar::zero();
        for (int j = 0; j < d; ++j) img += sigmas_[s].at(i, j) * v[static_cast<size_t>(j)];
        require(img == v[static_cast<size_t>(i)], "NotDiagonalizable",
                "h' is not fixed by the automorphisms");
      }
    }
  }
  for (size_t a = 0; a < hprime.size(); ++a)
    for (size_t b = a + 1; b < hprime.size(); ++b)
      require(g_.bracket(hprime[a], hprime[b]).empty(), "NotDiagonalizable",
              "h' is not abelian");

  // candidate conductor for eigenvalues
  long cond = 1;
  for (const auto& h : hprime)
    for (const auto& [k, c] : h) cond = lcm_long(cond, c.conductor());
  std::vector<ScalarMatrix> ads;
  for (const auto& h : hprime) ads.push_back(g_.ad(h));

  for (const auto& res : residues) {
    // solve the stacked system (sigma_j - omega_j^{res_j}) x = 0
    ScalarMatrix stack(d * nu_, d);
    for (int s = 0; s < nu_; ++s) {
      Scalar om = Scalar::root_of_unity(res[static_cast<size_t>(s)], periods_[static_cast<size_t>(s)]);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          stack.at(s * d + i, j) =
              sigmas_[static_cast<size_t>(s)].at(i, j) - (i == j ? om : Scalar::zero());
    }
    auto kernel = stack.kernel_basis();
    if (kernel.empty()) continue;
    // split the eigenspace by each ad(h) in turn
    std::vector<std::pair<std::vector<Scalar>, std::vector<std::vector<Scalar>>>> parts;
    parts.push_back({{}, kernel});
    for (size_t hidx = 0; hidx < ads.size(); ++hidx) {
      std::vector<std::pair<std::vector<Scalar>, std::vector<std::vector<Scalar>>>> next;
      for (auto& [tuple, basis] : parts) {
        // restriction matrix of ad(h) on span(basis)
        int k = static_cast<int>(basis.size());
        ScalarMatrix coords(d, k);
        for (int c = 0; c < k; ++c)
          for (int r = 0; r < d; ++r) coords.at(r, c) = basis[static_cast<size_t>(c)][static_cast<size_t>(r)];
        ScalarMatrix restr(k, k);
        for (int c = 0; c < k; ++c) {
          std::vector<Scalar> img(static_cast<size_t>(d));
          for (int r = 0; r < d; ++r) {
            Scalar s = Scalar::zero();
            for (int j = 0; j < d; ++j)
              s += ads[hidx].at(r, j) * basis[static_cast<size_t>(c)][static_cast<size_t>(j)];
            img[static_cast<size_t>(r)] = s;
          }
          std::vector<Scalar> sol = coords.solve(img);  // must lie in the span
          for (int r = 0; r < k; ++r) restr.at(r, c) = sol[static_cast<size_t>(r)];
        }
        Poly mp = minimal_polynomial(restr);
        std::vector<Scalar> eigs = resolve_spectrum(mp, cond);
        for (const auto& ev : eigs) {
          ScalarMatrix shifted = restr;
          for (int i = 0; i < k; ++i) shifted.at(i, i) -= ev;
          auto sub = shifted.kernel_basis();
          if (sub.empty()) continue;
          std::vector<std::vector<Scalar>> lifted;
          for (const auto& v : sub) {
            std::vector<Scalar> w(static_cast<size_t>(d), Scalar::zero());
            for (int c = 0; c < k; ++c)
              for (int r = 0; r < d; ++r)
                w[static_cast<size_t>(r)] += basis[static_cast<size_t>(c)][static_cast<size_t>(r)] *
                                             v[static_cast<size_t>(c)];
            lifted.push_back(std::move(w));
          }
          auto t2 = tuple;
          t2.push_back(ev);
          next.push_back({std::move(t2), std::move(lifted)});
        }
      }
      parts = std::move(next);
    }
    for (auto& [tuple, basis] : parts) {
      std::vector<LieCoeffs> comp;
      for (const auto& v : basis) {
        LieCoeffs x;
        for (int r = 0; r < d; ++r)
          if (!v[static_cast<size_t>(r)].is_zero()) x.emplace(r, v[static_cast<size_t>(r)]);
        comp.push_back(std::move(x));
      }
      comps_raw_.push_back({res, tuple, std::move(comp)});
    }
  }

  // integral labels for the weight tuples: coordinates in a Z-basis of the
  // group they generate
  std::vector<std::vector<Scalar>> distinct;
  for (const auto& [res, tup, comp] : comps_raw_) {
    if (std::find(distinct.begin(), distinct.end(), tup) == distinct.end()) distinct.push_back(tup);
  }
  long cond2 = 1;
  for (const auto& t : distinct)
    for (const auto& s : t) cond2 = lcm_long(cond2, s.conductor());
  size_t phi = static_cast<size_t>(euler_phi(cond2));
  size_t width = distinct.empty() ? 0 : distinct[0].size() * phi;
  std::vector<std::vector<Rational>> qvecs;
  for (const auto& t : distinct) {
    std::vector<Rational> v(width, Rational(0));
    for (size_t i = 0; i < t.size(); ++i) {
      Scalar s = t[i].promoted(cond2);
      for (size_t j = 0; j < phi; ++j) v[i * phi + j] = s.coeffs()[j];
    }
    qvecs.push_back(std::move(v));
  }
  mpz_class den(1);
  for (const auto& v : qvecs)
    for (const auto& x : v) den = den * x.get_den() / gcd(den, mpz_class(x.get_den()));
  std::vector<IVec> ivecs;
  for (const auto& v : qvecs) {
    IVec iv(width);
    for (size_t i = 0; i < width; ++i) {
      mpz_class z = v[i].get_num() * (den / v[i].get_den());
      require(z.fits_slong_p(), "Overflow", "weight coordinates too large");
      iv[i] = z.get_si();
    }
    ivecs.push_back(std::move(iv));
  }
  // Z-basis of the span via iterated reduction
  std::vector<IVec> zbasis;
  for (const auto& v : ivecs) {
    if (in_lattice_span(zbasis, v)) continue;
    zbasis.push_back(v);
  }
  // saturate: repeatedly replace the basis by echelon form through membership
  // (sufficient here: labels only need to be additive and injective)
  auto label_of = [&](const IVec& v) {
    // solve v = sum c_i zbasis_i over Q, then verify integrality
    int r = static_cast<int>(zbasis.size());
    ScalarMatrix m(static_cast<int>(width), r);
    for (int c = 0; c < r; ++c)
      for (size_t i = 0; i < width; ++i)
        m.at(static_cast<int>(i), c) =
            Scalar::integer(zbasis[static_cast<size_t>(c)][i]);
    std::vector<Scalar> rhs(width);
    for (size_t i = 0; i < width; ++i) rhs[i] = Scalar::integer(v[i]);
    std::vector<Scalar> sol = m.solve(rhs);
    IVec lab(static_cast<size_t>(r), 0);
    for (int c = 0; c < r; ++c) {
      Rational q = sol[static_cast<size_t>(c)].rational_value();
      require(q.get_den() == 1, "InternalError", "non-integral weight label");
      lab[static_cast<size_t>(c)] = q.get_num().get_si();
    }
    return lab;
  };
  std::map<std::vector<Scalar>, IVec> label_map;
  for (size_t i = 0; i < distinct.size(); ++i) label_map[distinct[i]] = label_of(ivecs[i]);

  std::vector<IVec> nonzero_labels;
  for (auto& [res, tup, comp] : comps_raw_) {
    IVec lab = label_map[tup];
    weights_.push_back(tup);
    weight_labels_.push_back(lab);
    comps_[{res, lab}] = comp;
    if (!ivec_is_zero(lab)) nonzero_labels.push_back(lab);
  }
  std::sort(nonzero_labels.begin(), nonzero_labels.end());
  nonzero_labels.erase(std::unique(nonzero_labels.begin(), nonzero_labels.end()),
                       nonzero_labels.end());
  // Cartan integers by alpha-strings through the weight set
  std::map<std::pair<IVec, IVec>, int> cartan;
  auto is_label = [&](const IVec& v) {
    return ivec_is_zero(v) ||
           std::binary_search(nonzero_labels.begin(), nonzero_labels.end(), v);
  };
  for (const auto& alpha : nonzero_labels)
    for (const auto& beta : nonzero_labels) {
      // proportional case first: beta = c alpha => <beta, alpha^v> = 2c
      bool prop = true;
      long num = 0, den = 0;
      for (size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] != 0) {
          num = beta[i];
          den = alpha[i];
          break;
        }
      for (size_t i = 0; i < alpha.size(); ++i)
        if (beta[i] * den != alpha[i] * num) prop = false;
      if (prop && den != 0) {
        if ((2 * num) % den == 0) {
          cartan[{beta, alpha}] = static_cast<int>(2 * num / den);
          continue;
        }
      }
      int p = 0, q = 0;
      IVec cur = ivec_sub(beta, alpha);
      while (!ivec_is_zero(cur) && is_label(cur) && p < 8) {
        ++p;
        cur = ivec_sub(cur, alpha);
      }
      cur = ivec_add(beta, alpha);
      while (!ivec_is_zero(cur) && is_label(cur) && q < 8) {
        ++q;
        cur = ivec_add(cur, alpha);
      }
      cartan[{beta, alpha}] = p - q;
    }
  rs_ = RootSystem::custom(nonzero_labels, std::move(cartan), "multiloop");

  // coordinate solvers per component
  for (const auto& [key, comp] : comps_) {
    ScalarMatrix m(g_.dim(), static_cast<int>(comp.size()));
    for (size_t c = 0; c < comp.size(); ++c)
      for (const auto& [r, s] : comp[c]) m.at(r, static_cast<int>(c)) = s;
    comp_coords_.emplace(key, std::move(m));
  }
  build_section();
}

void MultiLoopTorus::build_section() {
  // The Lie-torus grading needs an additive section s of the residue map on
  // the label lattice: L_alpha^d sits at loop degree s(alpha) + m.d. It
  // exists when every label lives in a single residue class and the
  // label -> residue map is a group homomorphism.
  regraded_ = false;
  label_residue_.clear();
  std::map<IVec, IVec> res_of;
  for (const auto& [key, comp] : comps_) {
    const auto& [res, lab] = key;
    auto it = res_of.find(lab);
    if (it != res_of.end() && !(it->second == res)) return;  // multi-residue label
    res_of[lab] = res;
  }
  auto zero_res = res_of.find(ivec_zero(rs_.rank() == 0 ? 0 : static_cast<int>(
                                  res_of.begin()->first.size())));
  if (zero_res != res_of.end() && !ivec_is_zero(zero_res->second)) return;
  int r = res_of.empty() ? 0 : static_cast<int>(res_of.begin()->first.size());
  // homomorphism check and section on the standard label basis: by
  // construction the basis labels e_j come from actual weight tuples
  section_basis_.assign(static_cast<size_t>(r), ivec_zero(nu_));
  std::vector<bool> have(static_cast<size_t>(r), false);
  for (const auto& [lab, res] : res_of) {
    for (int j = 0; j < r; ++j)
      if (lab == ivec_unit(r, j)) {
        section_basis_[static_cast<size_t>(j)] = res;
        have[static_cast<size_t>(j)] = true;
      }
  }
  for (int j = 0; j < r; ++j)
    if (!have[static_cast<size_t>(j)]) return;  // basis label missing
  auto sect = [&](const IVec& lab) {
    IVec s = ivec_zero(nu_);
    for (int j = 0; j < r; ++j)
      s = ivec_add(s, ivec_scaled(section_basis_[static_cast<size_t>(j)],
                                  lab[static_cast<size_t>(j)]));
    return s;
  };
  for (const auto& [lab, res] : res_of) {
    IVec s = sect(lab);
    for (int i = 0; i < nu_; ++i) {
      long m = periods_[static_cast<size_t>(i)];
      if (((s[static_cast<size_t>(i)] - res[static_cast<size_t>(i)]) % m + m) % m != 0) return;
    }
  }
  label_residue_ = std::move(res_of);
  regraded_ = true;
}

IVec MultiLoopTorus::section(const IVec& root) const {
  if (!regraded_) return ivec_zero(nu_);
  IVec s = ivec_zero(nu_);
  for (size_t j = 0; j < section_basis_.size(); ++j)
    s = ivec_add(s, ivec_scaled(section_basis_[j], root[j]));
  return s;
}

IVec MultiLoopTorus::z_degree(const AtomKey& a) const {
  if (!regraded_) return a.deg;
  IVec z = section(a.root);
  for (int i = 0; i < nu_; ++i)
    z[static_cast<size_t>(i)] += a.deg[static_cast<size_t>(i)] * periods_[static_cast<size_t>(i)];
  return z;
}

std::string MultiLoopTorus::name() const {
  return "multiloop(" + g_.label() + ",nu=" + std::to_string(nu_) + ")";
}

IVec MultiLoopTorus::residue_of(const IVec& deg) const {
  IVec r(static_cast<size_t>(nu_));
  for (int i = 0; i < nu_; ++i) {
    long m = periods_[static_cast<size_t>(i)];
    r[static_cast<size_t>(i)] = ((deg[static_cast<size_t>(i)] % m) + m) % m;
  }
  return r;
}

const std::vector<LieCoeffs>& MultiLoopTorus::component(const IVec& residue,
                                                        const IVec& root) const {
  static const std::vector<LieCoeffs> empty;
  auto it = comps_.find({residue, root});
  return it == comps_.end() ? empty : it->second;
}

std::vector<std::pair<IVec, IVec>> MultiLoopTorus::component_labels() const {
  std::vector<std::pair<IVec, IVec>> out;
  for (const auto& [key, comp] : comps_) out.push_back(key);
  return out;
}

std::vector<AtomKey> MultiLoopTorus::atoms_at(const IVec& root, const IVec& deg) const {
  std::vector<AtomKey> out;
  if (static_cast<int>(root.size()) != rs_.dim()) return out;
  IVec res = regraded_ ? residue_of(section(root)) : residue_of(deg);
  const auto& comp = component(res, root);
  for (size_t i = 0; i < comp.size(); ++i)
    out.push_back({root, deg, 0, {static_cast<std::int64_t>(i)}});
  return out;
}

LieCoeffs MultiLoopTorus::project(const LieCoeffs& x, const IVec& residue,
                                  const IVec& root) const {
  if (x.empty()) return {};
  auto it = comp_coords_.find({residue, root});
  require(it != comp_coords_.end(), "InternalError",
          "bracket left the computed eigencomponents");
  std::vector<Scalar> rhs(static_cast<size_t>(g_.dim()));
  for (const auto& [r, s] : x) rhs[static_cast<size_t>(r)] = s;
  std::vector<Scalar> sol = it->second.solve(rhs);
  LieCoeffs out;
  for (size_t i = 0; i < sol.size(); ++i)
    if (!sol[i].is_zero()) out.emplace(static_cast<int>(i), sol[i]);
  return out;
}

LieElement MultiLoopTorus::bracket_atoms(const AtomKey& a, const AtomKey& b) const {
  IVec res_a = regraded_ ? residue_of(section(a.root)) : residue_of(a.deg);
  IVec res_b = regraded_ ? residue_of(section(b.root)) : residue_of(b.deg);
  const auto& ca = component(res_a, a.root);
  const auto& cb = component(res_b, b.root);
  LieCoeffs br = g_.bracket(ca[static_cast<size_t>(a.aux[0])], cb[static_cast<size_t>(b.aux[0])]);
  LieElement out;
  if (br.empty()) return out;
  IVec root = ivec_add(a.root, b.root);
  IVec deg = ivec_add(a.deg, b.deg);
  if (regraded_) {
    // loop degrees add; the section mismatch is an exact multiple of the
    // periods and shifts the torus degree
    IVec mismatch = ivec_sub(ivec_add(section(a.root), section(b.root)), section(root));
    for (int i = 0; i < nu_; ++i) {
      long m = periods_[static_cast<size_t>(i)];
      require(mismatch[static_cast<size_t>(i)] % m == 0, "InternalError", "section not additive");
      deg[static_cast<size_t>(i)] += mismatch[static_cast<size_t>(i)] / m;
    }
  }
  IVec res = regraded_ ? residue_of(section(root)) : residue_of(deg);
  LieCoeffs coords = project(br, res, root);
  for (const auto& [i, c] : coords)
    le_accumulate(out, {root, deg, 0, {i}}, c);
  return out;
}

Scalar MultiLoopTorus::form_atoms(const AtomKey& a, const AtomKey& b) const {
  if (!ivec_is_zero(ivec_add(a.root, b.root))) return Scalar::zero();
  if (!ivec_is_zero(ivec_add(z_degree(a), z_degree(b)))) return Scalar::zero();
  IVec res_a = regraded_ ? residue_of(section(a.root)) : residue_of(a.deg);
  IVec res_b = regraded_ ? residue_of(section(b.root)) : residue_of(b.deg);
  const auto& ca = component(res_a, a.root);
  const auto& cb = component(res_b, b.root);
  Scalar s = Scalar::zero();
  for (const auto& [i, ci] : ca[static_cast<size_t>(a.aux[0])])
    for (const auto& [j, cj] : cb[static_cast<size_t>(b.aux[0])])
      s += g_.form_atoms(i, j) * ci * cj;
  return s;
}

bool MultiLoopTorus::centroid_supported(const IVec& mu) const {
  if (regraded_) return true;  // torus degrees already run over the centroid lattice
  for (int i = 0; i < nu_; ++i)
    if (mu[static_cast<size_t>(i)] % periods_[static_cast<size_t>(i)] != 0) return false;
  return true;
}

LieElement MultiLoopTorus::centroid_apply(const IVec& mu, const AtomKey& a) const {
  require(centroid_supported(mu), "UnsupportedCentroidDegree",
          "degree " + ivec_str(mu) + " is not a centroid degree");
  LieElement r;
  AtomKey k = a;
  k.deg = ivec_add(a.deg, mu);
  le_accumulate(r, k, Scalar::one());
  return r;
}

int MultiLoopTorus::cartan_integer(const IVec& beta, const IVec& alpha) const {
  return rs_.cartan_integer(beta, alpha);
}

std::string MultiLoopTorus::atom_desc(const AtomKey& a) const {
  return "eig[" + ivec_str(a.root) + ";" + std::to_string(a.aux[0]) + "]@z^" +
         ivec_str(z_degree(a));
}

}  // namespace lt
