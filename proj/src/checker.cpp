#include "lietorus/checker.hpp"

#include <random>
#include <sstream>

namespace lt {

namespace {

std::string pair_witness(const LieTorus& t, const AtomKey& a, const AtomKey& b,
                         const std::string& detail) {
  return "atoms (" + t.atom_desc(a) + ", " + t.atom_desc(b) + "): " + detail;
}

/// Result keys must carry the bigrade (a.root + b.root, a.deg + b.deg).
bool bigrade_ok(const LieTorus& t, const AtomKey& a, const AtomKey& b, const LieElement& r) {
  IVec root = ivec_add(a.root, b.root), deg = ivec_add(a.deg, b.deg);
  for (const auto& [k, c] : r)
    if (!(k.root == root) || !(k.deg == deg)) return false;
  return true;
}

std::vector<std::array<size_t, 3>> triple_plan(size_t n, const CheckerConfig& cfg) {
  std::vector<std::array<size_t, 3>> plan;
  long n3 = static_cast<long>(n) * static_cast<long>(n) * static_cast<long>(n);
  if (n3 <= cfg.full_triple_budget) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) plan.push_back({i, j, k});
    return plan;
  }
  // deterministic sampled triples
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<size_t> d(0, n - 1);
  for (int s = 0; s < cfg.samples; ++s) plan.push_back({d(rng), d(rng), d(rng)});
  return plan;
}

}  // namespace

Report check_lie_torus(const LieTorus& t, const CheckerConfig& cfg) {
  Report rep;
  rep.window = cfg.window;
  DegreeWindow w(cfg.window);
  std::vector<AtomKey> atoms = t.atoms_in_window(w);
  rep.atoms_checked = static_cast<long>(atoms.size());
  const IVec zero_root = ivec_zero(t.delta().dim());
  const int eqr = cfg.eq_radius;

  // --- LT1 (bigrade closure, zero outside Delta u {0}) + antisymmetry ------
  {
    bool ok = true, anti_ok = true, alt_ok = true;
    std::string wit, anti_wit, alt_wit;
    for (size_t i = 0; i < atoms.size() && ok && anti_ok && alt_ok; ++i)
      for (size_t j = i; j < atoms.size(); ++j) {
        LieElement rij = t.bracket_atoms(atoms[i], atoms[j]);
        LieElement rji = i == j ? rij : t.bracket_atoms(atoms[j], atoms[i]);
        if (!bigrade_ok(t, atoms[i], atoms[j], rij) || !bigrade_ok(t, atoms[j], atoms[i], rji)) {
          ok = false;
          wit = pair_witness(t, atoms[i], atoms[j], "bracket left the expected component");
          break;
        }
        IVec root = ivec_add(atoms[i].root, atoms[j].root);
        if (!ivec_is_zero(root) && !t.delta().is_root(root) && !t.element_is_zero(rij, eqr)) {
          ok = false;
          wit = pair_witness(t, atoms[i], atoms[j],
                             "nonzero bracket at a non-root " + ivec_str(root));
          break;
        }
        if (i == j) {
          if (!t.element_is_zero(rij, eqr)) {
            alt_ok = false;
            alt_wit = "[a,a] != 0 for " + t.atom_desc(atoms[i]);
            break;
          }
        } else if (!t.element_is_zero(le_add(rij, rji), eqr)) {
          anti_ok = false;
          anti_wit = pair_witness(t, atoms[i], atoms[j], "antisymmetry fails");
          break;
        }
      }
    rep.add("LT1.bigrade", ok, wit);
    rep.add("alternation", alt_ok, alt_wit);
    rep.add("antisymmetry", anti_ok, anti_wit);
  }

  // --- LT2(i): dimension bounds --------------------------------------------
  {
    bool ok = true;
    std::string wit;
    for (const auto& alpha : t.delta().nonzero_roots()) {
      for (const auto& deg : w.enumerate(t.rank())) {
        size_t d = t.atoms_at(alpha, deg).size();
        if (d > 1) {
          ok = false;
          wit = "dim L_" + ivec_str(alpha) + "^" + ivec_str(deg) + " = " + std::to_string(d);
        }
      }
      if (t.delta().is_indivisible(alpha) && t.atoms_at(alpha, ivec_zero(t.rank())).size() != 1) {
        ok = false;
        wit = "dim L_" + ivec_str(alpha) + "^0 != 1";
      }
    }
    rep.add("LT2.dim", ok, wit);
  }

  // --- LT2(ii): sl2 pairs act by Cartan integers ---------------------------
  {
    // test-vector plan: all window atoms while affordable, else the degree-0
    // core plus seeded samples
    std::vector<AtomKey> testv;
    if (atoms.size() <= 150) {
      testv = atoms;
    } else {
      for (const auto& a : atoms)
        if (ivec_is_zero(a.deg)) testv.push_back(a);
      std::mt19937_64 rng(cfg.seed);
      std::uniform_int_distribution<size_t> d(0, atoms.size() - 1);
      for (int s = 0; s < cfg.samples; ++s) testv.push_back(atoms[d(rng)]);
    }
    bool ok = true;
    std::string wit;
    for (const auto& alpha : t.delta().nonzero_roots()) {
      if (!ok) break;
      for (const auto& deg : w.enumerate(t.rank())) {
        auto es = t.atoms_at(alpha, deg);
        if (es.empty()) continue;
        auto fs = t.atoms_at(ivec_neg(alpha), ivec_neg(deg));
        if (fs.size() != 1) {
          ok = false;
          wit = "opposite space of (" + ivec_str(alpha) + "," + ivec_str(deg) +
                ") is not one-dimensional";
          break;
        }
        LieElement e{{es[0], Scalar::one()}};
        LieElement f{{fs[0], Scalar::one()}};
        LieElement h = t.bracket(e, f);
        if (t.element_is_zero(h, eqr)) {
          ok = false;
          wit = "[e, f] = 0 at (" + ivec_str(alpha) + "," + ivec_str(deg) + ")";
          break;
        }
        // normalize the pair on a test vector with nonzero Cartan integer
        Scalar scale;
        bool found = false;
        for (const auto& b : testv) {
          int n = t.cartan_integer(b.root, alpha);
          if (n == 0) continue;
          LieElement hx = t.bracket(h, LieElement{{b, Scalar::one()}});
          // hx must be proportional to b
          auto it = hx.find(b);
          if (it == hx.end()) continue;
          scale = Scalar::integer(n) * it->second.inverse();
          found = true;
          break;
        }
        if (!found) {
          ok = false;
          wit = "no test vector fixes the f-scale at (" + ivec_str(alpha) + "," + ivec_str(deg) +
                ")";
          break;
        }
        LieElement hs = le_scaled(h, scale);
        for (const auto& b : testv) {
          int n = t.cartan_integer(b.root, alpha);
          LieElement lhs = t.bracket(hs, LieElement{{b, Scalar::one()}});
          LieElement rhs = le_scaled(LieElement{{b, Scalar::one()}}, Scalar::integer(n));
          LieElement diff = le_add(lhs, le_scaled(rhs, -Scalar::one()));
          if (!t.element_is_zero(diff, eqr)) {
            ok = false;
            wit = "[[e,f],x] != <beta,alpha^v> x for alpha=" + ivec_str(alpha) +
                  " deg=" + ivec_str(deg) + " test atom " + t.atom_desc(b);
            break;
          }
        }
        if (!ok) break;
      }
    }
    rep.add("LT2.sl2", ok, wit);
  }

  // --- LT3: L_0^deg is spanned by brackets of opposite root spaces ---------
  {
    bool ok = true;
    std::string wit;
    for (const auto& deg : w.enumerate(t.rank())) {
      std::vector<LieElement> rhs;
      for (const auto& alpha : t.delta().nonzero_roots())
        for (const auto& mu : w.enumerate(t.rank())) {
          auto as = t.atoms_at(alpha, mu);
          auto bs = t.atoms_at(ivec_neg(alpha), ivec_sub(deg, mu));
          for (const auto& a : as)
            for (const auto& b : bs) {
              LieElement r = t.bracket_atoms(a, b);
              if (!le_formally_zero(r)) rhs.push_back(std::move(r));
            }
        }
      std::sort(rhs.begin(), rhs.end());
      rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());
      std::vector<LieElement> all = rhs;
      size_t nrhs = rhs.size();
      for (const auto& a : t.atoms_at(zero_root, deg))
        all.push_back(LieElement{{a, Scalar::one()}});
      ScalarMatrix m = t.coordinatize(all, eqr);
      // incremental row elimination: rhs rows build the span, atom rows must
      // reduce to zero against it
      std::vector<std::vector<Scalar>> basis;  // echelon rows with pivot info
      std::vector<int> pivots;
      auto reduce_row = [&](std::vector<Scalar> row, bool extend) {
        for (size_t r = 0; r < basis.size(); ++r) {
          int p = pivots[r];
          if (row[static_cast<size_t>(p)].is_zero()) continue;
          Scalar f = row[static_cast<size_t>(p)];
          for (int c = 0; c < m.cols(); ++c)
            row[static_cast<size_t>(c)] -= f * basis[r][static_cast<size_t>(c)];
        }
        int p = -1;
        for (int c = 0; c < m.cols(); ++c)
          if (!row[static_cast<size_t>(c)].is_zero()) {
            p = c;
            break;
          }
        if (p < 0) return true;  // reduced to zero
        if (extend) {
          Scalar inv = row[static_cast<size_t>(p)].inverse();
          for (int c = 0; c < m.cols(); ++c) row[static_cast<size_t>(c)] *= inv;
          basis.push_back(std::move(row));
          pivots.push_back(p);
        }
        return false;
      };
      auto row_of = [&](size_t i) {
        std::vector<Scalar> row(static_cast<size_t>(m.cols()));
        for (int c = 0; c < m.cols(); ++c) row[static_cast<size_t>(c)] = m.at(static_cast<int>(i), c);
        return row;
      };
      for (size_t i = 0; i < nrhs; ++i) reduce_row(row_of(i), true);
      for (size_t i = nrhs; i < all.size() && ok; ++i) {
        if (!reduce_row(row_of(i), false)) {
          ok = false;
          wit = "L_0^" + ivec_str(deg) + " not spanned by [L_a^mu, L_{-a}^{deg-mu}]";
        }
      }
      if (!ok) break;
    }
    rep.add("LT3.span", ok, wit);
  }

  // --- LT4: the observed support generates Lambda --------------------------
  {
    std::vector<IVec> supp;
    for (const auto& a : atoms) supp.push_back(a.deg);
    bool ok = generates_full_lattice(supp, t.rank());
    rep.add("LT4.support", ok, "window support does not generate the full lattice");
  }

  // --- Jacobi on planned triples --------------------------------------------
  {
    bool ok = true;
    std::string wit;
    for (const auto& [i, j, k] : triple_plan(atoms.size(), cfg)) {
      const AtomKey &a = atoms[i], &b = atoms[j], &c = atoms[k];
      LieElement s = t.bracket(t.bracket_atoms(a, b), LieElement{{c, Scalar::one()}});
      s = le_add(s, t.bracket(t.bracket_atoms(b, c), LieElement{{a, Scalar::one()}}));
      s = le_add(s, t.bracket(t.bracket_atoms(c, a), LieElement{{b, Scalar::one()}}));
      if (!t.element_is_zero(s, eqr)) {
        ok = false;
        wit = "Jacobi fails on (" + t.atom_desc(a) + ", " + t.atom_desc(b) + ", " + t.atom_desc(c) +
              ")";
        break;
      }
    }
    rep.add("jacobi", ok, wit);
  }
  return rep;
}

Report check_graded_form(const LieTorus& t, const CheckerConfig& cfg) {
  Report rep;
  rep.window = cfg.window;
  DegreeWindow w(cfg.window);
  std::vector<AtomKey> atoms = t.atoms_in_window(w);
  rep.atoms_checked = static_cast<long>(atoms.size());

  {
    bool ok = true;
    std::string wit;
    for (const auto& a : atoms)
      for (const auto& b : atoms) {
        if (!(t.form_atoms(a, b) == t.form_atoms(b, a))) {
          ok = false;
          wit = pair_witness(t, a, b, "form is not symmetric");
        }
        bool opposite = ivec_is_zero(ivec_add(a.root, b.root)) &&
                        ivec_is_zero(ivec_add(a.deg, b.deg));
        if (!opposite && !t.form_atoms(a, b).is_zero()) {
          ok = false;
          wit = pair_witness(t, a, b, "form pairs non-opposite bigrades");
        }
      }
    rep.add("form.graded_symmetric", ok, wit);
  }

  {
    // invariance ([x,y],z) = (x,[y,z]) on seeded triples
    bool ok = true;
    std::string wit;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<size_t> d(0, atoms.size() - 1);
    for (int s = 0; s < cfg.samples; ++s) {
      const AtomKey &a = atoms[d(rng)], &b = atoms[d(rng)], &c = atoms[d(rng)];
      LieElement x{{a, Scalar::one()}}, y{{b, Scalar::one()}}, z{{c, Scalar::one()}};
      Scalar lhs = t.form(t.bracket(x, y), z);
      Scalar rhs = t.form(x, t.bracket(y, z));
      if (!(lhs == rhs)) {
        ok = false;
        wit = "([x,y],z) != (x,[y,z]) on (" + t.atom_desc(a) + ", " + t.atom_desc(b) + ", " +
              t.atom_desc(c) + "): " + lhs.str() + " vs " + rhs.str();
        break;
      }
    }
    rep.add("form.invariant", ok, wit);
  }

  {
    // nondegeneracy of L_alpha^deg x L_{-alpha}^{-deg}: the Gram pairing has
    // rank equal to the component dimension (evaluation rank for op-atoms)
    bool ok = true;
    std::string wit;
    std::vector<IVec> roots = t.delta().nonzero_roots();
    roots.push_back(ivec_zero(t.delta().dim()));
    for (const auto& alpha : roots) {
      for (const auto& deg : w.enumerate(t.rank())) {
        auto as = t.atoms_at(alpha, deg);
        auto bs = t.atoms_at(ivec_neg(alpha), ivec_neg(deg));
        if (as.empty()) continue;
        std::vector<LieElement> rows;
        for (const auto& a : as) rows.push_back(LieElement{{a, Scalar::one()}});
        int dim = t.coordinatize(rows, cfg.eq_radius).rank();
        if (dim == 0) continue;
        ScalarMatrix gram(static_cast<int>(as.size()), static_cast<int>(bs.size()));
        for (size_t i = 0; i < as.size(); ++i)
          for (size_t j = 0; j < bs.size(); ++j)
            gram.at(static_cast<int>(i), static_cast<int>(j)) = t.form_atoms(as[i], bs[j]);
        if (gram.rank() < dim) {
          ok = false;
          wit = "degenerate pairing at (" + ivec_str(alpha) + "," + ivec_str(deg) + "): rank " +
                std::to_string(gram.rank()) + " < dim " + std::to_string(dim);
          break;
        }
      }
      if (!ok) break;
    }
    rep.add("form.nondegenerate", ok, wit);
  }
  return rep;
}

Report check_centroid(const LieTorus& t, const CheckerConfig& cfg) {
  Report rep;
  rep.window = cfg.window;
  DegreeWindow w(cfg.window);
  std::vector<AtomKey> atoms = t.atoms_in_window(w);
  rep.atoms_checked = static_cast<long>(atoms.size());
  std::vector<IVec> gamma;
  for (const auto& mu : w.enumerate(t.rank()))
    if (t.centroid_supported(mu)) gamma.push_back(mu);

  {
    bool ok = true;
    for (const auto& mu : gamma) {
      if (!t.centroid_supported(ivec_neg(mu))) ok = false;
      for (const auto& nu : gamma)
        if (w.contains(ivec_add(mu, nu)) && !t.centroid_supported(ivec_add(mu, nu))) ok = false;
    }
    rep.add("centroid.subgroup", ok, "Gamma support not closed under +/- in window");
  }

  {
    bool ok = true;
    std::string wit;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<size_t> d(0, atoms.size() - 1);
    std::uniform_int_distribution<size_t> g(0, gamma.empty() ? 0 : gamma.size() - 1);
    for (int s = 0; s < cfg.samples && !gamma.empty(); ++s) {
      const IVec& mu = gamma[g(rng)];
      const AtomKey &a = atoms[d(rng)], &b = atoms[d(rng)];
      LieElement x{{a, Scalar::one()}}, y{{b, Scalar::one()}};
      LieElement lhs = t.centroid(mu, t.bracket(x, y));
      LieElement r1 = t.bracket(t.centroid(mu, x), y);
      LieElement r2 = t.bracket(x, t.centroid(mu, y));
      LieElement d1 = le_add(lhs, le_scaled(r1, -Scalar::one()));
      LieElement d2 = le_add(lhs, le_scaled(r2, -Scalar::one()));
      if (!t.element_is_zero(d1, cfg.eq_radius) || !t.element_is_zero(d2, cfg.eq_radius)) {
        ok = false;
        wit = "chi^" + ivec_str(mu) + " fails the centroid law on (" + t.atom_desc(a) + ", " +
              t.atom_desc(b) + ")";
        break;
      }
    }
    rep.add("centroid.action", ok, wit);
  }
  return rep;
}

}  // namespace lt
