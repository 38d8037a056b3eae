#include "lietorus/matrix_lie.hpp"

#include <algorithm>

namespace lt {

LieCoeffs lc_add(const LieCoeffs& a, const LieCoeffs& b) {
  LieCoeffs r = a;
  for (const auto& [k, c] : b) {
    auto it = r.find(k);
    if (it == r.end())
      r.emplace(k, c);
    else {
      it->second += c;
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

LieCoeffs lc_scaled(const LieCoeffs& a, const Scalar& c) {
  LieCoeffs r;
  if (c.is_zero()) return r;
  for (const auto& [k, x] : a) {
    Scalar y = x * c;
    if (!y.is_zero()) r.emplace(k, y);
  }
  return r;
}

bool lc_is_zero(const LieCoeffs& a) { return a.empty(); }

namespace {

ScalarMatrix unit_matrix(int n, int i, int j, int sign = 1) {
  ScalarMatrix m(n, n);
  m.at(i, j) = sign > 0 ? Scalar::one() : -Scalar::one();
  return m;
}

ScalarMatrix mat_add(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) += b.at(i, j);
  return r;
}

ScalarMatrix mat_sub(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) -= b.at(i, j);
  return r;
}

}  // namespace

MatrixLie MatrixLie::builtin(char type, int rank) {
  MatrixLie g;
  g.label_ = std::string(1, type) + std::to_string(rank);
  g.rs_ = RootSystem::build(type, rank);
  int l = rank;
  auto add_atom = [&](const ScalarMatrix& m, const IVec& root, bool cartan) {
    if (cartan) g.cartan_.push_back(static_cast<int>(g.mats_.size()));
    g.mats_.push_back(m);
    g.atom_roots_.push_back(root);
  };
  switch (type) {
    case 'A': {
      int n = l + 1;
      g.mat_dim_ = n;
      for (int i = 0; i < l; ++i)
        add_atom(mat_sub(unit_matrix(n, i, i), unit_matrix(n, i + 1, i + 1)), ivec_zero(n), true);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          add_atom(unit_matrix(n, i, j), ivec_sub(ivec_unit(n, i), ivec_unit(n, j)), false);
        }
      break;
    }
    case 'B':
    case 'D': {
      int n = type == 'B' ? 2 * l + 1 : 2 * l;
      g.mat_dim_ = n;
      for (int i = 0; i < l; ++i)
        add_atom(mat_sub(unit_matrix(n, i, i), unit_matrix(n, l + i, l + i)), ivec_zero(l), true);
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
          if (i == j) continue;
          add_atom(mat_sub(unit_matrix(n, i, j), unit_matrix(n, l + j, l + i)),
                   ivec_sub(ivec_unit(l, i), ivec_unit(l, j)), false);
        }
      for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
          add_atom(mat_sub(unit_matrix(n, i, l + j), unit_matrix(n, j, l + i)),
                   ivec_add(ivec_unit(l, i), ivec_unit(l, j)), false);
          add_atom(mat_sub(unit_matrix(n, l + j, i), unit_matrix(n, l + i, j)),
                   ivec_neg(ivec_add(ivec_unit(l, i), ivec_unit(l, j))), false);
        }
      if (type == 'B')
        for (int i = 0; i < l; ++i) {
          add_atom(mat_sub(unit_matrix(n, i, 2 * l), unit_matrix(n, 2 * l, l + i)),
                   ivec_unit(l, i), false);
          add_atom(mat_sub(unit_matrix(n, l + i, 2 * l), unit_matrix(n, 2 * l, i)),
                   ivec_neg(ivec_unit(l, i)), false);
        }
      break;
    }
    case 'C': {
      int n = 2 * l;
      g.mat_dim_ = n;
      for (int i = 0; i < l; ++i)
        add_atom(mat_sub(unit_matrix(n, i, i), unit_matrix(n, l + i, l + i)), ivec_zero(l), true);
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
          if (i == j) continue;
          add_atom(mat_sub(unit_matrix(n, i, j), unit_matrix(n, l + j, l + i)),
                   ivec_sub(ivec_unit(l, i), ivec_unit(l, j)), false);
        }
      for (int i = 0; i < l; ++i) {
        add_atom(unit_matrix(n, i, l + i), ivec_scaled(ivec_unit(l, i), 2), false);
        add_atom(unit_matrix(n, l + i, i), ivec_scaled(ivec_unit(l, i), -2), false);
      }
      for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
          add_atom(mat_add(unit_matrix(n, i, l + j), unit_matrix(n, j, l + i)),
                   ivec_add(ivec_unit(l, i), ivec_unit(l, j)), false);
          add_atom(mat_add(unit_matrix(n, l + i, j), unit_matrix(n, l + j, i)),
                   ivec_neg(ivec_add(ivec_unit(l, i), ivec_unit(l, j))), false);
        }
      break;
    }
    default:
      fail("UnsupportedType", "built-in simple algebras cover types A-D only");
  }
  g.dim_ = static_cast<int>(g.mats_.size());
  g.finalize_from_matrices();
  return g;
}

void MatrixLie::finalize_from_matrices() {
  int n = mat_dim_;
  // Coordinate solver: columns are the flattened basis matrices.
  ScalarMatrix coords(n * n, dim_);
  for (int a = 0; a < dim_; ++a)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) coords.at(i * n + j, a) = mats_[static_cast<size_t>(a)].at(i, j);
  auto decomp = [&](const ScalarMatrix& m) {
    std::vector<Scalar> b(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b[static_cast<size_t>(i) * n + j] = m.at(i, j);
    std::vector<Scalar> x = coords.solve(b);
    LieCoeffs r;
    for (int a = 0; a < dim_; ++a)
      if (!x[static_cast<size_t>(a)].is_zero()) r.emplace(a, x[static_cast<size_t>(a)]);
    return r;
  };
  table_.assign(static_cast<size_t>(dim_) * dim_, LieCoeffs{});
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      ScalarMatrix c = mat_sub(mats_[static_cast<size_t>(i)] * mats_[static_cast<size_t>(j)],
                               mats_[static_cast<size_t>(j)] * mats_[static_cast<size_t>(i)]);
      table_[static_cast<size_t>(i) * dim_ + j] = decomp(c);
    }
  form_.assign(static_cast<size_t>(dim_) * dim_, Scalar::zero());
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      ScalarMatrix p = mats_[static_cast<size_t>(i)] * mats_[static_cast<size_t>(j)];
      Scalar t = Scalar::zero();
      for (int a = 0; a < n; ++a) t += p.at(a, a);
      form_[static_cast<size_t>(i) * dim_ + j] = t;
    }
}

MatrixLie MatrixLie::from_table(const LieTable& t) {
  MatrixLie g;
  g.label_ = "table(" + std::to_string(t.dim) + ")";
  g.dim_ = t.dim;
  g.cartan_ = t.cartan;
  g.atom_roots_ = t.roots;
  if (g.atom_roots_.empty()) g.atom_roots_.assign(static_cast<size_t>(t.dim), IVec{});
  g.table_.assign(static_cast<size_t>(t.dim) * t.dim, LieCoeffs{});
  for (const auto& [ij, c] : t.brackets) {
    auto [i, j] = ij;
    require(i >= 0 && i < t.dim && j >= 0 && j < t.dim, "InvalidTable", "atom index out of range");
    g.table_[static_cast<size_t>(i) * t.dim + j] = c;
    auto& mirror = g.table_[static_cast<size_t>(j) * t.dim + i];
    if (mirror.empty()) mirror = lc_scaled(c, -Scalar::one());
  }
  // Root system from the supplied root vectors.
  std::vector<IVec> nonzero;
  for (const auto& r : g.atom_roots_)
    if (!r.empty() && !ivec_is_zero(r)) nonzero.push_back(r);
  std::sort(nonzero.begin(), nonzero.end());
  nonzero.erase(std::unique(nonzero.begin(), nonzero.end()), nonzero.end());
  std::map<std::pair<IVec, IVec>, int> cartan_ints;
  for (const auto& b : nonzero)
    for (const auto& a : nonzero) {
      std::int64_t num = 2 * ivec_dot(b, a), den = ivec_dot(a, a);
      if (den != 0 && num % den == 0)
        cartan_ints[{b, a}] = static_cast<int>(num / den);
    }
  g.rs_ = RootSystem::custom(nonzero, std::move(cartan_ints), g.label_);
  if (!t.skip_validation) g.validate_table();
  g.compute_killing();
  return g;
}

void MatrixLie::validate_table() {
  for (int i = 0; i < dim_; ++i) {
    require(table_[static_cast<size_t>(i) * dim_ + i].empty(), "InvalidTable",
            "[x,x] != 0 in structure table");
    for (int j = 0; j < dim_; ++j) {
      LieCoeffs sym = lc_add(table_[static_cast<size_t>(i) * dim_ + j],
                             table_[static_cast<size_t>(j) * dim_ + i]);
      require(lc_is_zero(sym), "InvalidTable", "structure table is not antisymmetric");
    }
  }
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        LieCoeffs s = bracket(bracket_atoms(i, j), LieCoeffs{{k, Scalar::one()}});
        s = lc_add(s, bracket(bracket_atoms(j, k), LieCoeffs{{i, Scalar::one()}}));
        s = lc_add(s, bracket(bracket_atoms(k, i), LieCoeffs{{j, Scalar::one()}}));
        require(lc_is_zero(s), "InvalidTable", "Jacobi identity fails in structure table");
      }
}

void MatrixLie::compute_killing() {
  if (!form_.empty()) return;
  form_.assign(static_cast<size_t>(dim_) * dim_, Scalar::zero());
  std::vector<ScalarMatrix> ads;
  for (int i = 0; i < dim_; ++i) ads.push_back(ad(LieCoeffs{{i, Scalar::one()}}));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      ScalarMatrix p = ads[static_cast<size_t>(i)] * ads[static_cast<size_t>(j)];
      Scalar t = Scalar::zero();
      for (int a = 0; a < dim_; ++a) t += p.at(a, a);
      form_[static_cast<size_t>(i) * dim_ + j] = t;
    }
}

std::vector<int> MatrixLie::atoms_with_root(const IVec& root) const {
  std::vector<int> out;
  for (int i = 0; i < dim_; ++i)
    if (atom_roots_[static_cast<size_t>(i)] == root) out.push_back(i);
  return out;
}

LieCoeffs MatrixLie::bracket_atoms(int i, int j) const {
  return table_[static_cast<size_t>(i) * dim_ + j];
}

LieCoeffs MatrixLie::bracket(const LieCoeffs& x, const LieCoeffs& y) const {
  LieCoeffs r;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y) r = lc_add(r, lc_scaled(bracket_atoms(i, j), ci * cj));
  return r;
}

Scalar MatrixLie::form_atoms(int i, int j) const {
  return form_[static_cast<size_t>(i) * dim_ + j];
}

LieCoeffs MatrixLie::decompose(const ScalarMatrix& m) const {
  require(has_matrices(), "NotTransposeClosed", "no matrix model for this algebra");
  int n = mat_dim_;
  ScalarMatrix coords(n * n, dim_);
  for (int a = 0; a < dim_; ++a)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) coords.at(i * n + j, a) = mats_[static_cast<size_t>(a)].at(i, j);
  std::vector<Scalar> b(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[static_cast<size_t>(i) * n + j] = m.at(i, j);
  std::vector<Scalar> x = coords.solve(b);
  LieCoeffs r;
  for (int a = 0; a < dim_; ++a)
    if (!x[static_cast<size_t>(a)].is_zero()) r.emplace(a, x[static_cast<size_t>(a)]);
  return r;
}

LieCoeffs MatrixLie::chevalley_atom(int i) const {
  require(has_matrices(), "NotTransposeClosed",
          "theta(X) = -X^t needs a transpose-closed matrix model");
  ScalarMatrix t = mats_[static_cast<size_t>(i)].transposed();
  for (int a = 0; a < mat_dim_; ++a)
    for (int b = 0; b < mat_dim_; ++b) t.at(a, b) = -t.at(a, b);
  return decompose(t);
}

ScalarMatrix MatrixLie::ad(const LieCoeffs& x) const {
  ScalarMatrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    LieCoeffs img = bracket(x, LieCoeffs{{j, Scalar::one()}});
    for (const auto& [i, c] : img) m.at(i, j) = c;
  }
  return m;
}

}  // namespace lt
