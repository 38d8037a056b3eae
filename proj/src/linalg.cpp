#include "lietorus/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace lt {

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
  require(cols_ == o.rows_, "DimensionMismatch", "matrix product shape");
  ScalarMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

ScalarMatrix ScalarMatrix::transposed() const {
  ScalarMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<int> ScalarMatrix::rref_in_place() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int p = -1;
    for (int i = row; i < rows_; ++i)
      if (!at(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
    Scalar inv = at(row, col).inverse();
    for (int j = col; j < cols_; ++j) at(row, j) = at(row, j) * inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == row || at(i, col).is_zero()) continue;
      Scalar f = at(i, col);
      for (int j = col; j < cols_; ++j) at(i, j) = at(i, j) - f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int ScalarMatrix::rank() const {
  ScalarMatrix m = *this;
  return static_cast<int>(m.rref_in_place().size());
}

std::vector<std::vector<Scalar>> ScalarMatrix::kernel_basis() const {
  ScalarMatrix m = *this;
  std::vector<int> pivots = m.rref_in_place();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_, Scalar::zero());
    v[free] = Scalar::one();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool ScalarMatrix::solve_consistent(const std::vector<Scalar>& b, std::vector<Scalar>& out) const {
  require(static_cast<int>(b.size()) == rows_, "DimensionMismatch", "solve rhs size");
  ScalarMatrix m(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    m.at(i, cols_) = b[i];
  }
  std::vector<int> pivots = m.rref_in_place();
  if (!pivots.empty() && pivots.back() == cols_) return false;  // inconsistent
  out.assign(cols_, Scalar::zero());
  for (size_t r = 0; r < pivots.size(); ++r) out[pivots[r]] = m.at(static_cast<int>(r), cols_);
  return true;
}

std::vector<Scalar> ScalarMatrix::solve(const std::vector<Scalar>& b) const {
  std::vector<Scalar> out;
  require(solve_consistent(b, out), "Inconsistent", "linear system has no solution");
  return out;
}

namespace {

/// Rational kernel of a dense mpq matrix; deterministic RREF-derived basis.
std::vector<std::vector<Rational>> rational_kernel(std::vector<std::vector<Rational>> m, int cols) {
  int rows = static_cast<int>(m.size());
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int p = -1;
    for (int i = row; i < rows; ++i)
      if (m[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][col];
    for (int j = col; j < cols; ++j) m[row][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (int j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<IVec> integer_kernel(const ScalarMatrix& m) {
  int n = m.cols();
  // Stack: one rational row per (matrix row, power-basis coordinate).
  long cond = 1;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < n; ++j) cond = lcm_long(cond, m.at(i, j).conductor());
  size_t phi = static_cast<size_t>(euler_phi(cond));
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<std::vector<Rational>> block(phi, std::vector<Rational>(n, Rational(0)));
    for (int j = 0; j < n; ++j) {
      Scalar s = m.at(i, j).promoted(cond);
      for (size_t k = 0; k < phi; ++k) block[k][j] = s.coeffs()[k];
    }
    for (auto& r : block) rows.push_back(std::move(r));
  }
  auto basis = rational_kernel(std::move(rows), n);
  std::vector<IVec> out;
  for (auto& v : basis) {
    mpz_class den(1);
    for (auto& x : v) den = den * x.get_den() / gcd(den, mpz_class(x.get_den()));
    mpz_class g(0);
    std::vector<mpz_class> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
      w[i] = v[i].get_num() * (den / v[i].get_den());
      g = gcd(g, w[i]);
    }
    if (g == 0) continue;
    IVec iv(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
      mpz_class q = w[i] / g;
      require(q.fits_slong_p(), "Overflow", "integer kernel entry too large");
      iv[i] = q.get_si();
    }
    // Sign convention: first nonzero entry positive.
    for (auto x : iv)
      if (x != 0) {
        if (x < 0)
          for (auto& y : iv) y = -y;
        break;
      }
    out.push_back(std::move(iv));
  }
  return out;
}

namespace {

/// Hermite-style integer row reduction; returns echelon rows (may be fewer
/// than input). Exact over mpz to dodge overflow.
std::vector<std::vector<mpz_class>> integer_echelon(const std::vector<IVec>& gens, int n) {
  std::vector<std::vector<mpz_class>> rows;
  for (const auto& g : gens) {
    std::vector<mpz_class> r(n);
    for (int i = 0; i < n; ++i) r[i] = static_cast<long>(g[i]);
    rows.push_back(std::move(r));
  }
  std::vector<std::vector<mpz_class>> ech;
  int col = 0;
  size_t start = 0;
  while (col < n) {
    // Gather rows with support starting at col and run Euclid on that column.
    bool any = true;
    while (any) {
      any = false;
      int best = -1;
      for (size_t i = start; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best < 0 || abs(rows[i][col]) < abs(rows[static_cast<size_t>(best)][col]))
          best = static_cast<int>(i);
      }
      if (best < 0) break;
      std::swap(rows[start], rows[static_cast<size_t>(best)]);
      for (size_t i = start + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        mpz_class q = rows[i][col] / rows[start][col];  // truncated division is fine
        for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[start][j];
        if (rows[i][col] != 0) any = true;
      }
    }
    if (start < rows.size() && rows[start][col] != 0) {
      if (rows[start][col] < 0)
        for (auto& x : rows[start]) x = -x;
      ech.push_back(rows[start]);
      ++start;
    }
    ++col;
  }
  return ech;
}

}  // namespace

int lattice_rank(const std::vector<IVec>& gens, int n) {
  return static_cast<int>(integer_echelon(gens, n).size());
}

bool generates_full_lattice(const std::vector<IVec>& gens, int n) {
  auto ech = integer_echelon(gens, n);
  if (static_cast<int>(ech.size()) != n) return false;
  mpz_class det(1);
  for (int i = 0; i < n; ++i) {
    int lead = 0;
    while (lead < n && ech[i][lead] == 0) ++lead;
    det *= ech[i][lead];
  }
  return det == 1 || det == -1;
}

bool in_lattice_span(const std::vector<IVec>& gens, const IVec& v) {
  int n = static_cast<int>(v.size());
  auto ech = integer_echelon(gens, n);
  std::vector<mpz_class> w(n);
  for (int i = 0; i < n; ++i) w[i] = static_cast<long>(v[i]);
  for (const auto& row : ech) {
    int lead = 0;
    while (lead < n && row[lead] == 0) ++lead;
    if (lead == n || w[lead] == 0) continue;
    if (w[lead] % row[lead] != 0) return false;
    mpz_class q = w[lead] / row[lead];
    for (int j = 0; j < n; ++j) w[j] -= q * row[j];
  }
  return std::all_of(w.begin(), w.end(), [](const mpz_class& x) { return x == 0; });
}

bool same_column_space(const ScalarMatrix& a, const ScalarMatrix& b) {
  require(a.rows() == b.rows(), "DimensionMismatch", "column space comparison");
  int ra = a.rank(), rb = b.rank();
  if (ra != rb) return false;
  ScalarMatrix joint(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) joint.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) joint.at(i, a.cols() + j) = b.at(i, j);
  }
  return joint.rank() == ra;
}

}  // namespace lt
