#ifndef LIETORUS_LINALG_HPP
#define LIETORUS_LINALG_HPP

#include <cstdint>
#include <vector>

#include "lietorus/scalar.hpp"

namespace lt {

using IVec = std::vector<std::int64_t>;

/// Dense matrix of exact cyclotomic scalars.
class ScalarMatrix {
public:
  ScalarMatrix() : rows_(0), cols_(0) {}
  ScalarMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  ScalarMatrix operator*(const ScalarMatrix& o) const;
  ScalarMatrix transposed() const;

  int rank() const;
  /// Kernel basis in the deterministic reduced-echelon form (one vector per
  /// free column, free coordinate set to 1).
  std::vector<std::vector<Scalar>> kernel_basis() const;
  /// Solve M x = b. Inconsistent when no solution; free coordinates are 0.
  std::vector<Scalar> solve(const std::vector<Scalar>& b) const;
  /// Simultaneous solve for several right-hand sides; nullopt if any is
  /// inconsistent.
  bool solve_consistent(const std::vector<Scalar>& b, std::vector<Scalar>& out) const;

  /// Reduced row echelon form; returns pivot column indices.
  std::vector<int> rref_in_place();

private:
  int rows_, cols_;
  std::vector<Scalar> a_;
};

/// Basis of the integer lattice {v in Z^n : M v = 0}, computed by expanding
/// every scalar entry on the rational power basis and taking the kernel of the
/// stacked rational system; vectors are primitive and deterministic.
std::vector<IVec> integer_kernel(const ScalarMatrix& m);

/// Rank of the subgroup of Z^n generated by the given vectors.
int lattice_rank(const std::vector<IVec>& gens, int n);

/// True when the given vectors generate all of Z^n.
bool generates_full_lattice(const std::vector<IVec>& gens, int n);

/// True when `v` lies in the subgroup of Z^n generated by `gens`.
bool in_lattice_span(const std::vector<IVec>& gens, const IVec& v);

/// Column space equality of two scalar matrices (as subspaces of K^rows).
bool same_column_space(const ScalarMatrix& a, const ScalarMatrix& b);

}  // namespace lt

#endif
