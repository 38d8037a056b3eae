#ifndef LIETORUS_MATRIX_LIE_HPP
#define LIETORUS_MATRIX_LIE_HPP

#include <optional>

#include "lietorus/roots.hpp"

namespace lt {

/// Sparse coefficient vector on the basis atoms of a MatrixLie.
using LieCoeffs = std::map<int, Scalar>;

LieCoeffs lc_add(const LieCoeffs& a, const LieCoeffs& b);
LieCoeffs lc_scaled(const LieCoeffs& a, const Scalar& c);
bool lc_is_zero(const LieCoeffs& a);

/// Structure-constant table input for user-supplied simple algebras.
struct LieTable {
  int dim = 0;
  // brackets[i][j] -> coefficients; only i < j need be given (antisymmetry
  // fills the rest); diagonal entries must be absent/zero.
  std::map<std::pair<int, int>, LieCoeffs> brackets;
  std::vector<int> cartan;           // indices of the Cartan basis atoms
  std::vector<IVec> roots;           // per-atom root vector (0 for Cartan atoms)
  bool skip_validation = false;      // testing hook for negative controls
};

/// Finite-dimensional Lie algebra with a marked Cartan and root data, either
/// a built-in matrix model (types A-D) or a validated structure table.
class MatrixLie {
public:
  /// Built-ins: A = sl_{l+1}, B = so_{2l+1} (skew for the bilinear form f with
  /// f(v_i, v_{l+i}) = 1 and f(v_{2l+1}, v_{2l+1}) = 1), C = sp_{2l},
  /// D = so_{2l}.
  static MatrixLie builtin(char type, int rank);
  /// Table route; InvalidTable when antisymmetry or Jacobi fails.
  static MatrixLie from_table(const LieTable& table);

  int dim() const { return dim_; }
  const std::string& label() const { return label_; }
  const RootSystem& roots() const { return rs_; }
  const std::vector<int>& cartan_atoms() const { return cartan_; }
  const IVec& atom_root(int i) const { return atom_roots_[static_cast<size_t>(i)]; }
  /// Atoms with the given root (Cartan atoms for root 0).
  std::vector<int> atoms_with_root(const IVec& root) const;

  LieCoeffs bracket_atoms(int i, int j) const;
  LieCoeffs bracket(const LieCoeffs& x, const LieCoeffs& y) const;
  /// Invariant symmetric form: defining-representation trace form for
  /// built-ins, Killing form for tables.
  Scalar form_atoms(int i, int j) const;

  bool has_matrices() const { return !mats_.empty(); }
  const ScalarMatrix& matrix(int i) const { return mats_[static_cast<size_t>(i)]; }
  int matrix_dim() const { return mat_dim_; }
  /// Coordinates of a matrix in the atom basis (built-ins only).
  LieCoeffs decompose(const ScalarMatrix& m) const;

  /// theta(X) = -X^t on atoms; NotTransposeClosed when no matrix model.
  LieCoeffs chevalley_atom(int i) const;

  /// ad-action matrix of an element (dim x dim).
  ScalarMatrix ad(const LieCoeffs& x) const;

private:
  MatrixLie() : rs_(RootSystem::custom({}, {}, "empty")) {}
  void finalize_from_matrices();
  void validate_table();
  void compute_killing();

  std::string label_;
  int dim_ = 0;
  RootSystem rs_;
  std::vector<int> cartan_;
  std::vector<IVec> atom_roots_;
  std::vector<ScalarMatrix> mats_;
  int mat_dim_ = 0;
  // dense tables
  std::vector<LieCoeffs> table_;  // (i * dim + j) -> coefficients
  std::vector<Scalar> form_;      // (i * dim + j)
};

}  // namespace lt

#endif
