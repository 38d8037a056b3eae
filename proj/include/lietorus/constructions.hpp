#ifndef LIETORUS_CONSTRUCTIONS_HPP
#define LIETORUS_CONSTRUCTIONS_HPP

#include <memory>

#include "lietorus/lie_torus.hpp"
#include "lietorus/matrix_lie.hpp"
#include "lietorus/operators.hpp"
#include "lietorus/torus.hpp"

namespace lt {

/// g (x) K[x_1^-1..x_n^-1] for a built-in or table simple algebra g.
/// Atom kinds: 0 = g-basis atom (aux = (index)).
class TensorTorus : public LieTorus {
public:
  TensorTorus(MatrixLie g, int n);
  std::string name() const override;
  const RootSystem& delta() const override { return g_.roots(); }
  int rank() const override { return n_; }
  std::vector<AtomKey> atoms_at(const IVec& root, const IVec& deg) const override;
  LieElement bracket_atoms(const AtomKey& a, const AtomKey& b) const override;
  Scalar form_atoms(const AtomKey& a, const AtomKey& b) const override;
  bool centroid_supported(const IVec& mu) const override { return true; }
  LieElement centroid_apply(const IVec& mu, const AtomKey& a) const override;
  std::string atom_desc(const AtomKey& a) const override;
  const MatrixLie& g() const { return g_; }

private:
  MatrixLie g_;
  int n_;
};

/// sl_{l+1}(A) for an associative torus A, l+1 >= 4.
/// Atom kinds: 0 = x^deg E_{ij} (aux = (i, j)); 1 = x^deg (E_ii - E_{i+1,i+1})
/// (aux = (i)); 2 = x^deg E_11 when A^deg lies in [A,A].
class SlTorus : public LieTorus {
public:
  SlTorus(int ell_plus_1, std::shared_ptr<const TorusAlgebra> coords);
  std::string name() const override;
  const RootSystem& delta() const override { return rs_; }
  int rank() const override { return coords_->rank(); }
  std::vector<AtomKey> atoms_at(const IVec& root, const IVec& deg) const override;
  LieElement bracket_atoms(const AtomKey& a, const AtomKey& b) const override;
  Scalar form_atoms(const AtomKey& a, const AtomKey& b) const override;
  bool centroid_supported(const IVec& mu) const override;
  LieElement centroid_apply(const IVec& mu, const AtomKey& a) const override;
  std::string atom_desc(const AtomKey& a) const override;
  const TorusAlgebra& coords() const { return *coords_; }
  int matrix_size() const { return m_; }

  /// Entry list (i, j, coeff) of an atom (all entries share the atom degree).
  std::vector<std::tuple<int, int, Scalar>> entries(const AtomKey& a) const;
  /// Rebuild an entry-level matrix at a fixed degree into atoms.
  LieElement from_entries(const std::map<std::pair<int, int>, Scalar>& e, const IVec& deg) const;

private:
  bool commutator_cached(const IVec& deg) const;
  int m_;  // l+1
  std::shared_ptr<const TorusAlgebra> coords_;
  RootSystem rs_;
  mutable std::map<IVec, bool> cc_cache_;
};

/// psl_3(A) for an alternative torus A (quantum or octonion).
/// Atom kinds: 0 = E_{ij} (x) x^deg (aux = (i,j), i != j); 1 = (E_ii -
/// E_{i+1,i+1}) (x) x^deg (aux = (i)); 2 = alt-inner derivation atom
/// D(x^mu, x^{deg-mu}) (aux = mu, with mu < deg-mu lexicographically).
class Psl3Torus : public LieTorus {
public:
  Psl3Torus(std::shared_ptr<const TorusAlgebra> coords, int gen_radius);
  std::string name() const override;
  const RootSystem& delta() const override { return rs_; }
  int rank() const override { return coords_->rank(); }
  std::vector<AtomKey> atoms_at(const IVec& root, const IVec& deg) const override;
  LieElement bracket_atoms(const AtomKey& a, const AtomKey& b) const override;
  Scalar form_atoms(const AtomKey& a, const AtomKey& b) const override;
  bool centroid_supported(const IVec& mu) const override;
  LieElement centroid_apply(const IVec& mu, const AtomKey& a) const override;
  bool element_is_zero(const LieElement& x, int eq_radius) const override;
  ScalarMatrix coordinatize(const std::vector<LieElement>& xs, int eq_radius) const override;
  std::string atom_desc(const AtomKey& a) const override;
  const TorusAlgebra& coords() const { return *coords_; }

  OperatorElement der_part(const LieElement& x) const;
  LieElement der_atoms_from(const OperatorElement& op, const IVec& deg) const;

private:
  std::shared_ptr<const TorusAlgebra> coords_;
  RootSystem rs_;
  int gen_radius_;
};

/// TKK(J) for a Jordan coordinate torus J: the type A_1 Lie torus
/// J + Instrl(J) + Jbar. Atom kinds: 0 = x^deg in J (root (2)); 1 = bar
/// (root (-2)); 2 = L(x^deg); 3 = [L(x^aux), L(x^{deg-aux})] windowed.
class TkkTorus : public LieTorus {
public:
  TkkTorus(std::shared_ptr<const TorusAlgebra> coords, int gen_radius);
  std::string name() const override;
  const RootSystem& delta() const override { return rs_; }
  int rank() const override { return coords_->rank(); }
  std::vector<AtomKey> atoms_at(const IVec& root, const IVec& deg) const override;
  LieElement bracket_atoms(const AtomKey& a, const AtomKey& b) const override;
  Scalar form_atoms(const AtomKey& a, const AtomKey& b) const override;
  bool centroid_supported(const IVec& mu) const override;
  LieElement centroid_apply(const IVec& mu, const AtomKey& a) const override;
  bool element_is_zero(const LieElement& x, int eq_radius) const override;
  ScalarMatrix coordinatize(const std::vector<LieElement>& xs, int eq_radius) const override;
  std::string atom_desc(const AtomKey& a) const override;
  const TorusAlgebra& coords() const { return *coords_; }
  OperatorElement op_part(const LieElement& x) const;
  LieElement op_atoms_from(const OperatorElement& op) const;

private:
  std::shared_ptr<const TorusAlgebra> coords_;
  RootSystem rs_;
  int gen_radius_;
};

/// TKK(H_l(A, sigma_e)) for an associative +-1 quantum torus A: the type C_l
/// Lie torus, realized through the inner-structure operators T_M : z ->
/// (Mz + zM*)/2, M in Mat_l(A). Atom kinds: 0 = J-part (aux = (i<=j)); 1 =
/// bar part; 2 = T_{x^deg E_ij} (aux = (i,j)).
class TkkHermitian : public LieTorus {
public:
  TkkHermitian(int ell, std::shared_ptr<const TorusAlgebra> coords, std::vector<int> e);
  std::string name() const override;
  const RootSystem& delta() const override { return rs_; }
  int rank() const override { return coords_->rank(); }
  std::vector<AtomKey> atoms_at(const IVec& root, const IVec& deg) const override;
  LieElement bracket_atoms(const AtomKey& a, const AtomKey& b) const override;
  Scalar form_atoms(const AtomKey& a, const AtomKey& b) const override;
  bool centroid_supported(const IVec& mu) const override;
  LieElement centroid_apply(const IVec& mu, const AtomKey& a) const override;
  std::string atom_desc(const AtomKey& a) const override;
  const TorusAlgebra& coords() const { return *coords_; }
  int ell() const { return ell_; }
  /// sigma-sign s(deg) with sigma_e(x^deg) = s(deg) x^deg.
  Scalar sigma_sign(const IVec& deg) const;

private:
  // sparse Mat_l(A) elements with per-entry degrees
  using MatA = std::map<std::pair<int, int>, TorusElement>;
  bool centroid_like_central(const IVec& deg) const;
  MatA matrix_of(const AtomKey& a) const;
  MatA mat_mul(const MatA& x, const MatA& y) const;
  MatA star(const MatA& x) const;  // M* = sigma(M^t)
  LieElement from_m_block(const MatA& m, const IVec& deg) const;
  LieElement from_sym_block(const MatA& m, const IVec& deg, bool barpart) const;
  int ell_;
  std::shared_ptr<const TorusAlgebra> coords_;
  AntiInvolution sigma_;
  RootSystem rs_;
};

/// TKK(RedCliff(h)) for h built from tau_1 = 0, tau_2, ..., tau_m: the type
/// C_2 Lie torus. Atom kinds: 0 = J-part (aux = (p, i) with p in {0,1,2} for
/// the Peirce position (11),(22),(12) and i the module index for p = 2);
/// 1 = bar part; 2 = L-atom on J_pp (aux = (p)); 3 = S_{ij} atom (aux =
/// (i, j, module index)); 4 = Clifford derivation atom (aux = (i, j), deg =
/// 2s + tau_i + tau_j with s recovered from deg).
class TkkRedCliff : public LieTorus {
public:
  TkkRedCliff(int n, std::vector<IVec> taus);
  std::string name() const override;
  const RootSystem& delta() const override { return rs_; }
  int rank() const override { return n_; }
  std::vector<AtomKey> atoms_at(const IVec& root, const IVec& deg) const override;
  LieElement bracket_atoms(const AtomKey& a, const AtomKey& b) const override;
  Scalar form_atoms(const AtomKey& a, const AtomKey& b) const override;
  bool centroid_supported(const IVec& mu) const override;
  LieElement centroid_apply(const IVec& mu, const AtomKey& a) const override;
  std::string atom_desc(const AtomKey& a) const override;
  int module_rank() const { return static_cast<int>(taus_.size()); }
  const std::vector<IVec>& taus() const { return taus_; }

private:
  /// J12 component of a degree: the unique module index with deg = 2s + tau_i,
  /// or -1 when none.
  int j12_index(const IVec& deg, IVec* laurent = nullptr) const;
  int n_;
  std::vector<IVec> taus_;
  RootSystem rs_;
};

/// Dispatcher per the tkk_C contract. Octonion coordinates are validated
/// (OctonionRankNot3) and currently rejected as unsupported.
std::shared_ptr<LieTorus> make_tkk_c_hermitian(int ell, std::shared_ptr<const TorusAlgebra> coords,
                                               std::vector<int> e);

}  // namespace lt

#endif
