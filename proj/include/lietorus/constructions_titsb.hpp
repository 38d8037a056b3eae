#ifndef LIETORUS_CONSTRUCTIONS_TITSB_HPP
#define LIETORUS_CONSTRUCTIONS_TITSB_HPP

#include "lietorus/constructions.hpp"

namespace lt {

/// Generalized Tits construction for type B_l (l >= 3):
/// (g (x) B) + (V (x) W) + D_{W,W} with g = so(2l+1), B the Laurent algebra
/// in n variables (degrees doubled), V the defining representation, W the free
/// module on w_2..w_m with g(w_i, w_j) = delta_ij x^{tau_i}.
class TitsBTorus : public LieTorus {
public:
  TitsBTorus(int ell, int n, std::vector<IVec> taus);
  std::string name() const override;
  const RootSystem& delta() const override { return g_.roots(); }
  int rank() const override { return n_; }
  std::vector<AtomKey> atoms_at(const IVec& root, const IVec& deg) const override;
  LieElement bracket_atoms(const AtomKey& a, const AtomKey& b) const override;
  Scalar form_atoms(const AtomKey& a, const AtomKey& b) const override;
  bool centroid_supported(const IVec& mu) const override;
  LieElement centroid_apply(const IVec& mu, const AtomKey& a) const override;
  std::string atom_desc(const AtomKey& a) const override;
  const MatrixLie& g() const { return g_; }
  int ell() const { return ell_; }
  /// weight of the basis vector v_a of the defining representation
  IVec v_weight(int a) const;
  int w_index(const IVec& deg) const;

private:
  int ell_, n_;
  std::vector<IVec> taus_;
  MatrixLie g_;
};

/// Multi-loop Lie torus LT(g, sigma, h') = M(g, sigma) for commuting
/// finite-order automorphisms sigma_i, with exact joint eigenspaces and
/// h'-weights. Atom kind 0: aux = (index into the eigenbasis of the
/// component), root = scaled weight vector.
class MultiLoopTorus : public LieTorus {
public:
  MultiLoopTorus(MatrixLie g, std::vector<ScalarMatrix> sigmas, std::vector<long> periods,
                 std::vector<LieCoeffs> hprime);
  std::string name() const override;
  const RootSystem& delta() const override { return rs_; }
  int rank() const override { return nu_; }
  std::vector<AtomKey> atoms_at(const IVec& root, const IVec& deg) const override;
  LieElement bracket_atoms(const AtomKey& a, const AtomKey& b) const override;
  Scalar form_atoms(const AtomKey& a, const AtomKey& b) const override;
  bool centroid_supported(const IVec& mu) const override;
  LieElement centroid_apply(const IVec& mu, const AtomKey& a) const override;
  int cartan_integer(const IVec& beta, const IVec& alpha) const override;
  std::string atom_desc(const AtomKey& a) const override;

  const MatrixLie& g() const { return g_; }
  int num_weights() const { return static_cast<int>(weights_.size()); }
  /// integral root label of a weight tuple (index into the scaled model)
  const std::vector<std::vector<Scalar>>& weight_tuples() const { return weights_; }
  /// basis (in g-coordinates) of the joint eigenspace g^{bar lambda}
  /// intersected with the alpha'-weight space, for residue and root label.
  const std::vector<LieCoeffs>& component(const IVec& residue, const IVec& root) const;
  /// residue of a lattice degree
  IVec residue_of(const IVec& deg) const;
  /// decompose an element of g into (residue, root)-components; fails if the
  /// element does not lie in the expected component
  LieCoeffs project(const LieCoeffs& x, const IVec& residue, const IVec& root) const;
  const std::vector<long>& periods() const { return periods_; }
  const std::vector<ScalarMatrix>& sigmas() const { return sigmas_; }
  const std::vector<LieCoeffs>& hprime() const { return hprime_; }
  /// g as an eigen-decomposed object: all (residue, weight-label) pairs
  std::vector<std::pair<IVec, IVec>> component_labels() const;
  /// True when the torus uses the section-shifted grading (the Lie-torus
  /// grading: L_alpha^d sits at loop degree s(alpha) + m.d).
  bool regraded() const { return regraded_; }
  /// loop (z-)degree of an atom
  IVec z_degree(const AtomKey& a) const;
  /// the additive section on a root label (zero in plain mode)
  IVec section(const IVec& root) const;

private:
  void decompose_eigenspaces(const std::vector<LieCoeffs>& hprime);
  void build_section();
  bool regraded_ = false;
  std::map<IVec, IVec> label_residue_;    // label -> unique residue (when single)
  std::vector<IVec> section_basis_;       // s(e_j) for the label lattice basis
  MatrixLie g_;
  std::vector<ScalarMatrix> sigmas_;
  std::vector<LieCoeffs> hprime_;
  std::vector<long> periods_;
  int nu_;
  RootSystem rs_;
  std::vector<std::vector<Scalar>> weights_;  // weight tuples of h' (size = #labels)
  std::vector<IVec> weight_labels_;           // integral root labels, parallel to weights_
  // raw decomposition: (residue, weight tuple, basis)
  std::vector<std::tuple<IVec, std::vector<Scalar>, std::vector<LieCoeffs>>> comps_raw_;
  // (residue, label) -> basis vectors in g-coords
  std::map<std::pair<IVec, IVec>, std::vector<LieCoeffs>> comps_;
  // coordinate solver per component for project()
  std::map<std::pair<IVec, IVec>, ScalarMatrix> comp_coords_;
};

}  // namespace lt

#endif
