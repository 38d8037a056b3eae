#ifndef LIETORUS_EALA_HPP
#define LIETORUS_EALA_HPP

#include <memory>

#include "lietorus/involution.hpp"

namespace lt {

/// Finite sum of skew centroidal derivations chi^mu d_theta with
/// theta(mu) = 0, canonically merged per mu.
class SCDerElement {
public:
  SCDerElement() = default;
  static SCDerElement term(const IVec& mu, const GroupHom& theta);
  const std::map<IVec, GroupHom>& terms() const { return t_; }
  bool is_zero() const;
  SCDerElement operator+(const SCDerElement& o) const;
  SCDerElement operator-() const;
  SCDerElement scaled(const Scalar& c) const;
  std::string str() const;

private:
  std::map<IVec, GroupHom> t_;
  friend SCDerElement scder_bracket(const SCDerElement&, const SCDerElement&);
  friend SCDerElement scder_tau(const SCDerElement&);
  friend class EalaAlgebra;
  void accumulate(const IVec& mu, const GroupHom& theta);
};

/// [chi^mu d_theta, chi^nu d_psi] = chi^{mu+nu} (theta(nu) d_psi - psi(mu) d_theta)
SCDerElement scder_bracket(const SCDerElement& a, const SCDerElement& b);

/// d applied to a Lie torus element through the centroid action.
LieElement scder_act(const LieTorus& t, const SCDerElement& d, const LieElement& x);

/// Element of the graded dual of D: one lambda-combination vector per
/// centroidal degree mu; the component at mu pairs against chi^{-mu} d_theta
/// by theta(v) = sum v_i theta(e_i).
class DualElement {
public:
  DualElement() = default;
  static DualElement atom(const IVec& mu, const IVec& lambda, const Scalar& c = Scalar::one());
  static DualElement from_vector(const IVec& mu, std::vector<Scalar> v);
  const std::map<IVec, std::vector<Scalar>>& terms() const { return t_; }
  bool formally_zero() const { return t_.empty(); }
  DualElement operator+(const DualElement& o) const;
  DualElement operator-() const;
  DualElement scaled(const Scalar& c) const;
  std::string str() const;

private:
  std::map<IVec, std::vector<Scalar>> t_;
  friend Scalar dual_pair(const DualElement&, const SCDerElement&);
  friend DualElement dual_act(const SCDerElement&, const DualElement&);
  friend DualElement dual_tau(const DualElement&);
  void accumulate(const IVec& mu, const std::vector<Scalar>& v, const Scalar& c);
};

/// c(d) per the evaluation rule.
Scalar dual_pair(const DualElement& c, const SCDerElement& d);
/// Contragredient action (d.c)(d') = c([d', d]).
DualElement dual_act(const SCDerElement& d, const DualElement& c);

/// Graded subalgebra of SCDer(L), described per degree by the subspace
/// U_D^mu of Hom_Z(Lambda, K).
class DSubalgebra {
public:
  enum class Kind { FullScder, DegreeOnly, Triple, SkewExample, Intersection };

  static DSubalgebra full_scder(const LieTorus* L);
  static DSubalgebra degree_only(const LieTorus* L, std::vector<GroupHom> u);
  static DSubalgebra triple(const LieTorus* L, std::vector<GroupHom> u, std::vector<GroupHom> uprime,
                            std::vector<IVec> gamma_prime_gens);
  static DSubalgebra skew_example(const LieTorus* L, const IVec& gamma, std::vector<GroupHom> uplus,
                                  std::vector<GroupHom> uminus);
  DSubalgebra intersect(const DSubalgebra& other) const;
  /// tau-image: U_{D_tau}^mu = U_D^{-mu}.
  DSubalgebra tau_image() const;

  Kind kind() const { return kind_; }
  const LieTorus* torus() const { return L_; }
  int rank() const { return L_->rank(); }
  bool flipped() const { return flipped_; }
  /// Basis of U_D^mu = {theta : chi^mu d_theta in D^mu} (already restricted
  /// by theta(mu) = 0 for mu != 0 and by Gamma-membership).
  std::vector<GroupHom> u_space(const IVec& mu) const;
  /// ev: Lambda -> (D^0)* is injective (integer kernel of the value matrix).
  bool is_permissible() const;
  /// Window basis of D as SCDer terms.
  std::vector<SCDerElement> window_basis(const DegreeWindow& w) const;
  /// Validate closure under the SCDer bracket on window generator pairs.
  bool closed_under_bracket(const DegreeWindow& w) const;
  std::string desc() const;

private:
  DSubalgebra(const LieTorus* L, Kind k) : L_(L), kind_(k) {}
  std::vector<GroupHom> raw_u_space(const IVec& mu) const;
  const LieTorus* L_;
  Kind kind_;
  bool flipped_ = false;
  std::vector<GroupHom> u_, uprime_, uplus_, uminus_;
  std::vector<IVec> gamma_prime_gens_;
  IVec gamma_;
  std::shared_ptr<const DSubalgebra> left_, right_;  // Intersection
};

/// True iff theta-spaces are symmetric: U_D^mu = U_D^{-mu} for window mu.
bool is_D_invariant(const DSubalgebra& d, const DegreeWindow& w);

/// Affine cocycle: zero, an explicit generator-pair table, a tau-image, or a
/// sum. Tables are keyed by pairs of the listed generators and extended
/// bilinearly through exact coordinates.
class AffineCocycle {
public:
  static AffineCocycle zero();
  static AffineCocycle table(std::vector<SCDerElement> gens,
                             std::map<std::pair<int, int>, DualElement> values);
  AffineCocycle tau_image() const;
  AffineCocycle operator+(const AffineCocycle& o) const;
  bool is_zero_kind() const { return kind_ == Kind::Zero; }
  DualElement eval(const SCDerElement& a, const SCDerElement& b) const;

private:
  enum class Kind { Zero, Table, Tau, Sum };
  Kind kind_ = Kind::Zero;
  std::vector<SCDerElement> gens_;
  std::map<std::pair<int, int>, DualElement> values_;
  std::shared_ptr<const AffineCocycle> left_, right_;
};

/// tau-bar on the derivation and dual parts.
SCDerElement scder_tau(const SCDerElement& d);
DualElement dual_tau(const DualElement& c);

Report validate_cocycle(const DSubalgebra& d, const AffineCocycle& kappa, const DegreeWindow& w);
bool is_pair_invariant(const DSubalgebra& d, const AffineCocycle& kappa, const DegreeWindow& w);

struct EalaElement {
  LieElement x;
  DualElement c;
  SCDerElement d;
};

/// E(L, D, kappa) with the three-line bracket and the displayed form.
class EalaAlgebra {
public:
  EalaAlgebra(const LieTorus* L, DSubalgebra D, AffineCocycle kappa, bool require_permissible = true);
  const LieTorus& torus() const { return *L_; }
  const DSubalgebra& D() const { return D_; }
  const AffineCocycle& kappa() const { return kappa_; }

  EalaElement bracket(const EalaElement& u, const EalaElement& v) const;
  Scalar form(const EalaElement& u, const EalaElement& v) const;
  DualElement sigma_D(const LieElement& x, const LieElement& y) const;
  bool element_is_zero(const EalaElement& u, const DegreeWindow& w, int eqr) const;

  /// Atom-level window basis of E with bigrade labels.
  struct EAtom {
    int part;  // 0 = L, 1 = dual, 2 = der
    AtomKey lie;
    IVec mu;
    int idx;  // basis index within the mu-component (dual/der)
    EalaElement elem;
    std::string desc;
  };
  std::vector<EAtom> window_atoms(const DegreeWindow& w) const;
  std::vector<EalaElement> cartan_basis() const;

private:
  const LieTorus* L_;
  DSubalgebra D_;
  AffineCocycle kappa_;
};

/// EALA axiom spot-checks A1, A2, A3, A5, A6 at window scale.
Report eala_axiom_checks(const EalaAlgebra& e, const CheckerConfig& cfg);

/// Componentwise lift of a pre-Chevalley involution of L, and the target
/// algebra E^tau = E(L, D_tau, kappa_tau). The returned report carries the
/// centroid-normalization check (eta_mu = 1).
struct LiftedInvolution {
  LieInvolution tau;  // on L
  std::shared_ptr<EalaAlgebra> e_tau;
  EalaElement apply(const EalaElement& u) const;
};
LiftedInvolution lift_involution(const EalaAlgebra& e, const LieInvolution& tau,
                                 const DegreeWindow& w);

/// Normalization factors eta_mu^{-1/2} of Lemma-style centroid rescaling;
/// identity for every shipped construction (asserted in tests).
std::map<IVec, Scalar> centroid_normalization(const LieTorus& t, const LieInvolution& tau,
                                              const DegreeWindow& w);

/// verify_involution on the EALA: order 2, bracket map into E^tau, degree
/// reversal, and -id on the Cartan H.
Report verify_eala_involution(const EalaAlgebra& e, const LiftedInvolution& lift,
                              const CheckerConfig& cfg);

}  // namespace lt

#endif
