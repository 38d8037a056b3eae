#ifndef LIETORUS_INVOLUTION_HPP
#define LIETORUS_INVOLUTION_HPP

#include <functional>

#include "lietorus/checker.hpp"
#include "lietorus/constructions.hpp"
#include "lietorus/constructions_titsb.hpp"
#include "lietorus/report.hpp"

namespace lt {

/// Degree-reversing self-map descriptor on a Lie torus, given by exact
/// evaluation on atoms. None of the involution contracts (order 2,
/// homomorphism, degree/root reversal, Cartan negation) are assumed here;
/// verify_involution checks them and reports.
class LieInvolution {
public:
  LieInvolution() = default;
  LieInvolution(const LieTorus* t, std::function<LieElement(const AtomKey&)> on_atom,
                std::string tag)
      : t_(t), on_atom_(std::move(on_atom)), tag_(std::move(tag)) {}
  const LieTorus* torus() const { return t_; }
  const std::string& tag() const { return tag_; }
  LieElement apply_atom(const AtomKey& a) const { return on_atom_(a); }
  LieElement apply(const LieElement& x) const;

private:
  const LieTorus* t_ = nullptr;
  std::function<LieElement(const AtomKey&)> on_atom_;
  std::string tag_;
};

/// The construction-specific Chevalley formulas.
LieInvolution chevalley_tensor(const TensorTorus& t);
LieInvolution chevalley_sl(const SlTorus& t, const AntiInvolution& sigma);
LieInvolution chevalley_psl3(const Psl3Torus& t, const AntiInvolution& sigma);
LieInvolution chevalley_tkk(const TkkTorus& t);
LieInvolution chevalley_tkk_hermitian(const TkkHermitian& t);
LieInvolution chevalley_tkk_redcliff(const TkkRedCliff& t);
LieInvolution chevalley_tits_b(const TitsBTorus& t);
/// tau: Chevalley involution of g (matrix on the g-basis); psi: optional
/// automorphism with psi(g^{bar l}) <= g^{-bar l} and psi|h' = id (identity
/// by default, valid when all periods divide 2). HypothesisViolated on failed
/// hypotheses.
LieInvolution chevalley_multiloop(const MultiLoopTorus& t, const ScalarMatrix& tau,
                                  const ScalarMatrix* psi = nullptr);
/// Negative control: the identity map (fails degree reversal).
LieInvolution identity_involution(const LieTorus& t);

/// Full verification sweep: (a) order 2, (b) bracket homomorphism,
/// (c) degree reversal, (d) root reversal, (e) -id on L_0^0.
Report verify_involution(const LieTorus& t, const LieInvolution& tau, const CheckerConfig& cfg);

/// Torus-level sweeps: pre-Chevalley involutions (homomorphism, degree
/// reversal) and anti-involutions (anti-homomorphism, degree preservation).
Report verify_involution(const TorusAlgebra& a, const TorusInvolution& tau, int window);
Report verify_involution(const TorusAlgebra& a, const AntiInvolution& sigma, int window);
/// Finite-dimensional check: automorphism, order 2, -id on the Cartan.
Report verify_involution(const MatrixLie& g, const std::function<LieCoeffs(int)>& tau);

}  // namespace lt

#endif
