#ifndef LIETORUS_TORUS_HPP
#define LIETORUS_TORUS_HPP

#include <map>
#include <memory>

#include "lietorus/lattice.hpp"

namespace lt {

enum class TorusFamily { Laurent, Quantum, Octonion, JordanPlus, Hermitian, CliffordJS, Albert };

std::string family_name(TorusFamily f);

/// A coordinate Lambda-torus: every supported degree carries the canonical
/// basis monomial x^deg, and multiplication is the total structure function
/// x^a x^b = k(a,b) x^{a+b} (zero off support or when the product vanishes).
class TorusAlgebra {
public:
  static TorusAlgebra laurent(int n);
  static TorusAlgebra quantum(std::vector<std::vector<Scalar>> q);
  static TorusAlgebra octonion(int n);
  static TorusAlgebra jordan_plus(std::vector<std::vector<Scalar>> q);
  static TorusAlgebra hermitian(std::vector<std::vector<Scalar>> e);
  static TorusAlgebra clifford_js(int n, Semilattice s);
  static TorusAlgebra albert(int n);

  TorusFamily family() const { return family_; }
  int rank() const { return n_; }
  const std::vector<std::vector<Scalar>>& qmatrix() const { return q_; }
  const Semilattice& semilattice() const { return s_; }

  bool is_associative() const {
    return family_ == TorusFamily::Laurent || family_ == TorusFamily::Quantum;
  }
  bool is_alternative() const { return is_associative() || family_ == TorusFamily::Octonion; }
  bool is_jordan() const {
    return family_ == TorusFamily::JordanPlus || family_ == TorusFamily::Hermitian ||
           family_ == TorusFamily::CliffordJS || family_ == TorusFamily::Albert;
  }

  bool supports(const IVec& deg) const;
  /// Structure constant of x^a x^b (0 when unsupported or annihilating).
  Scalar k(const IVec& a, const IVec& b) const;

  /// Degrees of a generating set of the algebra (used by exact
  /// derivation-vanishing tests: a derivation is zero iff it kills these).
  std::vector<IVec> generating_degrees() const;

  /// lcm of the multiplicative orders of all q-parameters.
  long param_order_lcm() const;
  /// x^deg commutes with every generator (associative families only).
  bool center_support(const IVec& deg) const;
  /// A^deg lies in [A,A]; finite residue search mod param_order_lcm().
  bool commutator_component(const IVec& deg) const;

  /// Identity of this handle (for AlgebraMismatch checks).
  const void* id() const { return this; }

private:
  TorusAlgebra() = default;
  TorusFamily family_ = TorusFamily::Laurent;
  int n_ = 0;
  std::vector<std::vector<Scalar>> q_;  // quantum-style parameter matrix
  Semilattice s_;                       // CliffordJS
  long order_lcm_ = 1;

  Scalar k_quantum(const IVec& a, const IVec& b) const;
  Scalar k_albert(const IVec& a, const IVec& b) const;
  /// Reversal sign r(a) with bar(x^a) = r(a) x^a for the e-matrix involution.
  Scalar reversal_sign(const IVec& a) const;
  friend class AntiInvolution;
};

/// Finite sparse element; zero coefficients pruned.
class TorusElement {
public:
  TorusElement() : alg_(nullptr) {}
  explicit TorusElement(const TorusAlgebra* alg) : alg_(alg) {}
  static TorusElement monomial(const TorusAlgebra* alg, const IVec& deg,
                               const Scalar& c = Scalar::one());
  static TorusElement unit(const TorusAlgebra* alg);

  const TorusAlgebra* algebra() const { return alg_; }
  const std::map<IVec, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_homogeneous() const { return t_.size() <= 1; }
  void add_term(const IVec& deg, const Scalar& c);
  Scalar coeff(const IVec& deg) const;
  /// Coefficient of the degree-0 component (the "constant term").
  Scalar constant_term() const;

  TorusElement operator+(const TorusElement& o) const;
  TorusElement operator-(const TorusElement& o) const;
  TorusElement operator-() const;
  TorusElement scaled(const Scalar& c) const;
  bool operator==(const TorusElement& o) const;

  std::string str() const;

private:
  const TorusAlgebra* alg_;
  std::map<IVec, Scalar> t_;
};

TorusElement mul(const TorusElement& u, const TorusElement& v);
/// Inverse of a nonzero homogeneous element (Jordan inverse for Jordan tori).
TorusElement homog_inverse(const TorusElement& x);

/// The canonical pre-Chevalley involution x^a -> x^{-a} of any family.
class TorusInvolution {
public:
  explicit TorusInvolution(const TorusAlgebra* alg) : alg_(alg) {}
  const TorusAlgebra* algebra() const { return alg_; }
  TorusElement apply(const TorusElement& x) const;
  /// Image of the basis monomial x^deg (always x^{-deg}).
  TorusElement apply_monomial(const IVec& deg, const Scalar& c) const;

private:
  const TorusAlgebra* alg_;
};

TorusInvolution pre_chevalley_torus(const TorusAlgebra& alg);

enum class AntiInvolutionKind { SigmaE, OctonionStandard, HermitianBar };

/// Degree-preserving anti-involution; acts on x^a by a sign/scalar.
class AntiInvolution {
public:
  const TorusAlgebra* algebra() const { return alg_; }
  AntiInvolutionKind kind() const { return kind_; }
  /// s(a) with sigma(x^a) = s(a) x^a.
  Scalar sign_on(const IVec& deg) const;
  TorusElement apply(const TorusElement& x) const;

private:
  friend AntiInvolution anti_involution(const TorusAlgebra& alg, AntiInvolutionKind kind,
                                        const std::vector<int>& e);
  const TorusAlgebra* alg_ = nullptr;
  AntiInvolutionKind kind_ = AntiInvolutionKind::SigmaE;
  std::vector<int> e_;
};

/// Build an anti-involution; IncompatibleKind when the family does not carry
/// the requested kind (sigma_e needs a +-1 quantum matrix, octonion_standard
/// needs the octonion family).
AntiInvolution anti_involution(const TorusAlgebra& alg, AntiInvolutionKind kind,
                               const std::vector<int>& e = {});

}  // namespace lt

#endif
