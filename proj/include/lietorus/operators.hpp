#ifndef LIETORUS_OPERATORS_HPP
#define LIETORUS_OPERATORS_HPP

#include "lietorus/torus.hpp"

namespace lt {

enum class PrimKind { L, R, JInner, AltInner };

/// Primitive operator symbol with homogeneous monomial arguments (degrees).
struct PrimOp {
  PrimKind kind;
  IVec a;
  IVec b;  // unused for L/R
  auto operator<=>(const PrimOp&) const = default;
};

/// Formal linear combination of primitive operators over a coordinate torus.
/// JInner/AltInner are skew-normalized: arguments ordered lexicographically,
/// equal-degree pairs collapse to zero.
class OperatorElement {
public:
  OperatorElement() : alg_(nullptr) {}
  explicit OperatorElement(const TorusAlgebra* alg) : alg_(alg) {}

  static OperatorElement lmul(const TorusAlgebra* alg, const IVec& deg,
                              const Scalar& c = Scalar::one());
  static OperatorElement rmul(const TorusAlgebra* alg, const IVec& deg,
                              const Scalar& c = Scalar::one());
  static OperatorElement jinner(const TorusAlgebra* alg, const IVec& a, const IVec& b,
                                const Scalar& c = Scalar::one());
  static OperatorElement alt_inner(const TorusAlgebra* alg, const IVec& a, const IVec& b,
                                   const Scalar& c = Scalar::one());

  const TorusAlgebra* algebra() const { return alg_; }
  const std::map<PrimOp, Scalar>& terms() const { return t_; }
  bool formally_zero() const { return t_.empty(); }
  void add_term(const PrimOp& p, const Scalar& c);

  OperatorElement operator+(const OperatorElement& o) const;
  OperatorElement operator-(const OperatorElement& o) const;
  OperatorElement operator-() const;
  OperatorElement scaled(const Scalar& c) const;

  /// Exact evaluation on a torus element.
  TorusElement eval(const TorusElement& x) const;
  TorusElement eval_monomial(const IVec& deg) const;

  /// Commutator, rewritten in closed form back into primitive terms.
  /// IncompatibleVariety when operand kinds do not match the algebra.
  OperatorElement bracket(const OperatorElement& o) const;

  /// Window-evaluation equality (the module's equality semantics).
  bool equal_on_window(const OperatorElement& o, int radius) const;
  bool zero_on_window(int radius) const;
  /// Default equality radius: 2 * (max degree in operands) + 1.
  int default_eq_radius() const;
  /// Exact zero test for derivation elements (JInner/AltInner combinations):
  /// a derivation vanishes iff it kills the generator monomials x^{e_i}
  /// (and, for restricted supports, the radius-1 supported monomials).
  bool derivation_is_zero() const;

  std::string str() const;

private:
  const TorusAlgebra* alg_;
  std::map<PrimOp, Scalar> t_;
};

}  // namespace lt

#endif
