#include "lietorus/operators.hpp"

#include <sstream>

namespace lt {

namespace {

bool jordan_kind(PrimKind k) { return k == PrimKind::L || k == PrimKind::JInner; }

}  // namespace

void OperatorElement::add_term(const PrimOp& p, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = t_.find(p);
  if (it == t_.end())
    t_.emplace(p, c);
  else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

OperatorElement OperatorElement::lmul(const TorusAlgebra* alg, const IVec& deg, const Scalar& c) {
  OperatorElement e(alg);
  e.add_term({PrimKind::L, deg, {}}, c);
  return e;
}

OperatorElement OperatorElement::rmul(const TorusAlgebra* alg, const IVec& deg, const Scalar& c) {
  OperatorElement e(alg);
  e.add_term({PrimKind::R, deg, {}}, c);
  return e;
}

OperatorElement OperatorElement::jinner(const TorusAlgebra* alg, const IVec& a, const IVec& b,
                                        const Scalar& c) {
  OperatorElement e(alg);
  if (a == b) return e;  // one-dimensional components: D_{x,x} = 0
  if (a < b)
    e.add_term({PrimKind::JInner, a, b}, c);
  else
    e.add_term({PrimKind::JInner, b, a}, -c);
  return e;
}

OperatorElement OperatorElement::alt_inner(const TorusAlgebra* alg, const IVec& a, const IVec& b,
                                           const Scalar& c) {
  OperatorElement e(alg);
  if (a == b) return e;
  if (a < b)
    e.add_term({PrimKind::AltInner, a, b}, c);
  else
    e.add_term({PrimKind::AltInner, b, a}, -c);
  return e;
}

OperatorElement OperatorElement::operator+(const OperatorElement& o) const {
  require(!alg_ || !o.alg_ || alg_ == o.alg_, "AlgebraMismatch", "operator addition");
  OperatorElement r = *this;
  if (!r.alg_) r.alg_ = o.alg_;
  for (const auto& [p, c] : o.t_) r.add_term(p, c);
  return r;
}

OperatorElement OperatorElement::operator-() const {
  OperatorElement r(alg_);
  for (const auto& [p, c] : t_) r.t_.emplace(p, -c);
  return r;
}

OperatorElement OperatorElement::operator-(const OperatorElement& o) const {
  return *this + (-o);
}

OperatorElement OperatorElement::scaled(const Scalar& c) const {
  OperatorElement r(alg_);
  if (c.is_zero()) return r;
  for (const auto& [p, x] : t_) {
    Scalar y = x * c;
    if (!y.is_zero()) r.t_.emplace(p, y);
  }
  return r;
}

TorusElement OperatorElement::eval(const TorusElement& x) const {
  require(x.algebra() == alg_, "AlgebraMismatch", "operator evaluation");
  TorusElement out(alg_);
  for (const auto& [p, c] : t_) {
    TorusElement xa = TorusElement::monomial(alg_, p.a);
    TorusElement part(alg_);
    switch (p.kind) {
      case PrimKind::L:
        part = mul(xa, x);
        break;
      case PrimKind::R:
        part = mul(x, xa);
        break;
      case PrimKind::JInner: {
        TorusElement xb = TorusElement::monomial(alg_, p.b);
        part = mul(xa, mul(xb, x)) - mul(xb, mul(xa, x));
        break;
      }
      case PrimKind::AltInner: {
        TorusElement xb = TorusElement::monomial(alg_, p.b);
        part = mul(xa, mul(xb, x)) - mul(xb, mul(xa, x))   // [L_a, L_b]
               + mul(mul(x, xb), xa) - mul(mul(x, xa), xb)  // [R_a, R_b]
               + mul(xa, mul(x, xb)) - mul(mul(xa, x), xb); // [L_a, R_b]
        break;
      }
    }
    out = out + part.scaled(c);
  }
  return out;
}

TorusElement OperatorElement::eval_monomial(const IVec& deg) const {
  return eval(TorusElement::monomial(alg_, deg));
}

OperatorElement OperatorElement::bracket(const OperatorElement& o) const {
  require(alg_ == o.alg_ || !alg_ || !o.alg_, "AlgebraMismatch", "operator bracket");
  const TorusAlgebra* alg = alg_ ? alg_ : o.alg_;
  OperatorElement out(alg);
  for (const auto& [p, cp] : t_)
    for (const auto& [q, cq] : o.t_) {
      Scalar c = cp * cq;
      bool pj = jordan_kind(p.kind), qj = jordan_kind(q.kind);
      if (pj && qj) {
        require(alg->is_jordan(), "IncompatibleVariety", "L/JInner bracket needs a Jordan torus");
        if (p.kind == PrimKind::L && q.kind == PrimKind::L) {
          out = out + jinner(alg, p.a, q.a, c);
        } else if (p.kind == PrimKind::JInner && q.kind == PrimKind::L) {
          // [D, L_c] = L_{D c}
          TorusElement dc = jinner(alg, p.a, p.b).eval_monomial(q.a);
          for (const auto& [d, x] : dc.terms()) out = out + lmul(alg, d, c * x);
        } else if (p.kind == PrimKind::L && q.kind == PrimKind::JInner) {
          TorusElement dc = jinner(alg, q.a, q.b).eval_monomial(p.a);
          for (const auto& [d, x] : dc.terms()) out = out + lmul(alg, d, -c * x);
        } else {
          // [D, D'] = D'' with D'' = JInner(D c, d) + JInner(c, D d)
          OperatorElement d1 = jinner(alg, p.a, p.b);
          TorusElement dc = d1.eval_monomial(q.a), dd = d1.eval_monomial(q.b);
          for (const auto& [dg, x] : dc.terms()) out = out + jinner(alg, dg, q.b, c * x);
          for (const auto& [dg, x] : dd.terms()) out = out + jinner(alg, q.a, dg, c * x);
        }
      } else if (p.kind == PrimKind::AltInner && q.kind == PrimKind::AltInner) {
        require(alg->is_alternative(), "IncompatibleVariety",
                "AltInner bracket needs an alternative torus");
        OperatorElement d1 = alt_inner(alg, p.a, p.b);
        TorusElement dc = d1.eval_monomial(q.a), dd = d1.eval_monomial(q.b);
        for (const auto& [dg, x] : dc.terms()) out = out + alt_inner(alg, dg, q.b, c * x);
        for (const auto& [dg, x] : dd.terms()) out = out + alt_inner(alg, q.a, dg, c * x);
      } else {
        fail("IncompatibleVariety", "mixed operator kinds in bracket");
      }
    }
  return out;
}

int OperatorElement::default_eq_radius() const {
  std::int64_t m = 0;
  for (const auto& [p, c] : t_) {
    for (auto x : p.a) m = std::max(m, x < 0 ? -x : x);
    for (auto x : p.b) m = std::max(m, x < 0 ? -x : x);
  }
  return static_cast<int>(2 * m + 1);
}

bool OperatorElement::zero_on_window(int radius) const {
  if (t_.empty()) return true;
  for (const auto& deg : DegreeWindow(radius).enumerate(alg_->rank())) {
    if (!alg_->supports(deg)) continue;
    if (!eval_monomial(deg).is_zero()) return false;
  }
  return true;
}

bool OperatorElement::equal_on_window(const OperatorElement& o, int radius) const {
  return (*this - o).zero_on_window(radius);
}

bool OperatorElement::derivation_is_zero() const {
  if (t_.empty()) return true;
  for (const auto& [p, c] : t_)
    require(p.kind == PrimKind::JInner || p.kind == PrimKind::AltInner, "InternalError",
            "derivation zero test on a non-derivation term");
  // A derivation vanishes iff it kills a generating set of the algebra.
  for (const auto& deg : alg_->generating_degrees())
    if (!eval_monomial(deg).is_zero()) return false;
  return true;
}

std::string OperatorElement::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : t_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*";
    switch (p.kind) {
      case PrimKind::L: os << "L" << ivec_str(p.a); break;
      case PrimKind::R: os << "R" << ivec_str(p.a); break;
      case PrimKind::JInner: os << "JI" << ivec_str(p.a) << ivec_str(p.b); break;
      case PrimKind::AltInner: os << "D" << ivec_str(p.a) << ivec_str(p.b); break;
    }
    first = false;
  }
  return os.str();
}

}  // namespace lt
