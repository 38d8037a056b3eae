#ifndef LIETORUS_LATTICE_HPP
#define LIETORUS_LATTICE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "lietorus/linalg.hpp"
#include "lietorus/scalar.hpp"

namespace lt {

IVec ivec_add(const IVec& a, const IVec& b);
IVec ivec_sub(const IVec& a, const IVec& b);
IVec ivec_neg(const IVec& a);
IVec ivec_scaled(const IVec& a, std::int64_t k);
bool ivec_is_zero(const IVec& a);
std::int64_t ivec_dot(const IVec& a, const IVec& b);
std::string ivec_str(const IVec& a);
IVec ivec_zero(int n);
/// Standard basis vector e_i (0-based) in Z^n.
IVec ivec_unit(int n, int i);

/// Box window [-R, R]^n (optionally per-axis radii), enumerated in
/// lexicographic order.
class DegreeWindow {
public:
  explicit DegreeWindow(int radius) : radius_(radius) {
    require(radius >= 0, "InvalidWindow", "radius must be >= 0");
  }
  DegreeWindow(int radius, std::vector<int> per_axis)
      : radius_(radius), per_axis_(std::move(per_axis)) {}

  int radius() const { return radius_; }
  int axis_radius(int i) const {
    return per_axis_.empty() ? radius_ : per_axis_[static_cast<size_t>(i)];
  }
  bool contains(const IVec& v) const;
  std::vector<IVec> enumerate(int n) const;

private:
  int radius_;
  std::vector<int> per_axis_;
};

/// Z-linear map Lambda -> K given by its values on the standard basis.
class GroupHom {
public:
  GroupHom() = default;
  explicit GroupHom(std::vector<Scalar> values) : v_(std::move(values)) {}
  int rank() const { return static_cast<int>(v_.size()); }
  const std::vector<Scalar>& values() const { return v_; }
  Scalar eval(const IVec& lambda) const;
  GroupHom operator-() const;
  GroupHom operator+(const GroupHom& o) const;
  GroupHom scaled(const Scalar& c) const;
  bool operator==(const GroupHom& o) const { return v_ == o.v_; }

private:
  std::vector<Scalar> v_;
};

/// Semilattice data: coset representatives I of {s + 2*Lambda_m} \ {2*Lambda_m}.
class Semilattice {
public:
  Semilattice() : m_(0) {}
  Semilattice(int m, std::vector<IVec> reps);
  int m() const { return m_; }
  const std::vector<IVec>& reps() const { return reps_; }
  /// alpha in 2*Lambda_m or congruent to a representative mod 2*Lambda_m.
  bool contains(const IVec& alpha) const;
  /// Representative class of alpha: -1 for the zero coset, index into reps()
  /// otherwise, -2 when alpha is not in the semilattice.
  int coset_of(const IVec& alpha) const;

private:
  int m_;
  std::vector<IVec> reps_;
};

}  // namespace lt

#endif
