#include "lietorus/lattice.hpp"

#include <sstream>

namespace lt {

IVec ivec_add(const IVec& a, const IVec& b) {
  require(a.size() == b.size(), "RankMismatch", "vector addition");
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IVec ivec_sub(const IVec& a, const IVec& b) {
  require(a.size() == b.size(), "RankMismatch", "vector subtraction");
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IVec ivec_neg(const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IVec ivec_scaled(const IVec& a, std::int64_t k) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

bool ivec_is_zero(const IVec& a) {
  for (auto x : a)
    if (x != 0) return false;
  return true;
}

std::int64_t ivec_dot(const IVec& a, const IVec& b) {
  require(a.size() == b.size(), "RankMismatch", "dot product");
  std::int64_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string ivec_str(const IVec& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")";
  return os.str();
}

IVec ivec_zero(int n) { return IVec(static_cast<size_t>(n), 0); }

IVec ivec_unit(int n, int i) {
  IVec v(static_cast<size_t>(n), 0);
  v[static_cast<size_t>(i)] = 1;
  return v;
}

bool DegreeWindow::contains(const IVec& v) const {
  for (size_t i = 0; i < v.size(); ++i) {
    std::int64_t r = axis_radius(static_cast<int>(i));
    if (v[i] < -r || v[i] > r) return false;
  }
  return true;
}

std::vector<IVec> DegreeWindow::enumerate(int n) const {
  std::vector<IVec> out;
  IVec cur(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) cur[static_cast<size_t>(i)] = -axis_radius(i);
  if (n == 0) {
    out.push_back({});
    return out;
  }
  while (true) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == axis_radius(i)) {
      cur[static_cast<size_t>(i)] = -axis_radius(i);
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
  }
  return out;
}

Scalar GroupHom::eval(const IVec& lambda) const {
  require(lambda.size() == v_.size(), "RankMismatch", "hom evaluation");
  Scalar s = Scalar::zero();
  for (size_t i = 0; i < v_.size(); ++i)
    if (lambda[i] != 0) s += v_[i].scaled(Rational(static_cast<long>(lambda[i])));
  return s;
}

GroupHom GroupHom::operator-() const {
  std::vector<Scalar> w(v_.size());
  for (size_t i = 0; i < v_.size(); ++i) w[i] = -v_[i];
  return GroupHom(std::move(w));
}

GroupHom GroupHom::operator+(const GroupHom& o) const {
  require(v_.size() == o.v_.size(), "RankMismatch", "hom addition");
  std::vector<Scalar> w(v_.size());
  for (size_t i = 0; i < v_.size(); ++i) w[i] = v_[i] + o.v_[i];
  return GroupHom(std::move(w));
}

GroupHom GroupHom::scaled(const Scalar& c) const {
  std::vector<Scalar> w(v_.size());
  for (size_t i = 0; i < v_.size(); ++i) w[i] = v_[i] * c;
  return GroupHom(std::move(w));
}

Semilattice::Semilattice(int m, std::vector<IVec> reps) : m_(m), reps_(std::move(reps)) {
  for (const auto& r : reps_) {
    require(static_cast<int>(r.size()) == m_, "RankMismatch", "semilattice representative rank");
    bool zero_mod2 = true;
    for (auto x : r)
      if (x % 2 != 0) zero_mod2 = false;
    require(!zero_mod2, "BadSemilattice", "0 must not be listed as a representative");
  }
  for (size_t i = 0; i < reps_.size(); ++i)
    for (size_t j = i + 1; j < reps_.size(); ++j) {
      bool same = true;
      for (int k = 0; k < m_; ++k)
        if (((reps_[i][static_cast<size_t>(k)] - reps_[j][static_cast<size_t>(k)]) % 2 + 2) % 2 != 0)
          same = false;
      require(!same, "BadSemilattice", "representatives coincide mod 2");
    }
}

int Semilattice::coset_of(const IVec& alpha) const {
  require(static_cast<int>(alpha.size()) == m_, "RankMismatch", "semilattice membership rank");
  bool zero_mod2 = true;
  for (auto x : alpha)
    if (((x % 2) + 2) % 2 != 0) zero_mod2 = false;
  if (zero_mod2) return -1;
  for (size_t i = 0; i < reps_.size(); ++i) {
    bool same = true;
    for (int k = 0; k < m_; ++k)
      if (((alpha[static_cast<size_t>(k)] - reps_[i][static_cast<size_t>(k)]) % 2 + 2) % 2 != 0)
        same = false;
    if (same) return static_cast<int>(i);
  }
  return -2;
}

bool Semilattice::contains(const IVec& alpha) const { return coset_of(alpha) != -2; }

}  // namespace lt
