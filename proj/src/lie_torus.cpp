#include "lietorus/lie_torus.hpp"

#include <sstream>

namespace lt {

LieElement le_add(const LieElement& a, const LieElement& b) {
  LieElement r = a;
  for (const auto& [k, c] : b) le_accumulate(r, k, c);
  return r;
}

LieElement le_scaled(const LieElement& a, const Scalar& c) {
  LieElement r;
  if (c.is_zero()) return r;
  for (const auto& [k, x] : a) {
    Scalar y = x * c;
    if (!y.is_zero()) r.emplace(k, y);
  }
  return r;
}

void le_accumulate(LieElement& into, const AtomKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = into.find(k);
  if (it == into.end())
    into.emplace(k, c);
  else {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

bool le_formally_zero(const LieElement& a) { return a.empty(); }

bool LieTorus::element_is_zero(const LieElement& x, int) const { return x.empty(); }

ScalarMatrix LieTorus::coordinatize(const std::vector<LieElement>& xs, int) const {
  std::vector<AtomKey> keys;
  for (const auto& x : xs)
    for (const auto& [k, c] : x) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  ScalarMatrix m(static_cast<int>(xs.size()), static_cast<int>(keys.size()));
  for (size_t i = 0; i < xs.size(); ++i)
    for (const auto& [k, c] : xs[i]) {
      auto it = std::lower_bound(keys.begin(), keys.end(), k);
      m.at(static_cast<int>(i), static_cast<int>(it - keys.begin())) = c;
    }
  return m;
}

std::string LieTorus::atom_desc(const AtomKey& a) const {
  std::ostringstream os;
  os << "kind" << a.kind << ":root" << ivec_str(a.root) << ":deg" << ivec_str(a.deg) << ":aux"
     << ivec_str(a.aux);
  return os.str();
}

std::vector<AtomKey> LieTorus::h_atoms() const {
  return atoms_at(ivec_zero(delta().dim()), ivec_zero(rank()));
}

std::vector<AtomKey> LieTorus::atoms_in_window(const DegreeWindow& w) const {
  std::vector<AtomKey> out;
  std::vector<IVec> roots = delta().nonzero_roots();
  roots.push_back(ivec_zero(delta().dim()));
  std::sort(roots.begin(), roots.end());
  for (const auto& root : roots)
    for (const auto& deg : w.enumerate(rank()))
      for (const auto& a : atoms_at(root, deg)) out.push_back(a);
  return out;
}

LieElement LieTorus::bracket(const LieElement& x, const LieElement& y) const {
  LieElement r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      LieElement part = bracket_atoms(a, b);
      for (const auto& [k, c] : part) le_accumulate(r, k, c * ca * cb);
    }
  return r;
}

Scalar LieTorus::form(const LieElement& x, const LieElement& y) const {
  Scalar s = Scalar::zero();
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      // graded form: only opposite bigrades pair
      if (!(ivec_add(a.root, b.root) == ivec_zero(delta().dim()))) continue;
      if (!(ivec_add(a.deg, b.deg) == ivec_zero(rank()))) continue;
      s += form_atoms(a, b) * ca * cb;
    }
  return s;
}

LieElement LieTorus::centroid(const IVec& mu, const LieElement& x) const {
  LieElement r;
  for (const auto& [a, ca] : x) {
    LieElement part = centroid_apply(mu, a);
    for (const auto& [k, c] : part) le_accumulate(r, k, c * ca);
  }
  return r;
}

std::string le_str(const LieTorus& t, const LieElement& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : x) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*[" << t.atom_desc(k) << "]";
    first = false;
  }
  return os.str();
}

}  // namespace lt
