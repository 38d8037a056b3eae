#include "lietorus/roots.hpp"

#include <algorithm>

namespace lt {

RootSystem RootSystem::build(char type, int rank) {
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.label_ = std::string(1, type) + std::to_string(rank);
  std::vector<IVec>& roots = rs.roots_;
  auto unit = [&](int i) { return ivec_unit(rs.dim_, i); };
  switch (type) {
    case 'A': {
      require(rank >= 1, "UnsupportedType", "A_l needs l >= 1");
      rs.dim_ = rank + 1;
      for (int i = 0; i < rank + 1; ++i)
        for (int j = 0; j < rank + 1; ++j)
          if (i != j) roots.push_back(ivec_sub(unit(i), unit(j)));
      break;
    }
    case 'B': {
      require(rank >= 2, "UnsupportedType", "B_l needs l >= 2");
      rs.dim_ = rank;
      for (int i = 0; i < rank; ++i) {
        roots.push_back(unit(i));
        roots.push_back(ivec_neg(unit(i)));
      }
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1})
              roots.push_back(ivec_add(ivec_scaled(unit(i), si), ivec_scaled(unit(j), sj)));
      break;
    }
    case 'C': {
      require(rank >= 1, "UnsupportedType", "C_l needs l >= 1");
      rs.dim_ = rank;
      for (int i = 0; i < rank; ++i) {
        roots.push_back(ivec_scaled(unit(i), 2));
        roots.push_back(ivec_scaled(unit(i), -2));
      }
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1})
              roots.push_back(ivec_add(ivec_scaled(unit(i), si), ivec_scaled(unit(j), sj)));
      break;
    }
    case 'D': {
      require(rank >= 3, "UnsupportedType", "D_l needs l >= 3");
      rs.dim_ = rank;
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1})
              roots.push_back(ivec_add(ivec_scaled(unit(i), si), ivec_scaled(unit(j), sj)));
      break;
    }
    default:
      fail("UnsupportedType", std::string("no built-in root system of type ") + type +
                                  "; supply a structure-constant table instead");
  }
  std::sort(roots.begin(), roots.end());
  rs.short_norm_ = ivec_dot(roots[0], roots[0]);
  for (const auto& r : roots) rs.short_norm_ = std::min(rs.short_norm_, ivec_dot(r, r));
  return rs;
}

RootSystem RootSystem::custom(std::vector<IVec> roots, std::map<std::pair<IVec, IVec>, int> cartan,
                              std::string label) {
  RootSystem rs;
  rs.custom_ = true;
  rs.label_ = std::move(label);
  rs.type_ = 'X';
  rs.roots_ = std::move(roots);
  std::sort(rs.roots_.begin(), rs.roots_.end());
  rs.dim_ = rs.roots_.empty() ? 0 : static_cast<int>(rs.roots_[0].size());
  rs.rank_ = lattice_rank(rs.roots_, rs.dim_);
  rs.cartan_ = std::move(cartan);
  rs.short_norm_ = 0;
  for (const auto& r : rs.roots_) {
    auto nr = ivec_dot(r, r);
    if (rs.short_norm_ == 0 || nr < rs.short_norm_) rs.short_norm_ = nr;
  }
  return rs;
}

bool RootSystem::is_root(const IVec& a) const {
  return std::binary_search(roots_.begin(), roots_.end(), a);
}

bool RootSystem::is_short(const IVec& a) const { return ivec_dot(a, a) == short_norm_; }

bool RootSystem::is_indivisible(const IVec& a) const {
  if (ivec_is_zero(a)) return true;
  if (!is_root(a)) return false;
  for (auto x : a)
    if (x % 2 != 0) return true;
  IVec half(a.size());
  for (size_t i = 0; i < a.size(); ++i) half[i] = a[i] / 2;
  return !is_root(half);
}

int RootSystem::cartan_integer(const IVec& beta, const IVec& alpha) const {
  require(!ivec_is_zero(alpha), "ZeroRoot", "coroot of 0 undefined");
  if (ivec_is_zero(beta)) return 0;
  if (custom_) {
    auto it = cartan_.find({beta, alpha});
    require(it != cartan_.end(), "ZeroRoot", "no Cartan entry for this pair");
    return it->second;
  }
  std::int64_t num = 2 * ivec_dot(beta, alpha);
  std::int64_t den = ivec_dot(alpha, alpha);
  require(num % den == 0, "ZeroRoot", "non-integral Cartan pairing");
  return static_cast<int>(num / den);
}

}  // namespace lt
