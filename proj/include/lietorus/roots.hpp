#ifndef LIETORUS_ROOTS_HPP
#define LIETORUS_ROOTS_HPP

#include <map>
#include <string>

#include "lietorus/lattice.hpp"

namespace lt {

/// Finite irreducible root system in the eps-coordinate model (A_l lives in
/// Z^{l+1}, B/C/D_l in Z^l). Custom systems carry an explicit root list and a
/// Cartan-integer table.
class RootSystem {
public:
  static RootSystem build(char type, int rank);
  /// Custom system from an explicit list of nonzero roots (closed under
  /// negation) with Cartan integers supplied by a pairing table keyed by
  /// (beta, alpha).
  static RootSystem custom(std::vector<IVec> roots, std::map<std::pair<IVec, IVec>, int> cartan,
                           std::string label);

  const std::string& label() const { return label_; }
  char type() const { return type_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }
  const std::vector<IVec>& nonzero_roots() const { return roots_; }
  bool is_root(const IVec& a) const;
  bool is_short(const IVec& a) const;
  /// {0} u {a : a/2 not a root}; for reduced systems this is all of Delta.
  bool is_indivisible(const IVec& a) const;
  /// <beta, alpha^vee>; ZeroRoot if alpha = 0.
  int cartan_integer(const IVec& beta, const IVec& alpha) const;

private:
  std::string label_;
  char type_ = '?';
  int rank_ = 0;
  int dim_ = 0;
  std::vector<IVec> roots_;
  std::int64_t short_norm_ = 0;
  bool custom_ = false;
  std::map<std::pair<IVec, IVec>, int> cartan_;
};

}  // namespace lt

#endif
