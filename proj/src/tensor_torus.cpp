#include "lietorus/constructions.hpp"

namespace lt {

TensorTorus::TensorTorus(MatrixLie g, int n) : g_(std::move(g)), n_(n) {
  require(n >= 0, "InvalidWindow", "tensor rank must be >= 0");
}

std::string TensorTorus::name() const {
  return "tensor(" + g_.label() + "," + std::to_string(n_) + ")";
}

std::vector<AtomKey> TensorTorus::atoms_at(const IVec& root, const IVec& deg) const {
  std::vector<AtomKey> out;
  for (int b : g_.atoms_with_root(root)) out.push_back({root, deg, 0, {b}});
  return out;
}

LieElement TensorTorus::bracket_atoms(const AtomKey& a, const AtomKey& b) const {
  LieElement out;
  LieCoeffs c = g_.bracket_atoms(static_cast<int>(a.aux[0]), static_cast<int>(b.aux[0]));
  IVec deg = ivec_add(a.deg, b.deg);
  for (const auto& [k, x] : c)
    le_accumulate(out, {g_.atom_root(k), deg, 0, {k}}, x);
  return out;
}

Scalar TensorTorus::form_atoms(const AtomKey& a, const AtomKey& b) const {
  if (!ivec_is_zero(ivec_add(a.deg, b.deg))) return Scalar::zero();
  return g_.form_atoms(static_cast<int>(a.aux[0]), static_cast<int>(b.aux[0]));
}

LieElement TensorTorus::centroid_apply(const IVec& mu, const AtomKey& a) const {
  LieElement r;
  r.emplace(AtomKey{a.root, ivec_add(a.deg, mu), 0, a.aux}, Scalar::one());
  return r;
}

std::string TensorTorus::atom_desc(const AtomKey& a) const {
  return "g[" + std::to_string(a.aux[0]) + "]@x^" + ivec_str(a.deg);
}

}  // namespace lt
