#ifndef LIETORUS_LIE_TORUS_HPP
#define LIETORUS_LIE_TORUS_HPP

#include "lietorus/roots.hpp"

namespace lt {

/// Atom of a Lie torus basis: a (root, degree)-homogeneous basis symbol with
/// construction-specific discriminator and payload indices.
struct AtomKey {
  IVec root;  // in the construction's eps-model for Delta
  IVec deg;   // lambda
  int kind = 0;
  IVec aux;
  auto operator<=>(const AtomKey&) const = default;
};

/// Finite sparse element, canonical (zero coefficients pruned).
using LieElement = std::map<AtomKey, Scalar>;

LieElement le_add(const LieElement& a, const LieElement& b);
LieElement le_scaled(const LieElement& a, const Scalar& c);
void le_accumulate(LieElement& into, const AtomKey& k, const Scalar& c);
bool le_formally_zero(const LieElement& a);

/// A Lie torus construction: (Q x Lambda)-graded atoms, bracket, graded
/// invariant form and centroid action. All operations are pure.
class LieTorus {
public:
  virtual ~LieTorus() = default;
  virtual std::string name() const = 0;
  virtual const RootSystem& delta() const = 0;
  virtual int rank() const = 0;  // rank of Lambda

  virtual std::vector<AtomKey> atoms_at(const IVec& root, const IVec& deg) const = 0;
  virtual LieElement bracket_atoms(const AtomKey& a, const AtomKey& b) const = 0;
  virtual Scalar form_atoms(const AtomKey& a, const AtomKey& b) const = 0;

  virtual bool centroid_supported(const IVec& mu) const = 0;
  virtual LieElement centroid_apply(const IVec& mu, const AtomKey& a) const = 0;

  /// Zero test with op_equal semantics: constructions whose atoms include
  /// formal operator symbols override this to evaluate the operator part on a
  /// degree window of the given radius.
  virtual bool element_is_zero(const LieElement& x, int eq_radius) const;
  /// Exact coordinates for a batch of elements (rows), suitable for rank
  /// computations; operator-atom constructions override to evaluation coords.
  virtual ScalarMatrix coordinatize(const std::vector<LieElement>& xs, int eq_radius) const;

  virtual int cartan_integer(const IVec& beta, const IVec& alpha) const {
    return delta().cartan_integer(beta, alpha);
  }
  virtual std::string atom_desc(const AtomKey& a) const;

  /// Cartan-part basis: atoms at bigrade (0, 0).
  std::vector<AtomKey> h_atoms() const;
  /// All atoms with degree in the window (roots and 0).
  std::vector<AtomKey> atoms_in_window(const DegreeWindow& w) const;

  LieElement bracket(const LieElement& x, const LieElement& y) const;
  Scalar form(const LieElement& x, const LieElement& y) const;
  LieElement centroid(const IVec& mu, const LieElement& x) const;
};

std::string le_str(const LieTorus& t, const LieElement& x);

}  // namespace lt

#endif
