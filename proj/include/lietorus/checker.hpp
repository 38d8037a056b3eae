#ifndef LIETORUS_CHECKER_HPP
#define LIETORUS_CHECKER_HPP

#include "lietorus/lie_torus.hpp"
#include "lietorus/report.hpp"

namespace lt {

struct CheckerConfig {
  int window = 2;
  int samples = 200;
  unsigned seed = 42;
  // Full triple sweeps are used while |atoms|^3 stays below this bound; above
  // it, a full sweep runs on a smaller core plus seeded random triples.
  long full_triple_budget = 30000;
  int eq_radius = 0;  // 0 = per-element default
};

/// LT1-LT4 + alternation + Jacobi, with per-axiom verdicts.
Report check_lie_torus(const LieTorus& t, const CheckerConfig& cfg);

/// Graded invariant form checks: symmetry, gradedness, invariance on sampled
/// triples, nondegeneracy of the component pairings.
Report check_graded_form(const LieTorus& t, const CheckerConfig& cfg);

/// Centroid checks: chi^mu is centroidal on window pairs; support closure.
Report check_centroid(const LieTorus& t, const CheckerConfig& cfg);

}  // namespace lt

#endif
