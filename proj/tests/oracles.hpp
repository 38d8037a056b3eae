#ifndef LIETORUS_TESTS_ORACLES_HPP
#define LIETORUS_TESTS_ORACLES_HPP

// Test-only oracles, kept independent of the library's closed forms.

#include <random>
#include <vector>

#include "lietorus/torus.hpp"

namespace lt::testing {

/// Normal-ordering rewrite oracle for quantum structure constants: expands
/// x^a x^b into a word of signed generators and bubble-sorts it into
/// x_1^* ... x_n^* using only the defining relations x_i x_j = q_ij x_j x_i.
inline Scalar quantum_rewrite_oracle(const std::vector<std::vector<Scalar>>& q, const IVec& a,
                                     const IVec& b) {
  struct Sym {
    int gen;
    int sign;
  };
  std::vector<Sym> word;
  auto push = [&](const IVec& v) {
    for (size_t i = 0; i < v.size(); ++i) {
      int s = v[i] >= 0 ? 1 : -1;
      for (std::int64_t k = 0; k < (v[i] >= 0 ? v[i] : -v[i]); ++k)
        word.push_back({static_cast<int>(i), s});
    }
  };
  push(a);
  push(b);
  Scalar factor = Scalar::one();
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i].gen > word[i + 1].gen) {
        // x_i^s x_j^t -> q_ij^{s t} x_j^t x_i^s  (from x_i x_j = q_ij x_j x_i)
        long e = static_cast<long>(word[i].sign) * word[i + 1].sign;
        factor *= q[static_cast<size_t>(word[i].gen)][static_cast<size_t>(word[i + 1].gen)].pow(e);
        std::swap(word[i], word[i + 1]);
        moved = true;
      }
    }
  }
  return factor;
}

/// Deterministic degree sampler for seeded property sweeps.
inline std::vector<IVec> sample_degrees(int n, int radius, int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-radius, radius);
  std::vector<IVec> out;
  for (int i = 0; i < count; ++i) {
    IVec v(static_cast<size_t>(n));
    for (auto& x : v) x = d(rng);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace lt::testing

#endif
