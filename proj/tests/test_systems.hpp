#pragma once

// Shared builders for the desk-scale systems the tests run on.

#include "renner/coxeter.hpp"

namespace testsys {

inline renner::CoxeterMatrix a2_matrix() {
  return renner::CoxeterMatrix::of(2, {1, 3, 3, 1});
}

inline renner::CoxeterMatrix b2_matrix() {
  return renner::CoxeterMatrix::of(2, {1, 4, 4, 1});
}

inline renner::CoxeterMatrix a3_matrix() {
  return renner::CoxeterMatrix::of(3, {1, 3, 2, 3, 1, 3, 2, 3, 1});
}

// Infinite dihedral group: m(0,1) = infinity.
inline renner::CoxeterMatrix affine_a1_matrix() {
  return renner::CoxeterMatrix::of(2, {1, 0, 0, 1});
}

// Simple deterministic generator for property-style tests.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 11;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

inline renner::Word random_word(Rng& rng, int rank, int len) {
  renner::Word w;
  w.reserve(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i) w.push_back(rng.below(rank));
  return w;
}

}  // namespace testsys
