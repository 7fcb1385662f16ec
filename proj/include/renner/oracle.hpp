#pragma once

// Deliberately slow reference implementations, used only to cross-validate
// the fast paths. Callers that want independent evidence should hand these
// functions a CoxeterSystem / OrbitContext built freshly from the same data,
// so no memo cache is shared with the implementation under test.

#include <vector>

#include "renner/orbit.hpp"

namespace renner::oracle {

// Subword property: u <= v iff u arises as a subexpression of the canonical
// reduced word of v. Exhaustive subsequence search with normal-form equality.
bool bruhat_leq_subword(const CoxeterSystem& sys, const Elt& u, const Elt& v);

// Direct transcription of the order definition, middle statement (i), with
// both witnesses enumerated to witness_cap and no derived-bound shortcuts.
// Monotone in witness_cap.
bool ext_leq_exhaustive(const OrbitContext& ctx, const OrbitElt& x, const OrbitElt& y,
                        SignPair sign, int witness_cap);

struct ClosureTable {
  std::vector<OrbitElt> slice;
  std::vector<std::vector<bool>> reachable;  // reflexive-transitive closure

  int index_of(const OrbitElt& x) const;
  bool leq(int i, int j) const { return reachable[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
};

// Reflexive-transitive closure of the elementary relations among the slice
// members. On an interval-closed slice this reachability equals the extended
// Bruhat order pairwise.
ClosureTable ext_leq_closure(const OrbitContext& ctx, const std::vector<OrbitElt>& slice,
                             SignPair sign);

}  // namespace renner::oracle
