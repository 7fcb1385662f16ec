#pragma once

// Elementary relations of the extended Bruhat orders, cover graphs of closed
// intervals, maximal and saturated chains, translation of elementary
// relations by a generator, and the extended Z-Lemma.

#include <optional>
#include <string>
#include <vector>

#include "renner/orbit.hpp"

namespace renner::chains {

struct NotComparableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceededError : std::runtime_error {
  int needed, cap;
  CapExceededError(const std::string& what, int needed_, int cap_)
      : std::runtime_error(what), needed(needed_), cap(cap_) {}
};

// er1: a reflection shortens the a-part (direction flips with delta);
// er2: a reflection of W_{N\C} shortens the c-part (downward for all signs);
// er3: a reflection shortens the b-part (direction flips with epsilon).
enum class EdgeKind { er1, er2, er3 };
const char* kind_name(EdgeKind k);

struct ElemEdge {
  OrbitElt lo, hi;  // lo <_{epsilon delta} hi, strictly
  EdgeKind kind;
  Reflection t;  // the reflection parameterizing the relation
  SignPair sign;
};

// Elementary relations anchored at x, i.e. written with x as the normal form
// whose factor the reflection shortens. elem_down returns the ones with
// hi = x (er1 for delta = +, er2 always, er3 for epsilon = -); the remaining
// moves point upward from x and have lo = x.
std::vector<ElemEdge> elem_down(const OrbitContext& ctx, const OrbitElt& x, SignPair sign);
std::vector<ElemEdge> elem_up_anchored(const OrbitContext& ctx, const OrbitElt& x, SignPair sign);

// All edges with lo = x and hi in the slice. Complete for the slice: every
// elementary relation is anchored at one of its endpoints, so scanning the
// upward moves of x and the downward moves of the slice members finds all.
std::vector<ElemEdge> elem_up_within(const OrbitContext& ctx, const OrbitElt& x, SignPair sign,
                                     const std::vector<OrbitElt>& slice);

// Every elementary relation with both endpoints in the slice, deduplicated
// by (lo, hi, kind, t).
std::vector<ElemEdge> elem_relations_within(const OrbitContext& ctx,
                                            const std::vector<OrbitElt>& slice, SignPair sign);

// Materialized Hasse diagram of a closed interval: vertices graded by the
// extended length, edges exactly the covers, each realized by an elementary
// relation (one edge per cover pair).
struct CoverGraph {
  SignPair sign;
  std::vector<OrbitElt> vertices;  // sorted by (ext length, triple ShortLex)
  std::vector<int> grade;          // ext length per vertex
  std::vector<ElemEdge> edges;
  int index_of(const OrbitElt& v) const;  // -1 when absent
};

// The interval [x, y] in <=_{epsilon delta}. Vertex candidates come from
// componentwise bounds forced by the witness-bound lemma; the candidate caps
// never exceed `cap` or CapExceededError is thrown. Throws NotComparableError
// unless x <=_{epsilon delta} y. `jobs` parallelizes the membership filter
// without changing the result.
CoverGraph interval(const OrbitContext& ctx, const OrbitElt& x, const OrbitElt& y,
                    SignPair sign, int cap, int jobs = 1);

using Chain = std::vector<OrbitElt>;  // z0 < z1 < ... < zm, m = chain length

struct ChainList {
  std::vector<Chain> chains;
  bool truncated = false;  // hit max_count before exhausting the search
};

// All maximal chains between x and y (paths in the cover graph).
ChainList maximal_chains(const OrbitContext& ctx, const OrbitElt& x, const OrbitElt& y,
                         SignPair sign, int cap, std::size_t max_count = SIZE_MAX);

// One saturated chain from x to y, built greedily: from each z take the
// ShortLex-least z' with ext length one higher and z <= z' <= y. A missing
// step would contradict the chain-existence theorem and raises InternalError.
Chain saturated_chain(const OrbitContext& ctx, const OrbitElt& x, const OrbitElt& y,
                      SignPair sign, int cap);

// Translation of an elementary relation by a generator on the chosen side.
// Returns the translated elementary edge between s.lo, s.hi (resp. lo.s,
// hi.s), or an empty optional in the exceptional case where the generator
// collapses the relation (side-multiplied lo equals hi).
std::optional<ElemEdge> translate_edge(const OrbitContext& ctx, int s, const ElemEdge& edge,
                                       Side side);

// Extended Z-Lemma predicate. Requires sx < x and sy < y (resp. on the
// right); returns whether x<=y, sx<=y and sx<=sy carry one truth value.
bool zlemma_ext(const OrbitContext& ctx, const OrbitElt& x, const OrbitElt& y, int s,
                Side side, SignPair sign);

// DOT digraph; node labels are orbit literals, edges carry kind and t.
std::string export_dot(const OrbitContext& ctx, const CoverGraph& g);

// One line per vertex ("a|c|b TAB length"), one line per edge
// ("lo -> hi TAB kind TAB t").
std::string export_text(const OrbitContext& ctx, const CoverGraph& g);

}  // namespace renner::chains
