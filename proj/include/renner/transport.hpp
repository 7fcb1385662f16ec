#pragma once

// Substitutes for multiplying an inequality a <= b by w: product shape
// classification by length additivity, the transport witnesses w-, w+, and
// the peeling / cancellation corollaries built on them.

#include <vector>

#include "renner/coxeter.hpp"

namespace renner {

// Box:       l(ab) = l(a) + l(b)
// RightDrop: l(ab) = l(a) - l(b)
// LeftDrop:  l(ab) = -l(a) + l(b)
// General:   none of the three equations holds
enum class ProductShape { box, right_drop, left_drop, general };

// All tags whose defining length equation holds for ab; {general} when none
// does. Tags coincide only when the lengths force it (b = 1 gives box and
// right_drop at once).
std::vector<ProductShape> product_shape(const CoxeterSystem& sys, const Elt& a, const Elt& b);

const char* shape_name(ProductShape s);

struct TransportWitnesses {
  Elt w_minus;  // w- <= w,  l(a w-) = l(a) - l(w-),  a w- <= b w
  Elt w_plus;   // w+ <= w,  l(b w+) = l(b) + l(w+),  a w  <= b w+
};

// Requires a <= b (checked; throws PreconditionError).
// Deterministic: the recursion scans the canonical reduced word of w left to
// right. When l(aw) = l(a) - l(w) the construction yields w- = w, and when
// l(bw) = l(b) + l(w) it yields w+ = w.
TransportWitnesses transport_witnesses(const CoxeterSystem& sys, const Elt& a,
                                       const Elt& b, const Elt& w);

// Left-multiplication counterpart, a thin wrapper through the inverse map:
// w- <= w, l(w- a) = l(a) - l(w-), w- a <= w b;  w+ <= w, l(w+ b) = l(b) + l(w+),
// w a <= w+ b.
TransportWitnesses transport_witnesses_left(const CoxeterSystem& sys, const Elt& a,
                                            const Elt& b, const Elt& w);

// Requires a <= b v (checked). Returns v~ <= v with l(a v~^-1) = l(a) - l(v~)
// and a v~^-1 <= b. When additionally l(bv) = l(b) - l(v), even a v^-1 <= b
// holds (a fact about the inputs, not about the returned witness).
Elt peel_right(const CoxeterSystem& sys, const Elt& a, const Elt& b, const Elt& v);

enum class CancelCase { drop, box };

// Verification predicate for the cancellation rule. The drop case requires
// l(bw) = l(b) - l(w) and the box case l(aw) = l(a) + l(w) (checked). Returns
// bruhat_leq(a, b); on inputs where additionally aw <= bw holds, the rule
// promises the result is true.
bool check_cancel(const CoxeterSystem& sys, const Elt& a, const Elt& b, const Elt& w,
                  CancelCase side_case);

}  // namespace renner
