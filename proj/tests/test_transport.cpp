#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "renner/transport.hpp"
#include "renner/verify.hpp"
#include "test_systems.hpp"

using namespace renner;

namespace {

Elt nf(const CoxeterSystem& sys, std::initializer_list<int> w) {
  return sys.normal_form(Word(w));
}

bool has(const std::vector<ProductShape>& v, ProductShape s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("product shapes") {
  CoxeterSystem a2(testsys::a2_matrix());
  // b = identity satisfies both the box and right-drop equations
  auto shapes = product_shape(a2, nf(a2, {0, 1}), a2.identity());
  CHECK(has(shapes, ProductShape::box));
  CHECK(has(shapes, ProductShape::right_drop));
  CHECK_FALSE(has(shapes, ProductShape::left_drop));

  CHECK(product_shape(a2, nf(a2, {0}), nf(a2, {1})) == std::vector<ProductShape>{ProductShape::box});

  // l(s0 s0) = 0 satisfies the right-drop and (since l(a) = l(b)) left-drop equations
  auto ss = product_shape(a2, nf(a2, {0}), nf(a2, {0}));
  CHECK(has(ss, ProductShape::right_drop));
  CHECK(has(ss, ProductShape::left_drop));
  CHECK_FALSE(has(ss, ProductShape::box));

  // a product satisfying none of the three equations: l(01 * 12) = l(02) = 2
  CoxeterSystem a3(testsys::a3_matrix());
  auto g = product_shape(a3, nf(a3, {0, 1}), nf(a3, {1, 2}));
  CHECK(g == std::vector<ProductShape>{ProductShape::general});
}

TEST_CASE("product shape equations are exactly the reported ones") {
  CoxeterSystem b2(testsys::b2_matrix());
  auto elems = b2.enumerate(b2.all_generators(), 4);
  for (const Elt& a : elems)
    for (const Elt& b : elems) {
      auto shapes = product_shape(b2, a, b);
      int lab = b2.multiply(a, b).length();
      bool box = lab == a.length() + b.length();
      bool rdrop = lab == a.length() - b.length();
      bool ldrop = lab == -a.length() + b.length();
      CHECK(has(shapes, ProductShape::box) == box);
      CHECK(has(shapes, ProductShape::right_drop) == rdrop);
      CHECK(has(shapes, ProductShape::left_drop) == ldrop);
      CHECK(has(shapes, ProductShape::general) == (!box && !rdrop && !ldrop));
      CHECK_FALSE(shapes.empty());
    }
}

TEST_CASE("transport witnesses: examples") {
  CoxeterSystem a2(testsys::a2_matrix());
  Elt a = nf(a2, {0}), w0 = nf(a2, {0, 1, 0});

  // w = 1 gives w- = w+ = 1
  auto t0 = transport_witnesses(a2, a, w0, a2.identity());
  CHECK(t0.w_minus.is_identity());
  CHECK(t0.w_plus.is_identity());

  // a = b with l(aw) = l(a) - l(w) forces w- = w
  auto t1 = transport_witnesses(a2, a, a, nf(a2, {0}));
  CHECK(t1.w_minus == nf(a2, {0}));

  // A2: a=[0], b=[0,1,0], w=[1]; exhaustive search over {e, [1]} validates w+
  auto t2 = transport_witnesses(a2, a, w0, nf(a2, {1}));
  Elt aw = a2.multiply(a, nf(a2, {1}));
  Elt bwp = a2.multiply(w0, t2.w_plus);
  CHECK(bwp.length() == w0.length() + t2.w_plus.length());
  CHECK(a2.bruhat_leq(aw, bwp));
  bool some_valid = false;
  for (const Elt& cand : {a2.identity(), nf(a2, {1})}) {
    Elt p = a2.multiply(w0, cand);
    if (p.length() == w0.length() + cand.length() && a2.bruhat_leq(aw, p)) some_valid = true;
  }
  CHECK(some_valid);

  CHECK_THROWS_AS(transport_witnesses(a2, w0, a, nf(a2, {1})), PreconditionError);
}

TEST_CASE("transport postconditions exhaustively on small systems") {
  verify::Options opts;
  opts.group_cap = 6;
  opts.w_len_cap = 4;
  for (const auto& m : {testsys::a2_matrix(), testsys::b2_matrix()}) {
    CoxeterSystem sys(m);
    for (const auto& r : verify::transport_checks(sys, opts)) {
      INFO(r.name << ": " << r.detail);
      CHECK(r.passed);
    }
  }
  // affine A1 to length 6
  CoxeterSystem aff(testsys::affine_a1_matrix());
  opts.group_cap = 6;
  opts.w_len_cap = 6;
  for (const auto& r : verify::transport_checks(aff, opts)) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("peel_right") {
  CoxeterSystem a2(testsys::a2_matrix());
  Elt a = nf(a2, {0, 1, 0}), b = nf(a2, {0, 1}), v = nf(a2, {0});

  CHECK(peel_right(a2, b, b, a2.identity()).is_identity());

  Elt vt = peel_right(a2, a, b, v);
  CHECK(a2.bruhat_leq(vt, v));
  Elt avi = a2.multiply(a, a2.inverse(vt));
  CHECK(avi.length() == a.length() - vt.length());
  CHECK(a2.bruhat_leq(avi, b));
  // check over all candidates v~ <= v = {e, [0]} that the returned one is valid
  bool found = false;
  for (const Elt& cand : {a2.identity(), v})
    if (cand == vt) found = true;
  CHECK(found);

  CHECK_THROWS_AS(peel_right(a2, a, a2.identity(), a2.identity()), PreconditionError);
}

TEST_CASE("check_cancel") {
  CoxeterSystem a2(testsys::a2_matrix());
  Elt a = nf(a2, {0}), b = nf(a2, {1, 0}), w = nf(a2, {1});
  // box case: l(aw) = 2 = l(a) + 1, and aw = [0,1] <= bw = [1,0,1] holds
  CHECK(a2.multiply(a, w).length() == a.length() + w.length());
  CHECK(a2.bruhat_leq(a2.multiply(a, w), a2.multiply(b, w)));
  CHECK(check_cancel(a2, a, b, w, CancelCase::box));

  // w = identity: both cases degenerate to bruhat_leq(a, b)
  CHECK(check_cancel(a2, a, b, a2.identity(), CancelCase::box) == a2.bruhat_leq(a, b));
  CHECK(check_cancel(a2, a, b, a2.identity(), CancelCase::drop) == a2.bruhat_leq(a, b));

  // predicate semantics: result is bruhat_leq(a, b) regardless of aw <= bw
  CHECK(check_cancel(a2, nf(a2, {0, 1}), nf(a2, {1, 0}), a2.identity(), CancelCase::box) ==
        a2.bruhat_leq(nf(a2, {0, 1}), nf(a2, {1, 0})));

  CHECK_THROWS_AS(check_cancel(a2, a, b, w, CancelCase::drop), PreconditionError);
}

TEST_CASE("left transport agrees with right through inverses") {
  CoxeterSystem a3(testsys::a3_matrix());
  auto elems = a3.enumerate(a3.all_generators(), 4);
  for (const Elt& a : elems)
    for (const Elt& b : elems) {
      if (!a3.bruhat_leq(a, b)) continue;
      for (const Elt& w : elems) {
        if (w.length() > 3) continue;
        TransportWitnesses left = transport_witnesses_left(a3, a, b, w);
        TransportWitnesses right =
            transport_witnesses(a3, a3.inverse(a), a3.inverse(b), a3.inverse(w));
        CHECK(left.w_minus == a3.inverse(right.w_minus));
        CHECK(left.w_plus == a3.inverse(right.w_plus));
      }
    }
}
