#include <doctest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "renner/coxeter.hpp"
#include "renner/oracle.hpp"
#include "test_systems.hpp"

using namespace renner;
using testsys::Rng;

namespace {

Elt nf(const CoxeterSystem& sys, std::initializer_list<int> w) {
  return sys.normal_form(Word(w));
}

}  // namespace

TEST_CASE("normal form basics") {
  CoxeterSystem a2(testsys::a2_matrix());
  CHECK(nf(a2, {0, 0}).is_identity());
  CHECK(nf(a2, {}).is_identity());
  CHECK(a2.normal_form(Word{}) == a2.identity());

  // braid-closure oracle: the reduced-word class of [1,0,1] is {010, 101};
  // the ShortLex least is 010
  auto cls = testorc::braid_closure(testsys::a2_matrix(), Word{1, 0, 1});
  CHECK(cls == std::set<Word>{{0, 1, 0}, {1, 0, 1}});
  CHECK(*cls.begin() == Word{0, 1, 0});
  CHECK(nf(a2, {1, 0, 1}).word() == Word{0, 1, 0});

  // idempotent
  Elt x = nf(a2, {1, 0, 1});
  CHECK(a2.normal_form(x.word()) == x);

  CHECK_THROWS_AS(a2.normal_form(Word{5}), std::out_of_range);
}

TEST_CASE("normal form is constant on braid classes and under padding") {
  CoxeterSystem a3(testsys::a3_matrix());
  testorc::SymGroup sym{4};
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    Word w = testsys::random_word(rng, 3, rng.below(9));
    Elt x = a3.normal_form(w);
    // the permutation model agrees on the element and its length
    auto p = sym.of_word(w);
    CHECK(p == sym.of_word(x.word()));
    CHECK(x.length() == sym.inv(p));
    // inserting a square somewhere does not change the element
    Word padded = w;
    size_t pos = w.empty() ? 0 : static_cast<size_t>(rng.below(static_cast<int>(w.size())));
    int s = rng.below(3);
    padded.insert(padded.begin() + static_cast<long>(pos), {s, s});
    CHECK(a3.normal_form(padded) == x);
    // applying a braid move to a reduced word does not change the element
    for (const Word& u : testorc::braid_closure(testsys::a3_matrix(), x.word()))
      CHECK(a3.normal_form(u) == x);
  }
}

TEST_CASE("length") {
  CoxeterSystem a2(testsys::a2_matrix());
  CoxeterSystem b2(testsys::b2_matrix());
  CHECK(a2.identity().length() == 0);
  CHECK(nf(a2, {0, 1, 0}).length() == 3);
  CHECK(nf(b2, {0, 1, 0, 1}).length() == 4);

  // dihedral-model cross-check on all of B2
  testorc::Dihedral d4{4};
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = testsys::random_word(rng, 2, rng.below(10));
    CHECK(b2.normal_form(w).length() == d4.length(d4.of_word(w)));
  }
}

TEST_CASE("l(xs) = l(x) +- 1") {
  for (const auto& m : {testsys::a2_matrix(), testsys::b2_matrix(), testsys::affine_a1_matrix()}) {
    CoxeterSystem sys(m);
    for (const Elt& x : sys.enumerate(sys.all_generators(), 5))
      for (int s = 0; s < sys.rank(); ++s) {
        int diff = sys.multiply_gen(x, s).length() - x.length();
        CHECK(std::abs(diff) == 1);
      }
  }
}

TEST_CASE("multiply and inverse") {
  CoxeterSystem a2(testsys::a2_matrix());
  Elt x = nf(a2, {0, 1});
  CHECK(a2.multiply(x, a2.identity()) == x);
  CHECK(a2.multiply(nf(a2, {0}), nf(a2, {0})).is_identity());
  CHECK(a2.multiply(x, x) == nf(a2, {1, 0}));  // brute force in Sym(3)

  CHECK(a2.inverse(a2.identity()).is_identity());
  CHECK(a2.inverse(nf(a2, {0, 1})) == nf(a2, {1, 0}));
  CHECK(a2.inverse(nf(a2, {0, 1, 0})) == nf(a2, {0, 1, 0}));

  // associativity + inverse laws against the permutation model, A3
  CoxeterSystem a3(testsys::a3_matrix());
  testorc::SymGroup sym{4};
  auto elems = a3.enumerate(a3.all_generators(), 6);
  REQUIRE(elems.size() == 24);
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const Elt& x1 = elems[static_cast<size_t>(rng.below(24))];
    const Elt& y1 = elems[static_cast<size_t>(rng.below(24))];
    const Elt& z1 = elems[static_cast<size_t>(rng.below(24))];
    CHECK(a3.multiply(a3.multiply(x1, y1), z1) == a3.multiply(x1, a3.multiply(y1, z1)));
    CHECK(a3.multiply(x1, a3.inverse(x1)).is_identity());
    CHECK(a3.inverse(a3.inverse(x1)) == x1);
    // model agreement for products
    auto px = sym.of_word(x1.word()), py = sym.of_word(y1.word());
    std::vector<int> pxy(4);
    for (int i = 0; i < 4; ++i) pxy[static_cast<size_t>(i)] = px[static_cast<size_t>(py[static_cast<size_t>(i)])];
    CHECK(sym.of_word(a3.multiply(x1, y1).word()) == pxy);
  }
}

TEST_CASE("bruhat order") {
  CoxeterSystem a2(testsys::a2_matrix());
  Elt w0 = nf(a2, {0, 1, 0});
  CHECK(a2.bruhat_leq(w0, w0));
  CHECK(a2.bruhat_leq(nf(a2, {0}), w0));
  CHECK_FALSE(a2.bruhat_leq(nf(a2, {0, 1}), nf(a2, {1, 0})));

  // agreement with the subword oracle (independent instance: fresh caches)
  for (const auto& m : {testsys::a2_matrix(), testsys::b2_matrix(), testsys::a3_matrix()}) {
    CoxeterSystem sys(m);
    CoxeterSystem fresh(m);
    auto elems = sys.enumerate(sys.all_generators(), 12);
    for (const Elt& u : elems)
      for (const Elt& v : elems) {
        bool fast = sys.bruhat_leq(u, v);
        CHECK(fast == oracle::bruhat_leq_subword(fresh, u, v));
        if (u != v && fast) CHECK(u.length() < v.length());
      }
  }
  // and with the dominance criterion on A3
  CoxeterSystem a3(testsys::a3_matrix());
  testorc::SymGroup sym{4};
  auto elems = a3.enumerate(a3.all_generators(), 6);
  for (const Elt& u : elems)
    for (const Elt& v : elems)
      CHECK(a3.bruhat_leq(u, v) == sym.bruhat_leq(sym.of_word(u.word()), sym.of_word(v.word())));
}

TEST_CASE("Z-lemma conclusions") {
  for (const auto& m : {testsys::a2_matrix(), testsys::b2_matrix(), testsys::a3_matrix(),
                        testsys::affine_a1_matrix()}) {
    CoxeterSystem sys(m);
    int cap = sys.rank() == 3 ? 6 : 5;
    auto elems = sys.enumerate(sys.all_generators(), cap);
    for (const Elt& c : elems)
      for (const Elt& d : elems) {
        if (!sys.bruhat_leq(c, d)) continue;
        for (int s = 0; s < sys.rank(); ++s) {
          Elt cs = sys.multiply_gen(c, s), ds = sys.multiply_gen(d, s);
          bool c_down = cs.length() < c.length(), d_down = ds.length() < d.length();
          if (c_down && d_down) CHECK(sys.bruhat_leq(cs, ds));       // a)
          if (!c_down && !d_down) CHECK(sys.bruhat_leq(cs, ds));     // b)
          if (!c_down && d_down) {                                   // c)
            CHECK(sys.bruhat_leq(c, ds));
            CHECK(sys.bruhat_leq(cs, d));
          }
          if (c_down) CHECK(sys.bruhat_leq(cs, ds));                 // a')
          if (!d_down) CHECK(sys.bruhat_leq(cs, ds));                // b')
          if (d_down) CHECK(sys.bruhat_leq(cs, d));                  // d)
          if (!c_down) CHECK(sys.bruhat_leq(c, ds));                 // e)
        }
      }
  }
}

TEST_CASE("Dyer's lemma: z < zt implies zs < zts") {
  for (const auto& m : {testsys::a2_matrix(), testsys::b2_matrix(), testsys::a3_matrix()}) {
    CoxeterSystem sys(m);
    auto elems = sys.enumerate(sys.all_generators(), 8);
    std::set<Elt, ShortLex> refl;
    for (const Elt& z : elems)
      for (const Reflection& t : sys.inversions(z, Side::right)) refl.insert(t.elt());
    for (const Elt& z : elems)
      for (const Elt& t : refl)
        for (int s = 0; s < sys.rank(); ++s) {
          if (t == sys.generator(s)) continue;
          Elt zt = sys.multiply(z, t);
          Elt zs = sys.multiply_gen(z, s);
          Elt zts = sys.multiply_gen(zt, s);
          if (z.length() < zt.length())
            CHECK(zs.length() < zts.length());
          else
            CHECK(zts.length() < zs.length());
        }
  }
}

TEST_CASE("descents") {
  CoxeterSystem a2(testsys::a2_matrix());
  CHECK(a2.descents(a2.identity(), Side::left).empty());
  CHECK(a2.descents(a2.identity(), Side::right).empty());
  CHECK(a2.descents(nf(a2, {0, 1}), Side::right) == GenSet::of({1}));
  CHECK(a2.descents(nf(a2, {0, 1, 0}), Side::left) == GenSet::of({0, 1}));
  CHECK(a2.descents(nf(a2, {0, 1, 0}), Side::right) == GenSet::of({0, 1}));
  for (const Elt& x : a2.enumerate(a2.all_generators(), 3))
    CHECK(a2.descents(x, Side::right).empty() == x.is_identity());
}

TEST_CASE("inversions") {
  CoxeterSystem a2(testsys::a2_matrix());
  CHECK(a2.inversions(a2.identity(), Side::left).empty());
  auto inv01 = a2.inversions(nf(a2, {0, 1}), Side::left);
  REQUIRE(inv01.size() == 2);
  CHECK(inv01[0].elt() == nf(a2, {0}));
  CHECK(inv01[1].elt() == nf(a2, {0, 1, 0}));
  auto inv0 = a2.inversions(nf(a2, {0}), Side::left);
  REQUIRE(inv0.size() == 1);
  CHECK(inv0[0].elt() == nf(a2, {0}));

  for (const auto& m : {testsys::b2_matrix(), testsys::a3_matrix()}) {
    CoxeterSystem sys(m);
    for (const Elt& x : sys.enumerate(sys.all_generators(), 6)) {
      auto left = sys.inversions(x, Side::left);
      CHECK(static_cast<int>(left.size()) == x.length());
      for (const Reflection& t : left) {
        CHECK(sys.is_reflection(t.elt()));
        int drop = x.length() - sys.multiply(t.elt(), x).length();
        CHECK(drop > 0);
        CHECK(drop % 2 == 1);
      }
      for (const Reflection& t : sys.inversions(x, Side::right))
        CHECK(sys.multiply(x, t.elt()).length() < x.length());
    }
  }
}

TEST_CASE("coset decomposition") {
  CoxeterSystem a3(testsys::a3_matrix());
  SUBCASE("examples") {
    // x in W_J
    auto [mc, xj] = a3.coset_decompose(nf(a3, {0}), GenSet::of({0}), Side::left);
    CHECK(mc.is_identity());
    CHECK(xj == nf(a3, {0}));
    // A3, x = [1,0], J = {0}
    auto [mc2, xj2] = a3.coset_decompose(nf(a3, {1, 0}), GenSet::of({0}), Side::left);
    CHECK(mc2 == nf(a3, {1}));
    CHECK(xj2 == nf(a3, {0}));
    // empty J
    auto [mc3, xj3] = a3.coset_decompose(nf(a3, {1, 0}), GenSet(), Side::left);
    CHECK(mc3 == nf(a3, {1, 0}));
    CHECK(xj3.is_identity());
  }
  SUBCASE("additivity, uniqueness, both sides") {
    std::vector<GenSet> js = {GenSet(), GenSet::of({0}), GenSet::of({1}), GenSet::of({0, 2}),
                              GenSet::of({0, 1}), GenSet::of({0, 1, 2})};
    for (const Elt& x : a3.enumerate(a3.all_generators(), 6))
      for (const GenSet& J : js) {
        auto [xJ, xj] = a3.coset_decompose(x, J, Side::left);
        CHECK(a3.multiply(xJ, xj) == x);
        CHECK(xJ.length() + xj.length() == x.length());
        CHECK(a3.in_parabolic(xj, J));
        CHECK(a3.is_min_coset_rep(xJ, J, Side::left));
        auto [yj, yJ] = a3.coset_decompose(x, J, Side::right);
        CHECK(a3.multiply(yj, yJ) == x);
        CHECK(yj.length() + yJ.length() == x.length());
        CHECK(a3.in_parabolic(yj, J));
        CHECK(a3.is_min_coset_rep(yJ, J, Side::right));
      }
  }
}

TEST_CASE("enumerate") {
  CoxeterSystem a2(testsys::a2_matrix());
  CHECK(a2.enumerate(a2.all_generators(), 0) == std::vector<Elt>{a2.identity()});
  CHECK(a2.enumerate(a2.all_generators(), 3).size() == 6);

  CoxeterSystem aff(testsys::affine_a1_matrix());
  auto elems = aff.enumerate(aff.all_generators(), 3);
  REQUIRE(elems.size() == 7);
  CHECK(elems[0].is_identity());
  CHECK(elems[1].word() == Word{0});
  CHECK(elems[2].word() == Word{1});
  CHECK(elems[3].word() == Word{0, 1});
  CHECK(elems[4].word() == Word{1, 0});
  CHECK(elems[5].word() == Word{0, 1, 0});
  CHECK(elems[6].word() == Word{1, 0, 1});
}

TEST_CASE("minimal coset representatives multiply bijectively onto W") {
  CoxeterSystem a3(testsys::a3_matrix());
  GenSet all = a3.all_generators();
  for (const GenSet& K : {GenSet(), GenSet::of({0}), GenSet::of({0, 2}), GenSet::of({1, 2})}) {
    auto reps = a3.enumerate(all, 6, EnumConstraint::min_coset_left(K));
    auto wk = a3.enumerate(K, 6);
    std::set<Elt, ShortLex> products;
    for (const Elt& r : reps)
      for (const Elt& w : wk) {
        Elt p = a3.multiply(r, w);
        CHECK(p.length() == r.length() + w.length());
        products.insert(p);
      }
    CHECK(products.size() == reps.size() * wk.size());
    CHECK(products.size() == 24);
  }
}

TEST_CASE("longest element") {
  CoxeterSystem a2(testsys::a2_matrix());
  CHECK(a2.longest_element(GenSet(), 10).is_identity());
  CHECK(a2.longest_element(a2.all_generators(), 10) == nf(a2, {0, 1, 0}));
  Elt w0 = a2.longest_element(a2.all_generators(), 10);
  CHECK(a2.multiply(w0, w0).is_identity());

  CoxeterSystem aff(testsys::affine_a1_matrix());
  try {
    aff.longest_element(aff.all_generators(), 10);
    FAIL("expected NotFiniteError");
  } catch (const NotFiniteError& e) {
    CHECK(e.cap == 10);
    CHECK(std::string(e.what()).find("10") != std::string::npos);
  }
}

TEST_CASE("deodhar cases") {
  CoxeterSystem a3(testsys::a3_matrix());
  // identity folds every s in J
  auto r = a3.deodhar_case(a3.identity(), GenSet::of({1}), 1);
  CHECK(r.kind == DeodharCase::up_folds);
  CHECK(r.folded == 1);
  // A3, w = [1], J = {0}, s = 0: up and stays minimal
  CHECK(a3.deodhar_case(nf(a3, {1}), GenSet::of({0}), 0).kind == DeodharCase::up_stays);
  // A2, w = [0], J = {1}, s = 0: down
  CoxeterSystem a2(testsys::a2_matrix());
  CHECK(a2.deodhar_case(nf(a2, {0}), GenSet::of({1}), 0).kind == DeodharCase::down);
  // precondition: w must be a minimal representative
  CHECK_THROWS_AS(a2.deodhar_case(nf(a2, {0}), GenSet::of({0}), 1), PreconditionError);
  // exactly one of the three cases holds, across a slice
  for (const GenSet& J : {GenSet::of({0}), GenSet::of({0, 2})}) {
    for (const Elt& w : a3.enumerate(a3.all_generators(), 6, EnumConstraint::min_coset_left(J)))
      for (int s = 0; s < 3; ++s) {
        auto c = a3.deodhar_case(w, J, s);
        Elt sw = a3.multiply_gen_left(s, w);
        if (c.kind == DeodharCase::down) {
          CHECK(sw.length() < w.length());
          CHECK(a3.is_min_coset_rep(sw, J, Side::left));
        } else if (c.kind == DeodharCase::up_stays) {
          CHECK(sw.length() > w.length());
          CHECK(a3.is_min_coset_rep(sw, J, Side::left));
        } else {
          CHECK(sw.length() > w.length());
          CHECK(sw == a3.multiply_gen(w, c.folded));
          CHECK(J.contains(c.folded));
        }
      }
  }
}

TEST_CASE("reflection validation") {
  CoxeterSystem a2(testsys::a2_matrix());
  Reflection t = Reflection::checked(a2, nf(a2, {0, 1, 0}));
  CHECK(t.elt() == nf(a2, {0, 1, 0}));
  CHECK_THROWS_AS(Reflection::checked(a2, nf(a2, {0, 1})), std::invalid_argument);   // even length
  CHECK_THROWS_AS(Reflection::checked(a2, a2.identity()), std::invalid_argument);
  CoxeterSystem a3(testsys::a3_matrix());
  // odd length alone is not enough: the 4-cycle s0 s1 s2 is not an involution
  CHECK(a3.multiply(nf(a3, {0, 1, 2}), nf(a3, {0, 1, 2})).length() != 0);
  CHECK_THROWS_AS(Reflection::checked(a3, nf(a3, {0, 1, 2})), std::invalid_argument);
}

TEST_CASE("matrix parsing") {
  {
    std::istringstream in("# A2\n2\n1 3\n3 1\n");
    CoxeterMatrix m = CoxeterMatrix::parse(in);
    CHECK(m.rank == 2);
    CHECK(m.at(0, 1) == 3);
  }
  {
    std::istringstream in("2\n1 3\n4 1\n");  // asymmetric
    CHECK_THROWS_AS(CoxeterMatrix::parse(in), ParseError);
  }
  {
    std::istringstream in("2\n1 3\n");  // truncated
    CHECK_THROWS_AS(CoxeterMatrix::parse(in), ParseError);
  }
  {
    std::istringstream in("3\n1 3 2\n3 1 3\n2 3 1\nN: 0 2\nC: 2\n");
    ContextFile cf = parse_context_file(in);
    CHECK(cf.matrix.rank == 3);
    CHECK(cf.has_N);
    CHECK(cf.N == std::vector<int>{0, 2});
    CHECK(cf.has_C);
    CHECK(cf.C == std::vector<int>{2});
  }
  // entries 5 and >= 7 are accepted
  CHECK_NOTHROW(CoxeterMatrix::of(2, {1, 5, 5, 1}));
  CHECK_NOTHROW(CoxeterMatrix::of(2, {1, 9, 9, 1}));

  CHECK(parse_word("e").empty());
  CHECK(parse_word("0 1 0") == Word{0, 1, 0});
  CHECK(format_word(Word{}) == "e");
  CHECK(format_word(Word{0, 2}) == "0 2");
  CHECK_THROWS_AS(parse_word("0 x"), ParseError);
}
