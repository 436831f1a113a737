#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rgcalc/example.hpp"
#include "rgcalc/relspace.hpp"
#include "rgcalc/syntax.hpp"

using namespace rgc;

namespace {

Space two() { return parse_space("var x : {0, 1}"); }
Space xy() { return parse_space("var x : {0, 1}\nvar y : {0, 1}"); }

/// All 16 relations of the 2-state space.
std::vector<Rel> all_rels(const Space& sp) {
  std::vector<Rel> out;
  for (unsigned bits = 0; bits < 16; ++bits) {
    Rel r(sp);
    for (unsigned k = 0; k < 4; ++k)
      if (bits >> k & 1) r.insert(k / 2, k % 2);
    out.push_back(r);
  }
  return out;
}

std::vector<StateSet> all_sets(const Space& sp) {
  std::vector<StateSet> out;
  for (unsigned bits = 0; bits < 4; ++bits) {
    StateSet p(sp);
    for (unsigned s = 0; s < 2; ++s)
      if (bits >> s & 1) p.insert(s);
    out.push_back(p);
  }
  return out;
}

Rel pair(const Space& sp, State a, State b) {
  Rel r(sp);
  r.insert(a, b);
  return r;
}

}  // namespace

TEST(Space, EnumeratesInLexicographicOrder) {
  Space sp = two();
  auto states = enumerate_states(*sp);
  ASSERT_EQ(states.size(), 2u);
  EXPECT_EQ(sp->render(states[0]), "(x=0)");
  EXPECT_EQ(sp->render(states[1]), "(x=1)");
  EXPECT_EQ(enumerate_states(*xy()).size(), 4u);
}

TEST(Space, RejectsEmptyDomainAndOversizedSpaces) {
  EXPECT_THROW(StateSpace::make({{"x", {}}}), ConfigError);
  EXPECT_THROW(parse_space("var x : 0..99\nvar y : 0..99"), ConfigError);
  EXPECT_NO_THROW(parse_space("var x : 0..99\nvar y : 0..99", 10000));
}

TEST(Compose, IdentityAndSingleChain) {
  Space sp = two();
  for (const Rel& r : all_rels(sp)) EXPECT_EQ(compose(r, Rel::id(sp)), r);
  EXPECT_EQ(compose(pair(sp, 0, 1), pair(sp, 1, 0)), pair(sp, 0, 0));
}

TEST(Compose, AssociativeWithTwoSidedUnit) {
  Space sp = two();
  auto rels = all_rels(sp);
  for (const Rel& a : rels) {
    EXPECT_EQ(compose(Rel::id(sp), a), a);
    for (const Rel& b : rels)
      for (const Rel& c : rels) ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
  }
}

TEST(Rtc, Examples) {
  Space sp = two();
  EXPECT_EQ(rtc(Rel::empty(sp)), Rel::id(sp));
  EXPECT_EQ(rtc(pair(sp, 0, 1)), Rel::id(sp) | pair(sp, 0, 1));
}

TEST(Rtc, IdempotentExtensiveReflexive) {
  Space sp = two();
  for (const Rel& r : all_rels(sp)) {
    Rel t = rtc(r);
    EXPECT_EQ(rtc(t), t);
    EXPECT_TRUE(Rel::id(sp).subset_of(t));
    EXPECT_TRUE(r.subset_of(t));
    EXPECT_TRUE(t.is_transitive());
  }
}

TEST(Restrict, Examples) {
  Space sp = two();
  StateSet all = StateSet::all(sp), x0 = StateSet::singleton(sp, 0);
  for (const Rel& r : all_rels(sp)) EXPECT_EQ(restrict(all, r, all), r);
  EXPECT_EQ(restrict(x0, Rel::univ(sp), all), pair(sp, 0, 0) | pair(sp, 0, 1));
}

TEST(Image, ExamplesAndUnionDistribution) {
  Space sp = two();
  EXPECT_EQ(image(pair(sp, 0, 1), StateSet::singleton(sp, 0)), StateSet::singleton(sp, 1));
  auto sets = all_sets(sp);
  for (const Rel& r : all_rels(sp))
    for (const StateSet& p : sets) {
      EXPECT_EQ(image(Rel::id(sp), p), p);
      if (is_stable(p, r)) EXPECT_EQ(image(rtc(r), p), p);
      for (const StateSet& q : sets) EXPECT_EQ(image(r, p | q), image(r, p) | image(r, q));
    }
}

TEST(IdentityOn, Examples) {
  Space sp = xy();
  EXPECT_EQ(identity_on(sp, {0, 1}), Rel::id(sp));
  EXPECT_EQ(identity_on(sp, {}), Rel::univ(sp));
  EXPECT_EQ(identity_on(sp, {0}).count(), 8u);
}

TEST(Stability, Examples) {
  Space sp = two();
  for (const Rel& r : all_rels(sp)) EXPECT_TRUE(is_stable(StateSet::all(sp), r));
  EXPECT_FALSE(is_stable(StateSet::singleton(sp, 0), pair(sp, 0, 1)));
}

TEST(Tolerates, Examples) {
  Space sp = two();
  for (const Rel& q : all_rels(sp))
    for (const StateSet& p : all_sets(sp)) EXPECT_TRUE(tolerates(q, Rel::id(sp), p));
  EXPECT_FALSE(tolerates(Rel::id(sp), Rel::univ(sp), StateSet::all(sp)));
}

// Interference lemmas, exhaustively on two states.
TEST(Tolerates, InterferenceLemmas) {
  Space sp = two();
  auto rels = all_rels(sp);
  for (const Rel& r : rels)
    for (const Rel& q : rels)
      for (const StateSet& p : all_sets(sp)) {
        Rel star = rtc(r);
        if (is_stable(p, r) && dom_restrict(p, compose(r, q)).subset_of(q))
          EXPECT_TRUE(dom_restrict(p, compose(star, q)).subset_of(q));
        if (dom_restrict(p, compose(q, r)).subset_of(q)) EXPECT_TRUE(dom_restrict(p, compose(q, star)).subset_of(q));
        if (tolerates(q, r, p)) EXPECT_TRUE(dom_restrict(p, compose(compose(star, q), star)).subset_of(q));
      }
}

TEST(WellFounded, Examples) {
  EXPECT_TRUE(is_well_founded(ValueOrder::strict_superset(2)));
  ValueOrder reflexive;
  reflexive.gt = {{0, 0}, {1, 0}};
  EXPECT_FALSE(is_well_founded(reflexive));
  ValueOrder cycle;
  cycle.gt = {{0, 1}, {1, 0}};
  EXPECT_FALSE(is_well_founded(cycle));
}

// Word-space relations checked against the tuple oracle, with the oracle's
// counts frozen.
class WordSpace : public ::testing::Test {
 protected:
  Space sp = rem_from_set_space(2);
  std::vector<oracle::Word> os = oracle::word_states(2);

  Rel lib(const std::function<bool(const oracle::Word&, const oracle::Word&)>& f) const {
    return Rel::of(sp, [&](State a, State b) { return f(word(a), word(b)); });
  }
  oracle::Matrix mat(const std::function<bool(const oracle::Word&, const oracle::Word&)>& f) const {
    return oracle::relation<oracle::Word>(os, f);
  }
  oracle::Word word(State s) const {
    return {sp->value(s, sp->var_index("w")), sp->value(s, sp->var_index("pw")), sp->value(s, sp->var_index("nw")),
            sp->value(s, sp->var_index("i"))};
  }
};

TEST_F(WordSpace, ReadThenRemoveIsWithinTheLoopBodyPost) {
  using namespace oracle;
  auto read = [](const Word& a, const Word& b) { return sup(a.w, b.pw) && sup(b.pw, b.w); };
  auto rem = [](const Word& a, const Word& b) { return psup(a.pw, b.w) || !has(b.w, b.i); };
  auto post = [](const Word& a, const Word& b) { return psup(a.w, b.w) || !has(b.w, b.i); };
  auto o = oracle::compose(mat(read), mat(rem));
  EXPECT_EQ(oracle::count(mat(read)), 4096u);
  EXPECT_EQ(oracle::count(o), 9216u);
  EXPECT_TRUE(oracle::subset(o, mat(post)));
  Rel c = rgc::compose(lib(read), lib(rem));
  EXPECT_EQ(c.count(), 9216u);
  EXPECT_TRUE(c.subset_of(lib(post)));
}

TEST_F(WordSpace, TradedInterferenceOnlyShrinksW) {
  using namespace oracle;
  auto r = [](const Word& a, const Word& b) { return sup(a.w, b.w) && a.i == b.i; };
  auto g_frame = [](const Word& a, const Word& b) {
    return sup(a.w, b.w) && sup(1 << a.i, a.w & ~b.w) && a.pw == b.pw && a.nw == b.nw && a.i == b.i;
  };
  auto o = oracle::rtc(oracle::unite(mat(r), mat(g_frame)));
  EXPECT_EQ(oracle::count(o), 4608u);
  EXPECT_TRUE(oracle::subset(o, mat(r)));
  Rel t = rgc::rtc(lib(r) | lib(g_frame));
  EXPECT_EQ(t.count(), 4608u);
  EXPECT_TRUE(t.subset_of(lib(r)));
}

TEST_F(WordSpace, PwAboveWIsStable) {
  using namespace oracle;
  StateSet p = StateSet::of(sp, [&](State s) { return sup(word(s).pw, word(s).w); });
  EXPECT_EQ(p.count(), 72u);
  EXPECT_TRUE(is_stable(p, lib([](const Word& a, const Word& b) { return sup(a.w, b.w) && a.pw == b.pw; })));
}
