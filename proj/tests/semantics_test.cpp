#include <gtest/gtest.h>

#include "rgcalc/laws.hpp"
#include "rgcalc/semantics.hpp"
#include "rgcalc/syntax.hpp"

using namespace rgc;

namespace {

Space two() { return parse_space("var x : {0, 1}"); }

Behavior beh(State init, std::vector<Step> steps, Status st) { return {init, std::move(steps), st}; }

}  // namespace

TEST(Saturate, SeedsAndIncompletePrefixesAreAdded) {
  Space sp = two();
  BehaviorSet s = saturate(sp, 2, {beh(0, {{Label::Pgm, 1}}, Status::Term)});
  EXPECT_TRUE(s.contains(beh(0, {{Label::Pgm, 1}}, Status::Term)));
  EXPECT_TRUE(s.contains(beh(0, {{Label::Pgm, 1}}, Status::Inc)));
  EXPECT_TRUE(s.contains(beh(0, {}, Status::Inc)));
  // Every initial state has its empty incomplete behavior.
  EXPECT_TRUE(s.contains(beh(1, {}, Status::Inc)));
  EXPECT_FALSE(s.contains(beh(1, {}, Status::Term)));
  EXPECT_EQ(s.count(), 4u);
  EXPECT_EQ(saturate(sp, 2, {}).count(), 2u);
}

TEST(Saturate, AbortCoversEveryContinuation) {
  Space sp = two();
  BehaviorSet s = saturate(sp, 2, {beh(0, {}, Status::Abort)});
  EXPECT_TRUE(s.contains(beh(0, {{Label::Env, 1}, {Label::Pgm, 0}}, Status::Inc)));
  EXPECT_TRUE(s.contains(beh(0, {{Label::Env, 1}}, Status::Term)));
  EXPECT_FALSE(s.contains(beh(1, {}, Status::Term)));
}

TEST(Saturate, FrontierKeepsOnlyIncompleteBehaviors) {
  Space sp = two();
  BehaviorSet s = saturate(sp, 1, {beh(0, {{Label::Pgm, 0}}, Status::Term)});
  EXPECT_FALSE(s.contains(beh(0, {{Label::Pgm, 0}}, Status::Term)));
  EXPECT_TRUE(s.contains(beh(0, {{Label::Pgm, 0}}, Status::Inc)));
  EXPECT_THROW(saturate(sp, 1, {beh(0, {{Label::Pgm, 0}, {Label::Pgm, 0}}, Status::Inc)}), ConfigError);
}

TEST(Saturate, IsAClosureOperator) {
  Space sp = two();
  std::mt19937_64 rng(5);
  for (int n = 0; n < 50; ++n) {
    std::vector<Behavior> raw;
    for (int b = 0; b < 3; ++b) {
      Behavior x{static_cast<State>(rng() % 2), {}, static_cast<Status>(rng() % 3)};
      std::size_t len = rng() % 3;
      for (std::size_t i = 0; i < len; ++i) x.steps.push_back({static_cast<Label>(rng() % 2), static_cast<State>(rng() % 2)});
      if (len == 3) x.status = Status::Inc;
      raw.push_back(x);
    }
    BehaviorSet s = saturate(sp, 3, raw);
    for (const Behavior& b : raw) EXPECT_TRUE(s.contains(b));
    EXPECT_EQ(saturate(sp, 3, s.members()), s);
  }
}

// par(π(x ≥ x'), ε(x ≤ x')) = π(x' = x): the program step must be matched by
// an environment step of the other side.
TEST(Denote, ParallelOfProgramAndEnvironmentSteps) {
  Space sp = parse_space("var x : {0, 1, 2}");
  Command lhs = cmd::par(cmd::pgm(parse_rel("x >= x'", sp)), cmd::env(parse_rel("x <= x'", sp)));
  EXPECT_TRUE(equivalent(lhs, cmd::pgm(parse_rel("x' = x", sp)), 3));
}

TEST(Denote, NonTerminatingLoopIsAbort) {
  Space sp = two();
  for (std::size_t K = 1; K <= 4; ++K)
    EXPECT_TRUE(equivalent(cmd::while_loop(sp, ExprNode::constant(1), cmd::nil(sp)), cmd::abort(sp), K)) << K;
}

TEST(Denote, SynchronisingWithNilIsMagicForSteps) {
  Space sp = two();
  Command step = cmd::pgm(Rel::univ(sp));
  EXPECT_TRUE(equivalent(cmd::par(step, cmd::nil(sp)), cmd::magic(sp), 3));
  EXPECT_TRUE(equivalent(cmd::conj(step, cmd::nil(sp)), cmd::magic(sp), 3));
}

TEST(Refines, Examples) {
  Space sp = two();
  LawContext ctx = LawContext::make(sp, 3);
  for (const Command& c : ctx.abort_pool) {
    EXPECT_TRUE(refines(cmd::abort(sp), c, 3));
    EXPECT_TRUE(refines(c, cmd::magic(sp), 3));
  }
  Rel r = parse_rel("x' = 1", sp);
  EXPECT_TRUE(refines(cmd::pgm(Rel::univ(sp)), cmd::pgm(r), 3));
  EXPECT_FALSE(refines(cmd::pgm(r), cmd::pgm(Rel::univ(sp)), 3));
}

TEST(Equivalent, Examples) {
  Space sp = two();
  StateSet p = parse_set("x = 0", sp), q = parse_set("x = 1", sp);
  EXPECT_TRUE(equivalent(cmd::seq(cmd::test(p), cmd::test(q)), cmd::test(p & q), 3));
  Rel g = parse_rel("x' >= x", sp);
  EXPECT_TRUE(equivalent(cmd::seq(cmd::guar(g), cmd::guar(g)), cmd::guar(g), 3));
  LawContext ctx = LawContext::make(sp, 2);
  for (const Command& c : ctx.abort_pool) EXPECT_TRUE(equivalent(c, c, 2));
}

TEST(Counterexample, MinimalWitness) {
  Space sp = two();
  Command c = cmd::pgm(parse_rel("x' = 1", sp));
  EXPECT_FALSE(find_counterexample(cmd::abort(sp), c, 3).has_value());
  auto cex = find_counterexample(c, cmd::pgm(Rel::univ(sp)), 3);
  ASSERT_TRUE(cex.has_value());
  EXPECT_EQ(render(cex->behavior, *sp), "(x=0) --π--> (x=0) [TERM]");
  EXPECT_FALSE(cex->frontier);
  auto inc = find_counterexample(cmd::nil(sp), cmd::pgm(Rel::univ(sp)), 1);
  ASSERT_TRUE(inc.has_value());
  EXPECT_TRUE(inc->frontier);
  EXPECT_EQ(render(inc->behavior, *sp), "(x=0) --π--> (x=0) [INC]");
}

TEST(Counterexample, MatchesRefinement) {
  Space sp = two();
  LawContext ctx = LawContext::make(sp, 2);
  std::mt19937_64 rng(3);
  for (int n = 0; n < 100; ++n) {
    Command c = random_command(ctx, rng, 2, true), d = random_command(ctx, rng, 2, true);
    auto cex = find_counterexample(c, d, 2);
    EXPECT_EQ(cex.has_value(), !refines(c, d, 2));
    if (cex) {
      EXPECT_TRUE(denote(d, 2).contains(cex->behavior));
      EXPECT_FALSE(denote(c, 2).contains(cex->behavior));
    }
  }
}

class RandomCommands : public ::testing::Test {
 protected:
  Space sp = two();
  LawContext ctx = LawContext::make(sp, 3);
  std::vector<Command> sample(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Command> out(ctx.abort_pool.begin(), ctx.abort_pool.end());
    while (out.size() < n) out.push_back(random_command(ctx, rng, 3, true));
    return out;
  }
};

TEST_F(RandomCommands, SkipAndChaosAreUnits) {
  for (const Command& c : sample(120, 21)) {
    EXPECT_TRUE(equivalent(cmd::par(c, cmd::skip(sp)), c, 3)) << render(c);
    EXPECT_TRUE(equivalent(cmd::conj(c, cmd::chaos(sp)), c, 3)) << render(c);
  }
}

TEST_F(RandomCommands, AbortAnnihilatesSynchronisation) {
  for (const Command& c : sample(80, 22)) {
    EXPECT_TRUE(equivalent(cmd::par(c, cmd::abort(sp)), cmd::abort(sp), 3)) << render(c);
    EXPECT_TRUE(equivalent(cmd::conj(c, cmd::abort(sp)), cmd::abort(sp), 3)) << render(c);
  }
}

TEST_F(RandomCommands, BoundsAreConsistent) {
  auto cs = sample(60, 23);
  for (const Command& c : cs) {
    BehaviorSet big = denote(c, 4);
    for (std::size_t K = 1; K <= 3; ++K) EXPECT_EQ(restrict_to_bound(big, K), denote(c, K)) << render(c);
  }
  // Refinement at a larger bound implies refinement at every smaller one.
  for (std::size_t a = 0; a + 1 < cs.size(); a += 2)
    if (refines(cs[a], cs[a + 1], 3)) {
      EXPECT_TRUE(refines(cs[a], cs[a + 1], 2));
      EXPECT_TRUE(refines(cs[a], cs[a + 1], 1));
    }
}

TEST_F(RandomCommands, UnionAndMeetAreLatticeOperations) {
  auto cs = sample(40, 24);
  for (std::size_t a = 0; a + 1 < cs.size(); ++a) {
    BehaviorSet x = denote(cs[a], 3), y = denote(cs[a + 1], 3);
    EXPECT_EQ(unite(x, y), denote(cmd::choice(cs[a], cs[a + 1]), 3));
    EXPECT_TRUE(meet(x, y).subset_of(x));
    EXPECT_TRUE(meet(x, y).subset_of(y));
    EXPECT_TRUE(x.subset_of(unite(x, y)));
  }
}
