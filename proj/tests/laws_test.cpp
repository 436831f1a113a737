#include <gtest/gtest.h>

#include <set>

#include "rgcalc/example.hpp"
#include "rgcalc/laws.hpp"
#include "rgcalc/report.hpp"
#include "rgcalc/syntax.hpp"

using namespace rgc;

namespace {

Space two() { return parse_space("var x : {0, 1}"); }

Strategy exhaustive() { return Strategy{}; }

}  // namespace

TEST(Registry, SizeAndUniqueNames) {
  EXPECT_GE(law_registry().size(), 55u);
  std::set<std::string> names;
  for (const auto* reg : {&law_registry(), &axiom_registry(), &negative_controls()})
    for (const LawSpec& l : *reg) {
      EXPECT_TRUE(names.insert(l.name).second) << l.name;
      EXPECT_FALSE(l.statement.empty()) << l.name;
      EXPECT_TRUE(l.conclude) << l.name;
    }
}

TEST(Registry, CoversTheNamedLaws) {
  for (const char* n :
       {"guar-strengthen", "guar-introduce", "guar-merge", "guar-seq-distrib", "guar-par-distrib", "guar-assert",
        "rely-weaken", "rely-remove", "rely-merge", "rely-guar", "seq-term-term", "par-term-term", "spec-strengthen",
        "spec-to-sequential", "spec-seq-introduce", "spec-trading", "frame-restrict", "spec-introduce-par",
        "guar-opt", "guar-idle", "rely-idle-stable", "tolerate-interference", "atomic-spec-introduce", "idle-eval",
        "rely-eval", "rely-guar-assign", "rely-assign-monotonic", "rely-conditional", "rely-loop-early",
        "rely-loop"})
    EXPECT_NE(find_law(n), nullptr) << n;
}

TEST(Registry, Lookup) {
  const LawSpec* merge = find_law("guar-merge");
  ASSERT_NE(merge, nullptr);
  EXPECT_TRUE(merge->provisos.empty());
  const LawSpec* loop = find_law("rely-loop-early");
  ASSERT_NE(loop, nullptr);
  bool has_order = false, has_variant = false;
  for (const ParamDecl& d : loop->params) {
    has_order = has_order || d.type == ParamType::Order;
    has_variant = has_variant || d.type == ParamType::Expr;
  }
  EXPECT_TRUE(has_order);
  EXPECT_TRUE(has_variant);
  EXPECT_EQ(find_law("no-such-law"), nullptr);
}

TEST(CheckInstance, Examples) {
  Space sp = two();
  LawContext ctx = LawContext::make(sp, 3);
  Instance unmet;
  unmet.rels = {{"g0", parse_rel("x' = x", sp)}, {"g1", Rel::univ(sp)}};
  EXPECT_EQ(check_instance(*find_law("guar-strengthen"), unmet, ctx).verdict, Verdict::ProvisoUnmet);

  Instance merge;
  merge.rels = {{"g1", parse_rel("x' >= x", sp)}, {"g2", parse_rel("x' <= x", sp)}};
  EXPECT_EQ(check_instance(*find_law("guar-merge"), merge, ctx).verdict, Verdict::Pass);

  // Without its stability proviso the rely-idle-stable law breaks on an
  // unstable p, and the witness contains an environment step.
  const LawSpec* control = find_law("rely-idle-stable-without-stability");
  ASSERT_NE(control, nullptr);
  Instance unstable;
  unstable.rels = {{"r", Rel::univ(sp)}};
  unstable.sets = {{"p", parse_set("x = 0", sp)}};
  InstanceResult res = check_instance(*control, unstable, ctx);
  EXPECT_EQ(res.verdict, Verdict::Fail);
  EXPECT_NE(res.trace.find("ε"), std::string::npos) << res.trace;
  EXPECT_EQ(check_instance(*find_law("rely-idle-stable"), unstable, ctx).verdict, Verdict::ProvisoUnmet);
}

TEST(CheckLaw, ExhaustiveInstanceCounts) {
  LawContext ctx = LawContext::make(two(), 3);
  for (const char* n : {"guar-merge", "spec-to-sequential"}) {
    LawReport rep = check_law(*find_law(n), ctx, exhaustive());
    EXPECT_EQ(rep.status, LawStatus::Pass) << n;
    EXPECT_EQ(rep.strategy, "exhaustive") << n;
    EXPECT_EQ(rep.instances, 256u) << n;
    EXPECT_EQ(rep.proviso_met, 256u) << n;
  }
}

TEST(CheckLaw, RelyEvalIsNonVacuous) {
  LawContext ctx = LawContext::make(two(), 3);
  LawReport rep = check_law(*find_law("rely-eval"), ctx, exhaustive());
  EXPECT_EQ(rep.status, LawStatus::Pass);
  EXPECT_GT(rep.proviso_met, 0u);
}

TEST(CheckLaw, ToleranceOfTheCasStep) {
  Space sp = rem_from_set_space(2);
  auto at = [&](State s, const char* v) { return sp->value(s, sp->var_index(v)); };
  auto sup = [](Value a, Value b) { return (a & b) == b; };
  Instance inst;
  inst.rels["r"] = Rel::of(sp, [&](State a, State b) {
    return sup(at(a, "w"), at(b, "w")) && at(a, "i") == at(b, "i") && at(a, "nw") == at(b, "nw") &&
           at(a, "pw") == at(b, "pw");
  });
  inst.rels["q"] = Rel::of(sp, [&](State a, State b) {
    Value pw = at(a, "pw"), w = at(b, "w");
    return (pw != w && sup(pw, w)) || !((w >> at(b, "i")) & 1);
  });
  inst.sets["p"] = StateSet::of(sp, [&](State s) {
    return sup(at(s, "pw"), at(s, "w")) && at(s, "nw") == (at(s, "pw") & ~(1 << at(s, "i")));
  });
  LawContext ctx = LawContext::make(sp, 3);
  EXPECT_EQ(check_instance(*find_law("tolerate-interference"), inst, ctx).verdict, Verdict::Pass);
}

TEST(NegativeControls, EveryControlFails) {
  ASSERT_GE(negative_controls().size(), 8u);
  LawContext ctx = LawContext::make(two(), 3);
  for (const LawSpec& c : negative_controls()) {
    EXPECT_EQ(c.group, "negative-control");
    EXPECT_FALSE(c.dropped.empty()) << c.name;
    LawReport rep = check_law(c, ctx, exhaustive());
    EXPECT_EQ(rep.status, LawStatus::Fail) << c.name;
    ASSERT_FALSE(rep.failures.empty()) << c.name;
    EXPECT_FALSE(rep.failures.front().trace.empty()) << c.name;
    EXPECT_TRUE(item_ok(rep)) << c.name;
  }
}

TEST(NegativeControls, GuarOptFailsForTheEmptyGuarantee) {
  Space sp = two();
  LawContext ctx = LawContext::make(sp, 3);
  const LawSpec* c = find_law("guar-opt-without-reflexivity");
  ASSERT_NE(c, nullptr);
  Instance inst;
  inst.rels = {{"g", Rel::empty(sp)}, {"q", Rel::univ(sp)}};
  EXPECT_EQ(check_instance(*c, inst, ctx).verdict, Verdict::Fail);
}

TEST(CheckLaw, DeterministicGivenSeed) {
  LawContext ctx = LawContext::make(two(), 3);
  Strategy s;
  s.force_random = true;
  s.samples = 60;
  s.seed = 42;
  for (const char* n : {"guar-seq-distrib", "rely-idle-stable-without-stability"}) {
    LawReport a = check_law(*find_law(n), ctx, s), b = check_law(*find_law(n), ctx, s);
    RunReport ra{"x", 3, {a}}, rb{"x", 3, {b}};
    EXPECT_EQ(report_json(ra), report_json(rb)) << n;
    EXPECT_EQ(a.strategy, "random");
    EXPECT_EQ(a.instances, 60u);
  }
}
