#include <gtest/gtest.h>

#include "rgcalc/example.hpp"
#include "rgcalc/report.hpp"
#include "rgcalc/semantics.hpp"
#include "rgcalc/syntax.hpp"

using namespace rgc;

namespace {

const LawReport* item(const std::vector<LawReport>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return &r;
  return nullptr;
}

const char* kSpec =
    "rely(w' subseteq w && i' = i && nw' = nw && pw' = pw) /\\ "
    "guar(w' subseteq w && (w - w') subseteq {i}) /\\ frame {nw, pw, w}: spec(!(i in w'))";

}  // namespace

TEST(RemFromSet, EveryObligationHoldsForTwoBits) {
  auto rs = run_rem_from_set({2, 4, false});
  ASSERT_EQ(rs.size(), 10u);
  for (const auto& r : rs) {
    EXPECT_EQ(r.status, LawStatus::Pass) << r.name << ": "
                                         << (r.failures.empty() ? "" : r.failures.front().obligation);
    EXPECT_GT(r.proviso_met, 0u) << r.name;
  }
  ASSERT_NE(item(rs, "final-refinement"), nullptr);
  ASSERT_NE(item(rs, "tolerates"), nullptr);
}

TEST(RemFromSet, OneBitIsDegenerateButPasses) {
  for (const auto& r : run_rem_from_set({1, 4, false})) EXPECT_EQ(r.status, LawStatus::Pass) << r.name;
}

TEST(RemFromSet, GuaranteeThatAddsElementsBreaksOnlyTheLoopBody) {
  auto rs = run_rem_from_set({2, 3, true});
  for (const auto& r : rs) {
    if (r.name == "loop-body") {
      ASSERT_EQ(r.status, LawStatus::Fail);
      ASSERT_FALSE(r.failures.empty());
      // 3584 pairs of the closed interference escape w ⊇ w' (oracle count).
      EXPECT_NE(r.failures.front().trace.find("3584"), std::string::npos) << r.failures.front().trace;
    } else {
      EXPECT_EQ(r.status, LawStatus::Pass) << r.name;
    }
  }
}

TEST(RemFromSet, ScenarioHasTheMutantAsAControl) {
  RunReport run{"rem-from-set", 3, rem_from_set_scenario(3)};
  const LawReport* mutant = item(run.items, "rem-from-set-weak-guarantee/loop-body");
  ASSERT_NE(mutant, nullptr);
  EXPECT_TRUE(expected_to_fail(*mutant));
  EXPECT_TRUE(run_passes(run));
}

TEST(RemFromSet, BrokenProgramsAreRejected) {
  Space sp = rem_from_set_space(2);
  Command spec = parse_command(kSpec, sp);
  const std::size_t K = 4;
  EXPECT_TRUE(refines(spec,
                      parse_command("while i in w do (pw := w; nw := remove(pw, i); rely(nw' = nw && pw' = pw) /\\ "
                                    "frame {w}: atomic(true, (w = pw => w' = nw) && (w != pw => w' = w)))",
                                    sp),
                      K));
  // The body alone may leave i in w.
  EXPECT_FALSE(refines(spec,
                       parse_command("pw := w; nw := remove(pw, i); rely(nw' = nw && pw' = pw) /\\ "
                                     "frame {w}: atomic(true, (w = pw => w' = nw) && (w != pw => w' = w))",
                                     sp),
                       K));
  // A plain write of w overwrites concurrent removals.
  EXPECT_FALSE(refines(spec, parse_command("while i in w do (pw := w; w := remove(pw, i))", sp), K));
}
