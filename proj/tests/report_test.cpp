#include <gtest/gtest.h>

#include <algorithm>

#include "json.hpp"

#include "rgcalc/laws.hpp"
#include "rgcalc/report.hpp"
#include "rgcalc/syntax.hpp"

using namespace rgc;

namespace {

LawReport passing() {
  LawReport r;
  r.name = "guar-merge";
  r.group = "guarantees";
  r.status = LawStatus::Pass;
  r.instances = r.proviso_met = 256;
  return r;
}

LawReport control(bool with_trace) {
  LawReport r;
  r.name = "guar-opt-without-reflexivity";
  r.group = "negative-control";
  r.status = LawStatus::Fail;
  r.instances = 256;
  r.proviso_met = 256;
  r.failure_count = 1;
  Failure f;
  f.params = {{"g", "false"}};
  f.obligation = "merge";
  f.trace = with_trace ? "(x=0) [TERM]" : "";
  r.failures.push_back(f);
  return r;
}

}  // namespace

TEST(ItemOk, PassingLawsAndFailingControls) {
  EXPECT_TRUE(item_ok(passing()));
  EXPECT_TRUE(item_ok(control(true)));
  EXPECT_FALSE(item_ok(control(false)));
  LawReport vacuous = passing();
  vacuous.status = LawStatus::Vacuous;
  EXPECT_FALSE(item_ok(vacuous));
  LawReport passing_control = control(true);
  passing_control.status = LawStatus::Pass;
  passing_control.failures.clear();
  EXPECT_FALSE(item_ok(passing_control));
}

TEST(RunPasses, Aggregates) {
  EXPECT_TRUE(run_passes({"x:{0,1};", 3, {passing(), control(true)}}));
  LawReport bad = passing();
  bad.status = LawStatus::Fail;
  EXPECT_FALSE(run_passes({"x:{0,1};", 3, {passing(), bad}}));
  EXPECT_TRUE(run_passes({"x:{0,1};", 3, {}}));
}

TEST(ReportJson, HasTheDocumentedShape) {
  RunReport run{"x:{0,1};", 3, {passing(), control(true)}};
  auto j = nlohmann::json::parse(report_json(run));
  EXPECT_EQ(j["version"], kReportVersion);
  EXPECT_EQ(j["space"], "x:{0,1};");
  EXPECT_EQ(j["bound"], 3);
  EXPECT_EQ(j["pass"], true);
  ASSERT_EQ(j["items"].size(), 2u);
  const auto& c = j["items"][1];
  EXPECT_EQ(c["status"], "FAIL");
  EXPECT_EQ(c["instances"], 256);
  EXPECT_EQ(c["proviso_met"], 256);
  EXPECT_EQ(c["failures"][0]["trace"], "(x=0) [TERM]");
  EXPECT_EQ(c["failures"][0]["params"]["g"], "false");
  EXPECT_EQ(c["failures"][0]["params"]["obligation"], "merge");
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  std::sort(keys.begin(), keys.end());
  EXPECT_EQ(keys, (std::vector<std::string>{"bound", "items", "pass", "space", "version"}));
}

TEST(ReportJson, IdenticalRunsGiveIdenticalBytes) {
  LawContext ctx = LawContext::make(parse_space("var x : {0, 1}"), 3);
  auto run = [&] {
    RunReport r{ctx.space->digest(), 3, {}};
    for (const char* n : {"guar-merge", "guar-idle-without-reflexivity"}) r.items.push_back(check_law(*find_law(n), ctx));
    return report_json(r);
  };
  EXPECT_EQ(run(), run());
}

TEST(ReportText, EndsWithTheVerdict) {
  RunReport run{"x:{0,1};", 3, {passing(), control(false)}};
  std::string text = report_text(run);
  EXPECT_NE(text.find("guar-merge"), std::string::npos);
  EXPECT_NE(text.find("FAIL"), std::string::npos);
  EXPECT_EQ(text.substr(text.rfind('\n', text.size() - 2) + 1), "2 items, 1 unexpected; FAIL\n");
}
