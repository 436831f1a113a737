#include "rgcalc/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace rgc {

bool expected_to_fail(const LawReport& item) { return item.group == "negative-control"; }

bool item_ok(const LawReport& item) {
  if (!expected_to_fail(item)) return item.status == LawStatus::Pass;
  if (item.status != LawStatus::Fail) return false;
  for (const auto& f : item.failures)
    if (!f.trace.empty()) return true;
  return false;
}

bool run_passes(const RunReport& run) {
  for (const auto& it : run.items)
    if (!item_ok(it)) return false;
  return true;
}

std::string report_json(const RunReport& run) {
  nlohmann::ordered_json j;
  j["version"] = kReportVersion;
  j["space"] = run.space;
  j["bound"] = run.bound;
  j["items"] = nlohmann::ordered_json::array();
  for (const auto& it : run.items) {
    nlohmann::ordered_json item;
    item["name"] = it.name;
    item["status"] = law_status_name(it.status);
    item["instances"] = it.instances;
    item["proviso_met"] = it.proviso_met;
    item["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : it.failures) {
      nlohmann::ordered_json params(nlohmann::ordered_json::value_t::object);
      for (const auto& [k, v] : f.params) params[k] = v;
      if (!params.contains("obligation")) params["obligation"] = f.obligation;
      item["failures"].push_back({{"params", params}, {"trace", f.trace}});
    }
    j["items"].push_back(std::move(item));
  }
  j["pass"] = run_passes(run);
  return j.dump(2) + "\n";
}

std::string report_text(const RunReport& run) {
  std::ostringstream os;
  std::size_t bad = 0;
  for (const auto& it : run.items) {
    bool ok = item_ok(it);
    bad += !ok;
    char line[512];
    std::snprintf(line, sizeof line, "%-4s %-7s %-48s %-10s instances=%zu met=%zu failures=%zu %.0fms%s\n",
                  ok ? "ok" : "BAD", law_status_name(it.status), it.name.c_str(), it.strategy.c_str(), it.instances,
                  it.proviso_met, it.failure_count, it.wall_ms, expected_to_fail(it) ? " (expected FAIL)" : "");
    os << line;
    for (const auto& f : it.failures) {
      os << "       obligation: " << f.obligation << "\n";
      for (const auto& [k, v] : f.params)
        if (k != "obligation") os << "         " << k << " = " << v << "\n";
      os << "       trace: " << f.trace << (f.frontier ? " (at the bound)" : "") << "\n";
    }
  }
  os << run.items.size() << " items, " << bad << " unexpected; " << (bad ? "FAIL" : "PASS") << "\n";
  return os.str();
}

}  // namespace rgc
