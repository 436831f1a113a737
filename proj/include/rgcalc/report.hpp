// Run reports: which items count as passing, the aggregate verdict and the
// JSON serialization used by the command-line tools.
#pragma once

#include <string>
#include <vector>

#include "rgcalc/laws.hpp"

namespace rgc {

inline constexpr const char* kReportVersion = "1";

struct RunReport {
  /// Space digest, e.g. "x:{0,1};".
  std::string space;
  std::size_t bound = 3;
  std::vector<LawReport> items;
};

/// Negative controls are expected to fail.
bool expected_to_fail(const LawReport& item);
/// PASS for ordinary items; FAIL with at least one rendered trace for controls.
bool item_ok(const LawReport& item);
bool run_passes(const RunReport& run);

/// Schema {version, space, bound, items:[{name, status, instances,
/// proviso_met, failures:[{params, trace}]}], pass}. Wall times are left out
/// so identical runs give identical bytes.
std::string report_json(const RunReport& run);

/// One human-readable line per item plus indented failures.
std::string report_text(const RunReport& run);

}  // namespace rgc
