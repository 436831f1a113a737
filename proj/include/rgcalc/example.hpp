// The rem-from-set running example: removing element i from a word w under
// interference that may only remove elements, implemented with a CAS loop.
// Every proof obligation of the refinement chain is decided by enumeration
// and the final program is checked against the top-level spec command at the bound.
#pragma once

#include <cstddef>

#include "rgcalc/laws.hpp"

namespace rgc {

struct ExampleOptions {
  /// Word size N; w, pw and nw range over subsets of {0..N-1}.
  int bits = 2;
  std::size_t bound = 4;
  /// Drops w ⊇ w' from the guarantee, which must break the loop-body step.
  bool weaken_guarantee = false;
};

/// Variables w, pw, nw : 0..2^N-1 and i : 0..N-1.
Space rem_from_set_space(int bits);

/// One report per refinement step of the chain plus the end-to-end check
/// "final-refinement". Each report's instances count the decided parts.
std::vector<LawReport> run_rem_from_set(const ExampleOptions& opts = {});

/// The full scenario at one bound: every step at N=2 ("rem-from-set/..."),
/// at N=1 ("rem-from-set-n1/...") and the weakened-guarantee loop-body step
/// as a negative control that must fail.
std::vector<LawReport> rem_from_set_scenario(std::size_t bound);

}  // namespace rgc
