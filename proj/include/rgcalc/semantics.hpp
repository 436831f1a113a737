// Bounded Aczel-trace semantics. A behavior set is stored as one hash-consed
// trie per initial state; every trie node implicitly contains the incomplete
// (INC) behavior ending there, a TERM flag marks termination and the ABORT
// node stands for every continuation up to the bound. Nodes at depth K hold
// only the INC behavior.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rgcalc/command.hpp"
#include "rgcalc/relspace.hpp"

namespace rgc {

enum class Label : std::uint8_t { Pgm = 0, Env = 1 };
/// Declared in the order used for minimal counterexamples.
enum class Status : std::uint8_t { Term = 0, Abort = 1, Inc = 2 };

const char* label_name(Label l);
const char* status_name(Status s);

struct Step {
  Label label = Label::Pgm;
  State post = 0;
  friend auto operator<=>(const Step&, const Step&) = default;
};

struct Behavior {
  State initial = 0;
  std::vector<Step> steps;
  Status status = Status::Inc;
  friend bool operator==(const Behavior&, const Behavior&) = default;
};

/// Shortest first, then lexicographic on (initial, steps, status).
bool behavior_less(const Behavior& a, const Behavior& b);
/// "(x=0) --π--> (x=1) [TERM]".
std::string render(const Behavior& b, const StateSpace& space);

using NodeId = std::uint32_t;
class Engine;

class BehaviorSet {
 public:
  BehaviorSet() = default;
  BehaviorSet(std::shared_ptr<Engine> eng, std::vector<NodeId> roots);

  const Space& space() const;
  std::size_t bound() const;
  const std::vector<NodeId>& roots() const { return roots_; }
  const std::shared_ptr<Engine>& engine() const { return eng_; }

  bool contains(const Behavior& b) const;
  /// Every member behavior; intended for small spaces and bounds.
  std::vector<Behavior> members() const;
  std::size_t count() const;
  bool subset_of(const BehaviorSet& o) const;

  friend bool operator==(const BehaviorSet& a, const BehaviorSet& b);

 private:
  std::shared_ptr<Engine> eng_;
  std::vector<NodeId> roots_;
};

using FixEnv = std::map<std::string, BehaviorSet>;

/// Least saturated set at bound K containing the given behaviors. Statuses
/// other than INC at exactly K steps are dropped (the frontier holds only
/// incomplete behaviors). Throws ConfigError for behaviors longer than K.
BehaviorSet saturate(const Space& space, std::size_t K, const std::vector<Behavior>& raw);

BehaviorSet denote(const Command& c, std::size_t K, const FixEnv& rho = {});
/// denote(c) ⊇ denote(d).
bool refines(const Command& c, const Command& d, std::size_t K);
bool equivalent(const Command& c, const Command& d, std::size_t K);

struct Counterexample {
  Behavior behavior;
  /// Witness has exactly K steps.
  bool frontier = false;
};

/// Minimal behavior of d that is not a behavior of c.
std::optional<Counterexample> find_counterexample(const BehaviorSet& c, const BehaviorSet& d);
std::optional<Counterexample> find_counterexample(const Command& c, const Command& d, std::size_t K);

/// Same set viewed at a smaller bound.
BehaviorSet restrict_to_bound(const BehaviorSet& s, std::size_t K);

BehaviorSet unite(const BehaviorSet& a, const BehaviorSet& b);
/// Lattice meet: saturated sets are closed under intersection.
BehaviorSet meet(const BehaviorSet& a, const BehaviorSet& b);

struct EngineStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t memo_entries = 0;
};
EngineStats engine_stats(const Space& space, std::size_t K);
/// Drops all cached engines of the calling thread.
void reset_engines();

}  // namespace rgc
