// Laws, lemmas and axioms as executable checks: each law declares typed
// parameters, named proviso conjuncts and conclusions; instances are drawn
// exhaustively or at random and every conclusion is decided by trace-set
// inclusion at the configured bound.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rgcalc/command.hpp"
#include "rgcalc/exprs.hpp"
#include "rgcalc/relspace.hpp"
#include "rgcalc/semantics.hpp"

namespace rgc {

enum class ParamType { Rel, Set, Cmd, AbortCmd, Atom, Expr, Value, Var, VarSet, Order, Op };

const char* param_type_name(ParamType t);

struct ParamDecl {
  std::string name;
  ParamType type;
};

/// Named order used for variant and monotonicity laws.
struct NamedOrder {
  std::string name;
  ValueOrder order;
};

/// Shared generator material for one state space and bound.
struct LawContext {
  Space space;
  std::size_t bound = 3;
  /// Full lattices when small enough to enumerate, otherwise empty.
  std::vector<Rel> rels;
  std::vector<StateSet> sets;
  /// Deterministic command pool without abort, and one that includes it.
  std::vector<Command> pool;
  std::vector<Command> abort_pool;
  /// Atomic steps π r1 ∨ ε r2.
  std::vector<Command> atoms;
  std::vector<Expr> exprs;
  std::vector<Value> values;
  std::vector<NamedOrder> orders;

  static LawContext make(const Space& space, std::size_t bound);
};

/// One parameter assignment. Operators: 0 is ∥, 1 is ⋓.
struct Instance {
  std::map<std::string, Rel> rels;
  std::map<std::string, StateSet> sets;
  std::map<std::string, Command> cmds;
  std::map<std::string, Expr> exprs;
  std::map<std::string, Value> values;
  std::map<std::string, std::string> vars;
  std::map<std::string, std::vector<std::string>> varsets;
  std::map<std::string, NamedOrder> orders;
  std::map<std::string, int> ops;

  const Rel& r(const std::string& n) const { return rels.at(n); }
  const StateSet& p(const std::string& n) const { return sets.at(n); }
  const Command& c(const std::string& n) const { return cmds.at(n); }
  const Expr& e(const std::string& n) const { return exprs.at(n); }
  Value k(const std::string& n) const { return values.at(n); }
  const std::string& x(const std::string& n) const { return vars.at(n); }
  const std::vector<std::string>& X(const std::string& n) const { return varsets.at(n); }
  const ValueOrder& ord(const std::string& n) const { return orders.at(n).order; }
  int op(const std::string& n) const { return ops.at(n); }

  /// Parameter name to concrete syntax.
  std::map<std::string, std::string> describe(const std::vector<ParamDecl>& decls) const;
};

/// Either a refinement/equivalence between commands or a relational fact
/// already decided (with a witness when it fails).
struct Obligation {
  std::string label;
  Command lhs, rhs;
  bool equals = false;
  bool relational = false;
  bool holds = true;
  std::string witness;

  static Obligation refine(std::string label, Command lhs, Command rhs) {
    return {std::move(label), std::move(lhs), std::move(rhs), false, false, true, {}};
  }
  static Obligation equal(std::string label, Command lhs, Command rhs) {
    return {std::move(label), std::move(lhs), std::move(rhs), true, false, true, {}};
  }
  static Obligation fact(std::string label, bool holds, std::string witness = {}) {
    return {std::move(label), nullptr, nullptr, false, true, holds, std::move(witness)};
  }
};

using InstancePred = std::function<bool(const Instance&, const LawContext&)>;

struct Proviso {
  std::string name;
  InstancePred holds;
};

struct LawSpec {
  std::string name;
  std::string group;
  std::string statement;
  std::vector<ParamDecl> params;
  std::vector<Proviso> provisos;
  std::function<std::vector<Obligation>(const Instance&, const LawContext&)> conclude;
  /// Optional adjustment of a freshly drawn random instance (used to steer
  /// sampling towards instances that meet the provisos).
  std::function<void(Instance&, const LawContext&, std::mt19937_64&)> steer;
  /// Set on negative controls: the proviso that was removed.
  std::string dropped;
};

enum class Verdict { Pass, Fail, ProvisoUnmet };

struct InstanceResult {
  Verdict verdict = Verdict::ProvisoUnmet;
  std::string obligation;
  std::string trace;
  bool frontier = false;
};

InstanceResult check_instance(const LawSpec& law, const Instance& inst, const LawContext& ctx);

struct Strategy {
  /// Force random sampling even when the lattice is small.
  bool force_random = false;
  std::uint64_t seed = 0xC0FFEE;
  std::size_t samples = 500;
  /// Largest lattice enumerated exhaustively.
  std::size_t exhaustive_cap = std::size_t{1} << 16;
};

struct Failure {
  std::map<std::string, std::string> params;
  std::string obligation;
  std::string trace;
  bool frontier = false;
};

enum class LawStatus { Pass, Fail, Vacuous };
const char* law_status_name(LawStatus s);

struct LawReport {
  std::string name;
  std::string group;
  LawStatus status = LawStatus::Vacuous;
  std::string strategy;  // "exhaustive" or "random"
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  std::size_t proviso_met = 0;
  std::size_t failure_count = 0;
  /// The first few failures.
  std::vector<Failure> failures;
  double wall_ms = 0;
};

/// Number of points in the parameter lattice, or nullopt when some parameter
/// has no enumerable domain in this context.
std::optional<std::size_t> lattice_size(const LawSpec& law, const LawContext& ctx);

LawReport check_law(const LawSpec& law, const LawContext& ctx, const Strategy& strategy = {});

/// Laws and lemmas of the calculus.
const std::vector<LawSpec>& law_registry();
/// Axioms of the underlying algebra.
const std::vector<LawSpec>& axiom_registry();
/// Laws with one proviso conjunct removed; each is expected to FAIL.
const std::vector<LawSpec>& negative_controls();
/// Searches laws, axioms and negative controls.
const LawSpec* find_law(const std::string& name);

/// Random generators shared by the harness, tests and tools.
Rel random_rel(const Space& space, std::mt19937_64& rng);
StateSet random_set(const Space& space, std::mt19937_64& rng);
Command random_command(const LawContext& ctx, std::mt19937_64& rng, std::size_t depth, bool with_abort);

/// Operator selected by an Op parameter.
Command sync_op(int op, const Command& c, const Command& d);

}  // namespace rgc
