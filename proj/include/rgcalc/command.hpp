// The command language: primitives, operators, fixpoints and derived
// commands, with desugaring of derived commands into core terms.
#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rgcalc/exprs.hpp"
#include "rgcalc/relspace.hpp"

namespace rgc {

/// Raised for unbound fixpoint variables and malformed command terms.
struct CommandError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class CmdNode;
using Command = std::shared_ptr<const CmdNode>;

enum class Kind { Pgm, Env, Test, Abort, Nondet, Seq, Par, Conj, Fin, Om, Inf, Mu, Nu, FixVar, Derived };

enum class Tag {
  Assert, Magic, Nil, Skip, Chaos, Term, Idle, Guar, Rely, Frame,
  PSpec, Spec, Opt, Atomic, Assign, Cond, While, Eval
};

const char* tag_name(Tag t);

/// Immutable command node. Which payload fields are meaningful depends on
/// the kind (and tag for derived nodes):
///   rel   Pgm, Env, guar, rely, pspec, spec, opt, atomic
///   set   Test, assert, atomic
///   kids  operators, iterations, fixpoints, frame, cond, while
///   name  Mu/Nu/FixVar variable, assigned variable
///   vars  frame variables (indices into the space)
///   expr  assign, cond, while, eval
///   value eval
class CmdNode {
 public:
  Kind kind() const { return kind_; }
  Tag tag() const { return tag_; }
  const Space& space() const { return space_; }
  const Rel& rel() const { return rel_; }
  const StateSet& set() const { return set_; }
  const std::vector<Command>& kids() const { return kids_; }
  const Command& kid(std::size_t i) const { return kids_.at(i); }
  const std::string& name() const { return name_; }
  const std::vector<std::size_t>& vars() const { return vars_; }
  const Expr& expr() const { return expr_; }
  Value value() const { return value_; }
  const BoolEncoding& encoding() const { return enc_; }
  std::uint64_t hash() const { return hash_; }
  /// Unbound fixpoint variables, cached at construction.
  const std::set<std::string>& free_vars() const { return free_; }

  struct Parts {
    Kind kind = Kind::Abort;
    Tag tag = Tag::Magic;
    Space space;
    Rel rel;
    StateSet set;
    std::vector<Command> kids;
    std::string name;
    std::vector<std::size_t> vars;
    Expr expr;
    Value value = 0;
    BoolEncoding enc;
  };
  static Command make(Parts p);

 private:
  Kind kind_ = Kind::Abort;
  Tag tag_ = Tag::Magic;
  Space space_;
  Rel rel_;
  StateSet set_;
  std::vector<Command> kids_;
  std::string name_;
  std::vector<std::size_t> vars_;
  Expr expr_;
  Value value_ = 0;
  BoolEncoding enc_;
  std::uint64_t hash_ = 0;
  std::set<std::string> free_;
};

/// Structural equality (relations and sets compared extensionally).
bool same_cmd(const Command& a, const Command& b);
std::set<std::string> free_fixvars(const Command& c);
/// Debug rendering; the parseable concrete syntax lives in the cli module.
std::string render(const Command& c);
/// Number of nodes in the term.
std::size_t cmd_size(const Command& c);

namespace cmd {

Command pgm(const Rel& r);
Command env(const Rel& r);
Command test(const StateSet& p);
Command abort(const Space& space);
/// Finite choice; the empty choice is magic.
Command nondet(const Space& space, std::vector<Command> cs);
Command choice(const Command& c, const Command& d);
Command seq(const Command& c, const Command& d);
/// Left-nested sequence of at least one command.
Command seq(const std::vector<Command>& cs);
Command par(const Command& c, const Command& d);
Command conj(const Command& c, const Command& d);
Command fin(const Command& c);
Command om(const Command& c);
Command inf(const Command& c);
Command mu(const std::string& x, const Command& body);
Command nu(const std::string& x, const Command& body);
Command fixvar(const Space& space, const std::string& x);

Command assertion(const StateSet& p);
Command magic(const Space& space);
Command nil(const Space& space);
Command skip(const Space& space);
Command chaos(const Space& space);
Command term(const Space& space);
Command idle(const Space& space);
Command guar(const Rel& g);
Command rely(const Rel& r);
Command frame(const std::vector<std::string>& xs, const Command& c);
Command pspec(const Rel& q);
Command spec(const Rel& q);
Command opt(const Rel& q);
Command atomic(const StateSet& p, const Rel& q);
Command assign(const Space& space, const std::string& x, const Expr& e);
Command cond(const Space& space, const Expr& b, const Command& c, const Command& d,
             BoolEncoding enc = {});
Command while_loop(const Space& space, const Expr& b, const Command& c, BoolEncoding enc = {});
Command eval(const Space& space, const Expr& e, Value k);

/// Conditional-and (b1 && b2) as a conditional command evaluating to k, the
/// derived encoding for short-circuit operators: if b1 then (b2 evaluates to
/// k) else (k is false).
Command cand_eval(const Space& space, const Expr& b1, const Expr& b2, Value k, BoolEncoding enc = {});

}  // namespace cmd

/// Expansion of one derived node into a term over simpler commands (which may
/// themselves be derived). Core nodes are returned unchanged.
Command expand(const Command& c);
/// Full expansion into core terms (primitives, operators, fixpoints).
Command desugar(const Command& c);
bool is_core(const Command& c);

}  // namespace rgc
