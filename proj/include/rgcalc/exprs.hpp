// Expressions over a state space: evaluation, equal-value sets and the
// interference analyses (invariance, single reference).
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rgcalc/relspace.hpp"

namespace rgc {

/// Raised when an operator table has no entry for its arguments.
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoolEncoding {
  Value true_value = 1;
  Value false_value = 0;
  std::set<Value> booleans() const { return {true_value, false_value}; }
};

class ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

using UnaryFn = std::function<std::optional<Value>(Value)>;
using BinaryFn = std::function<std::optional<Value>(Value, Value)>;

/// Immutable expression node. Operator nodes carry an explicit finite table
/// built over the possible values of their operands.
class ExprNode {
 public:
  enum class Kind { Constant, Variable, Unary, Binary };

  Kind kind() const { return kind_; }
  Value constant() const { return constant_; }
  std::size_t var() const { return var_; }
  const std::string& name() const { return name_; }
  const Expr& left() const { return left_; }
  const Expr& right() const { return right_; }
  const std::map<Value, Value>& unary_table() const { return utab_; }
  const std::map<std::pair<Value, Value>, Value>& binary_table() const { return btab_; }
  /// Every value the expression can take in some state (given the operand ranges).
  const std::vector<Value>& range() const { return range_; }
  std::uint64_t hash() const { return hash_; }

  static Expr constant(Value k);
  static Expr variable(const Space& space, const std::string& name);
  static Expr unary(const std::string& op, const UnaryFn& fn, Expr sub);
  static Expr binary(const std::string& op, const BinaryFn& fn, Expr l, Expr r);

 private:
  Kind kind_ = Kind::Constant;
  Value constant_ = 0;
  std::size_t var_ = 0;
  std::string name_;  // variable or operator name
  Expr left_, right_;
  std::map<Value, Value> utab_;
  std::map<std::pair<Value, Value>, Value> btab_;
  std::vector<Value> range_;
  std::uint64_t hash_ = 0;
};

bool same_expr(const Expr& a, const Expr& b);
std::string render(const Expr& e);

Value eval(const Expr& e, const StateSpace& space, State s);
/// {σ | eval(e1,σ) = eval(e2,σ)}.
StateSet eq_val(const Expr& e1, const Expr& e2, const Space& space);
/// {σ | eval(e,σ) = k}.
StateSet eq_val(Value k, const Expr& e, const Space& space);
/// {σ | eval(e,σ) ∈ T}.
StateSet type_of(const Expr& e, const std::set<Value>& T, const Space& space);
bool is_invariant_under(const Expr& e, const Rel& r);
bool is_single_reference(const Expr& e, const Rel& r);
/// {σ | eval(e1,σ) ≻ eval(e2,σ)} when strict, else its reflexive closure.
StateSet compare_sets(const Expr& e1, const Expr& e2, const ValueOrder& order, bool strict,
                      const Space& space);
/// {(σ,σ') | eval(w,σ) ⪰ eval(w,σ')}.
Rel dec_eq(const Expr& w, const ValueOrder& order, const Space& space);

/// Ready-made operators. Comparison results use the given boolean encoding.
namespace ops {
Expr add(Expr a, Expr b);
Expr sub(Expr a, Expr b);
Expr mul(Expr a, Expr b);
Expr mod(Expr a, Expr b);
Expr neg(Expr a);
Expr abs(Expr a);
Expr bit_and(Expr a, Expr b);
Expr bit_or(Expr a, Expr b);
Expr bit_not(Expr a);
/// Singleton set {a} as a bitmask.
Expr singleton(Expr a);
/// a with bit b cleared (set difference a − {b}).
Expr remove_elem(Expr a, Expr b);
Expr member(Expr elem, Expr set, BoolEncoding enc = {});
Expr eq(Expr a, Expr b, BoolEncoding enc = {});
Expr ne(Expr a, Expr b, BoolEncoding enc = {});
Expr lt(Expr a, Expr b, BoolEncoding enc = {});
Expr le(Expr a, Expr b, BoolEncoding enc = {});
Expr logical_not(Expr a, BoolEncoding enc = {});
}  // namespace ops

}  // namespace rgc
