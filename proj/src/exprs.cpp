#include "rgcalc/exprs.hpp"

#include <algorithm>
#include <cstdlib>

namespace rgc {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdull;
}

std::uint64_t hash_str(const std::string& s) { return std::hash<std::string>{}(s); }

}  // namespace

Expr ExprNode::constant(Value k) {
  auto n = std::make_shared<ExprNode>();
  n->kind_ = Kind::Constant;
  n->constant_ = k;
  n->range_ = {k};
  n->hash_ = mix(1, static_cast<std::uint64_t>(k));
  return n;
}

Expr ExprNode::variable(const Space& space, const std::string& name) {
  auto n = std::make_shared<ExprNode>();
  n->kind_ = Kind::Variable;
  n->var_ = space->var_index(name);
  n->name_ = name;
  n->range_ = space->var(n->var_).domain;
  n->hash_ = mix(2, hash_str(name));
  return n;
}

Expr ExprNode::unary(const std::string& op, const UnaryFn& fn, Expr sub) {
  auto n = std::make_shared<ExprNode>();
  n->kind_ = Kind::Unary;
  n->name_ = op;
  std::set<Value> range;
  for (Value a : sub->range())
    if (auto v = fn(a)) {
      n->utab_[a] = *v;
      range.insert(*v);
    }
  n->range_.assign(range.begin(), range.end());
  n->hash_ = mix(mix(3, hash_str(op)), sub->hash());
  n->left_ = std::move(sub);
  return n;
}

Expr ExprNode::binary(const std::string& op, const BinaryFn& fn, Expr l, Expr r) {
  auto n = std::make_shared<ExprNode>();
  n->kind_ = Kind::Binary;
  n->name_ = op;
  std::set<Value> range;
  for (Value a : l->range())
    for (Value b : r->range())
      if (auto v = fn(a, b)) {
        n->btab_[{a, b}] = *v;
        range.insert(*v);
      }
  n->range_.assign(range.begin(), range.end());
  n->hash_ = mix(mix(mix(4, hash_str(op)), l->hash()), r->hash());
  n->left_ = std::move(l);
  n->right_ = std::move(r);
  return n;
}

bool same_expr(const Expr& a, const Expr& b) {
  if (a == b) return true;
  if (!a || !b || a->hash() != b->hash() || a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case ExprNode::Kind::Constant:
      return a->constant() == b->constant();
    case ExprNode::Kind::Variable:
      return a->name() == b->name();
    case ExprNode::Kind::Unary:
      return a->name() == b->name() && a->unary_table() == b->unary_table() &&
             same_expr(a->left(), b->left());
    case ExprNode::Kind::Binary:
      return a->name() == b->name() && a->binary_table() == b->binary_table() &&
             same_expr(a->left(), b->left()) && same_expr(a->right(), b->right());
  }
  return false;
}

std::string render(const Expr& e) {
  switch (e->kind()) {
    case ExprNode::Kind::Constant:
      return std::to_string(e->constant());
    case ExprNode::Kind::Variable:
      return e->name();
    case ExprNode::Kind::Unary:
      return e->name() + "(" + render(e->left()) + ")";
    case ExprNode::Kind::Binary:
      return "(" + render(e->left()) + " " + e->name() + " " + render(e->right()) + ")";
  }
  return "?";
}

Value eval(const Expr& e, const StateSpace& space, State s) {
  switch (e->kind()) {
    case ExprNode::Kind::Constant:
      return e->constant();
    case ExprNode::Kind::Variable:
      return space.value(s, e->var());
    case ExprNode::Kind::Unary: {
      Value a = eval(e->left(), space, s);
      auto it = e->unary_table().find(a);
      if (it == e->unary_table().end())
        throw EvalError("operator " + e->name() + " undefined at " + std::to_string(a));
      return it->second;
    }
    case ExprNode::Kind::Binary: {
      Value a = eval(e->left(), space, s);
      Value b = eval(e->right(), space, s);
      auto it = e->binary_table().find({a, b});
      if (it == e->binary_table().end())
        throw EvalError("operator " + e->name() + " undefined at (" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
      return it->second;
    }
  }
  throw EvalError("malformed expression");
}

StateSet eq_val(const Expr& e1, const Expr& e2, const Space& space) {
  return StateSet::of(space, [&](State s) { return eval(e1, *space, s) == eval(e2, *space, s); });
}

StateSet eq_val(Value k, const Expr& e, const Space& space) {
  return StateSet::of(space, [&](State s) { return eval(e, *space, s) == k; });
}

StateSet type_of(const Expr& e, const std::set<Value>& T, const Space& space) {
  return StateSet::of(space, [&](State s) { return T.count(eval(e, *space, s)) != 0; });
}

bool is_invariant_under(const Expr& e, const Rel& r) {
  const auto& sp = *r.space();
  for (auto [a, b] : r.pairs())
    if (eval(e, sp, a) != eval(e, sp, b)) return false;
  return true;
}

bool is_single_reference(const Expr& e, const Rel& r) {
  switch (e->kind()) {
    case ExprNode::Kind::Constant:
    case ExprNode::Kind::Variable:
      return true;
    case ExprNode::Kind::Unary:
      return is_single_reference(e->left(), r);
    case ExprNode::Kind::Binary:
      return is_single_reference(e->left(), r) && is_single_reference(e->right(), r) &&
             (is_invariant_under(e->left(), r) || is_invariant_under(e->right(), r));
  }
  return false;
}

StateSet compare_sets(const Expr& e1, const Expr& e2, const ValueOrder& order, bool strict,
                      const Space& space) {
  return StateSet::of(space, [&](State s) {
    Value a = eval(e1, *space, s), b = eval(e2, *space, s);
    return strict ? order.greater(a, b) : order.greater_eq(a, b);
  });
}

Rel dec_eq(const Expr& w, const ValueOrder& order, const Space& space) {
  return Rel::of(space, [&](State a, State b) {
    return order.greater_eq(eval(w, *space, a), eval(w, *space, b));
  });
}

namespace ops {

namespace {
Value b2v(bool b, BoolEncoding enc) { return b ? enc.true_value : enc.false_value; }
}  // namespace

Expr add(Expr a, Expr b) {
  return ExprNode::binary("+", [](Value x, Value y) { return std::optional<Value>(x + y); }, a, b);
}
Expr sub(Expr a, Expr b) {
  return ExprNode::binary("-", [](Value x, Value y) { return std::optional<Value>(x - y); }, a, b);
}
Expr mul(Expr a, Expr b) {
  return ExprNode::binary("*", [](Value x, Value y) { return std::optional<Value>(x * y); }, a, b);
}
Expr mod(Expr a, Expr b) {
  return ExprNode::binary("mod",
                          [](Value x, Value y) -> std::optional<Value> {
                            if (y == 0) return std::nullopt;
                            return ((x % y) + y) % y;
                          },
                          a, b);
}
Expr neg(Expr a) {
  return ExprNode::unary("neg", [](Value x) { return std::optional<Value>(-x); }, a);
}
Expr abs(Expr a) {
  return ExprNode::unary("abs", [](Value x) { return std::optional<Value>(std::abs(x)); }, a);
}
Expr bit_and(Expr a, Expr b) {
  return ExprNode::binary("&", [](Value x, Value y) { return std::optional<Value>(x & y); }, a, b);
}
Expr bit_or(Expr a, Expr b) {
  return ExprNode::binary("|", [](Value x, Value y) { return std::optional<Value>(x | y); }, a, b);
}
Expr bit_not(Expr a) {
  return ExprNode::unary("~", [](Value x) { return std::optional<Value>(~x); }, a);
}
Expr singleton(Expr a) {
  return ExprNode::unary("single",
                         [](Value x) -> std::optional<Value> {
                           if (x < 0 || x > 30) return std::nullopt;
                           return Value{1} << x;
                         },
                         a);
}
Expr remove_elem(Expr a, Expr b) {
  return ExprNode::binary("remove",
                          [](Value s, Value x) -> std::optional<Value> {
                            if (x < 0 || x > 30) return std::nullopt;
                            return s & ~(Value{1} << x);
                          },
                          a, b);
}
Expr member(Expr elem, Expr set, BoolEncoding enc) {
  return ExprNode::binary("in",
                          [enc](Value x, Value s) -> std::optional<Value> {
                            if (x < 0 || x > 30) return std::nullopt;
                            return b2v(((s >> x) & 1) != 0, enc);
                          },
                          elem, set);
}
Expr eq(Expr a, Expr b, BoolEncoding enc) {
  return ExprNode::binary("=", [enc](Value x, Value y) { return std::optional<Value>(b2v(x == y, enc)); },
                          a, b);
}
Expr ne(Expr a, Expr b, BoolEncoding enc) {
  return ExprNode::binary("!=", [enc](Value x, Value y) { return std::optional<Value>(b2v(x != y, enc)); },
                          a, b);
}
Expr lt(Expr a, Expr b, BoolEncoding enc) {
  return ExprNode::binary("<", [enc](Value x, Value y) { return std::optional<Value>(b2v(x < y, enc)); },
                          a, b);
}
Expr le(Expr a, Expr b, BoolEncoding enc) {
  return ExprNode::binary("<=", [enc](Value x, Value y) { return std::optional<Value>(b2v(x <= y, enc)); },
                          a, b);
}
Expr logical_not(Expr a, BoolEncoding enc) {
  return ExprNode::unary("!",
                         [enc](Value x) -> std::optional<Value> {
                           if (x == enc.true_value) return enc.false_value;
                           if (x == enc.false_value) return enc.true_value;
                           return std::nullopt;
                         },
                         a);
}

}  // namespace ops

}  // namespace rgc
