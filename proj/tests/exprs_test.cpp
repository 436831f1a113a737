#include <gtest/gtest.h>

#include "rgcalc/example.hpp"
#include "rgcalc/exprs.hpp"
#include "rgcalc/laws.hpp"
#include "rgcalc/semantics.hpp"
#include "rgcalc/syntax.hpp"

using namespace rgc;

namespace {

Space signed_x() { return parse_space("var x : {-1, 0, 1}"); }
State at(const Space& sp, Value x) { return sp->state_of({x}); }

}  // namespace

TEST(Eval, Examples) {
  Space sp = signed_x();
  EXPECT_EQ(eval(parse_expr("abs(x)", sp), *sp, at(sp, -1)), 1);
  Space small = parse_space("var x : {0, 1, 2}");
  EXPECT_EQ(eval(parse_expr("2 * x", small), *small, small->state_of({1})), 2);
  Expr zero = parse_expr("x - x", sp);
  for (State s : enumerate_states(*sp)) EXPECT_EQ(eval(zero, *sp, s), 0);
}

TEST(EqVal, Examples) {
  Space sp = signed_x();
  EXPECT_EQ(eq_val(3, ExprNode::constant(3), sp), StateSet::all(sp));
  EXPECT_TRUE(eq_val(3, ExprNode::constant(4), sp).empty());
  StateSet ones = StateSet::singleton(sp, at(sp, -1)) | StateSet::singleton(sp, at(sp, 1));
  EXPECT_EQ(eq_val(1, parse_expr("abs(x)", sp), sp), ones);
  EXPECT_EQ(eq_val(0, parse_expr("x - x", sp), sp), StateSet::all(sp));
}

TEST(TypeOf, Examples) {
  Space sp = rem_from_set_space(2);
  Expr in = ops::member(ExprNode::variable(sp, "i"), ExprNode::variable(sp, "w"));
  EXPECT_EQ(type_of(in, BoolEncoding{}.booleans(), sp), StateSet::all(sp));
  EXPECT_EQ(type_of(ExprNode::constant(7), {7}, sp), StateSet::all(sp));
  EXPECT_TRUE(type_of(ExprNode::variable(sp, "w"), {}, sp).empty());
}

TEST(Invariance, Examples) {
  Space sp = signed_x();
  Rel negate = parse_rel("x' = -x", sp);
  EXPECT_TRUE(is_invariant_under(parse_expr("abs(x)", sp), negate));
  EXPECT_TRUE(is_invariant_under(parse_expr("x - x", sp), Rel::univ(sp)));
  Space two = parse_space("var x : {0, 1}");
  EXPECT_FALSE(is_invariant_under(ExprNode::variable(two, "x"), parse_rel("x = 0 && x' = 1", two)));
}

TEST(SingleReference, Examples) {
  Space sp = parse_space("var x : {-1, 0, 1}\nvar y : {0, 1}");
  EXPECT_TRUE(is_single_reference(ExprNode::variable(sp, "x"), Rel::univ(sp)));
  EXPECT_FALSE(is_single_reference(parse_expr("x - x", sp), parse_rel("x' != x", sp)));
  EXPECT_TRUE(is_single_reference(parse_expr("abs(x) + y", sp), parse_rel("x' = -x && y' = y", sp)));
}

TEST(EvalCmd, Examples) {
  Space sp = signed_x();
  const std::size_t K = 3;
  Command k_eval = cmd::eval(sp, ExprNode::constant(5), 5);
  EXPECT_TRUE(equivalent(k_eval, cmd::seq({cmd::idle(sp), cmd::test(StateSet::all(sp)), cmd::idle(sp)}), K));
  EXPECT_TRUE(equivalent(cmd::eval(sp, parse_expr("abs(x)", sp), -1), cmd::magic(sp), K));
  Space xy = parse_space("var x : {0, 1}\nvar y : {0, 1}");
  Command sum = cmd::eval(xy, parse_expr("x + y", xy), 2);
  Command pair = cmd::par(cmd::eval(xy, ExprNode::variable(xy, "x"), 1), cmd::eval(xy, ExprNode::variable(xy, "y"), 1));
  EXPECT_TRUE(equivalent(sum, pair, K));
}

TEST(CompareSets, Examples) {
  Space sp = rem_from_set_space(2);
  ValueOrder sup = ValueOrder::strict_superset(2);
  Expr w = ExprNode::variable(sp, "w");
  EXPECT_EQ(compare_sets(w, w, sup, false, sp), StateSet::all(sp));
  EXPECT_TRUE(compare_sets(w, w, sup, true, sp).empty());
  for (Value k = 0; k < 4; ++k) {
    StateSet gt = compare_sets(ExprNode::constant(k), w, sup, true, sp);
    StateSet expected = StateSet::of(sp, [&](State s) {
      Value v = sp->value(s, sp->var_index("w"));
      return v != k && (k & v) == v;
    });
    EXPECT_EQ(gt, expected) << "k=" << k;
  }
  // k = 3 strictly contains 0, 1 and 2: three of the four w values.
  EXPECT_EQ(compare_sets(ExprNode::constant(3), w, sup, true, sp).count(), 3u * 32u);
}

TEST(ExprProperties, EqValPartitionsTheSpace) {
  Space sp = parse_space("var x : {0, 1}\nvar y : {0, 1}");
  LawContext ctx = LawContext::make(sp, 2);
  ASSERT_FALSE(ctx.exprs.empty());
  for (const Expr& e : ctx.exprs) {
    StateSet covered = StateSet::none(sp);
    for (Value k : e->range()) {
      StateSet part = eq_val(k, e, sp);
      EXPECT_TRUE((covered & part).empty()) << render(e);
      covered = covered | part;
    }
    EXPECT_EQ(covered, StateSet::all(sp)) << render(e);
  }
}

TEST(ExprProperties, InvariantExpressionsHaveStableValueSets) {
  Space sp = parse_space("var x : {0, 1}\nvar y : {0, 1}");
  LawContext ctx = LawContext::make(sp, 2);
  std::mt19937_64 rng(7);
  for (int n = 0; n < 200; ++n) {
    Rel r = random_rel(sp, rng);
    for (const Expr& e : ctx.exprs)
      if (is_invariant_under(e, r))
        for (Value k : e->range()) EXPECT_TRUE(is_stable(eq_val(k, e, sp), r)) << render(e);
  }
}

TEST(ExprProperties, DoublingUnderInterference) {
  Space sp = parse_space("var x : {0, 1}");
  Expr twice = parse_expr("x + x", sp), doubled = parse_expr("2 * x", sp);
  bool strict = false;
  for (Value k : {0, 1, 2}) {
    EXPECT_TRUE(refines(cmd::eval(sp, twice, k), cmd::eval(sp, doubled, k), 3));
    strict = strict || !refines(cmd::eval(sp, doubled, k), cmd::eval(sp, twice, k), 3);
  }
  EXPECT_TRUE(strict);
}
