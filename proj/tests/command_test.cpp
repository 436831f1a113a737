#include <gtest/gtest.h>

#include "rgcalc/command.hpp"
#include "rgcalc/laws.hpp"
#include "rgcalc/semantics.hpp"
#include "rgcalc/syntax.hpp"

using namespace rgc;

namespace {

Space two() { return parse_space("var x : {0, 1}"); }

}  // namespace

TEST(Desugar, AssertGuarIdle) {
  Space sp = two();
  StateSet p = parse_set("x = 0", sp);
  EXPECT_TRUE(same_cmd(expand(cmd::assertion(p)),
                       cmd::choice(cmd::test(StateSet::all(sp)), cmd::seq(cmd::test(~p), cmd::abort(sp)))));
  Rel g = parse_rel("x' >= x", sp);
  EXPECT_TRUE(same_cmd(expand(cmd::guar(g)), cmd::om(cmd::choice(cmd::pgm(g), cmd::env(Rel::univ(sp))))));
  EXPECT_TRUE(same_cmd(expand(cmd::idle(sp)), cmd::conj(cmd::guar(Rel::id(sp)), cmd::term(sp))));
}

TEST(Desugar, MagicNilAndCoreFixedPoints) {
  Space sp = two();
  EXPECT_TRUE(same_cmd(desugar(cmd::magic(sp)), cmd::test(StateSet::none(sp))));
  EXPECT_TRUE(same_cmd(desugar(cmd::nil(sp)), cmd::test(StateSet::all(sp))));
  LawContext ctx = LawContext::make(sp, 2);
  std::mt19937_64 rng(11);
  for (int n = 0; n < 100; ++n) {
    Command c = random_command(ctx, rng, 3, true);
    Command d = desugar(c);
    EXPECT_TRUE(is_core(d));
    EXPECT_TRUE(same_cmd(desugar(d), d));
    EXPECT_TRUE(free_fixvars(d).empty());
  }
}

TEST(Desugar, EveryDerivedTagStaysClosed) {
  Space sp = two();
  Rel q = parse_rel("x' = 1 - x", sp);
  StateSet p = parse_set("x = 1", sp);
  Expr b = parse_expr("x = 0", sp);
  Command c = cmd::pgm(q);
  std::vector<Command> derived = {
      cmd::assertion(p),         cmd::magic(sp),      cmd::nil(sp),          cmd::skip(sp),
      cmd::chaos(sp),            cmd::term(sp),       cmd::idle(sp),         cmd::guar(q),
      cmd::rely(q),              cmd::frame({"x"}, c), cmd::pspec(q),        cmd::spec(q),
      cmd::opt(q),               cmd::atomic(p, q),   cmd::assign(sp, "x", parse_expr("1 - x", sp)),
      cmd::cond(sp, b, c, cmd::nil(sp)), cmd::while_loop(sp, b, c), cmd::eval(sp, b, 1)};
  for (const Command& d : derived) {
    EXPECT_TRUE(is_core(desugar(d))) << tag_name(d->tag());
    EXPECT_TRUE(free_fixvars(desugar(d)).empty()) << tag_name(d->tag());
  }
}

TEST(FreeFixvars, Examples) {
  Space sp = two();
  Command c = cmd::pgm(Rel::univ(sp));
  EXPECT_TRUE(free_fixvars(cmd::nu("x", cmd::seq(c, cmd::fixvar(sp, "x")))).empty());
  EXPECT_EQ(free_fixvars(cmd::fixvar(sp, "x")), std::set<std::string>{"x"});
  EXPECT_TRUE(free_fixvars(cmd::while_loop(sp, parse_expr("x = 0", sp), c)).empty());
}

TEST(Builders, AtomicDefaultsToAllStates) {
  Space sp = two();
  Rel q = parse_rel("x' = 1", sp);
  Command a = parse_command("atomic(x' = 1)", sp);
  EXPECT_TRUE(same_cmd(a, cmd::atomic(StateSet::all(sp), q)));
}

TEST(Builders, ConditionalAbortsOnNonBooleans) {
  Space sp = parse_space("var x : {0, 1, 2}");
  Expr b = ExprNode::variable(sp, "x");
  Command c = expand(cmd::cond(sp, b, cmd::nil(sp), cmd::nil(sp)));
  // (choice over true, false and the non-boolean 2 branch) ; idle
  ASSERT_EQ(c->kind(), Kind::Seq);
  const Command& alts = c->kid(0);
  ASSERT_EQ(alts->kind(), Kind::Nondet);
  EXPECT_EQ(alts->kids().size(), 3u);
  StateSet two_ = parse_set("x = 2", sp);
  EXPECT_TRUE(refines(cmd::seq(cmd::test(two_), cmd::cond(sp, b, cmd::nil(sp), cmd::nil(sp))),
                      cmd::seq(cmd::test(two_), cmd::abort(sp)), 3));
}

TEST(Builders, WhileUnfoldsIntoConditionalRecursion) {
  Space sp = two();
  Expr t = ExprNode::constant(1);
  Command w = expand(cmd::while_loop(sp, t, cmd::nil(sp)));
  ASSERT_EQ(w->kind(), Kind::Nu);
  Command body = expand(cmd::cond(sp, t, cmd::seq(cmd::nil(sp), cmd::fixvar(sp, w->name())), cmd::nil(sp)));
  EXPECT_TRUE(same_cmd(w, cmd::nu(w->name(), body)));
}

TEST(Builders, UnknownVariablesAreRejected) {
  Space sp = two();
  EXPECT_THROW(cmd::assign(sp, "y", ExprNode::constant(0)), ConfigError);
  EXPECT_THROW(cmd::frame({"y"}, cmd::nil(sp)), ConfigError);
}
