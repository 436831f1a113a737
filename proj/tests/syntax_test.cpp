#include <gtest/gtest.h>

#include "rgcalc/example.hpp"
#include "rgcalc/laws.hpp"
#include "rgcalc/semantics.hpp"
#include "rgcalc/syntax.hpp"

using namespace rgc;

namespace {

Space xy() { return parse_space("var x : {0, 1}\nvar y : {0, 1}"); }

}  // namespace

TEST(ParseSpace, RangesListsAndComments) {
  Space sp = parse_space("# comment\nvar x : 0..2\nvar y : {-1, 1}  # trailing\n");
  ASSERT_EQ(sp->var_count(), 2u);
  EXPECT_EQ(sp->var(0).domain, (std::vector<Value>{0, 1, 2}));
  EXPECT_EQ(sp->var(1).domain, (std::vector<Value>{-1, 1}));
  EXPECT_EQ(sp->size(), 6u);
  EXPECT_EQ(parse_space(print_space(*sp))->digest(), sp->digest());
}

TEST(ParseSpace, Errors) {
  EXPECT_THROW(parse_space("var x {0}"), ParseError);
  EXPECT_THROW(parse_space("var x : {0}\nvar x : {1}"), ConfigError);
  EXPECT_THROW(parse_space(""), ConfigError);
}

TEST(ParsePredicates, Examples) {
  Space sp = xy();
  EXPECT_EQ(parse_set("x = 0 || y = 1", sp).count(), 3u);
  EXPECT_EQ(parse_rel("x' = x && y' = y", sp), Rel::id(sp));
  EXPECT_EQ(parse_rel("true", sp), Rel::univ(sp));
  EXPECT_TRUE(parse_set("!(x = x)", sp).empty());
  EXPECT_THROW(parse_set("x' = 0", sp), ParseError);
  EXPECT_THROW(parse_set("z = 0", sp), ParseError);
}

TEST(ParseCommand, ConjunctionTree) {
  Space sp = xy();
  Command c = parse_command("guar(x' = x) /\\ rely(y' = y) /\\ spec(x' = x && y' = y)", sp);
  ASSERT_EQ(c->kind(), Kind::Conj);
  Command expected = cmd::conj(cmd::conj(cmd::guar(parse_rel("x' = x", sp)), cmd::rely(parse_rel("y' = y", sp))),
                               cmd::spec(Rel::id(sp)));
  Command right = cmd::conj(cmd::guar(parse_rel("x' = x", sp)),
                            cmd::conj(cmd::rely(parse_rel("y' = y", sp)), cmd::spec(Rel::id(sp))));
  EXPECT_TRUE(same_cmd(c, expected) || same_cmd(c, right)) << render(c);
}

TEST(ParseCommand, AssignmentOfAVariable) {
  Space sp = rem_from_set_space(2);
  Command c = parse_command("pw := w", sp);
  EXPECT_TRUE(same_cmd(c, cmd::assign(sp, "pw", ExprNode::variable(sp, "w"))));
}

TEST(ParseCommand, LoopWithMaskTest) {
  Space sp = rem_from_set_space(2);
  Command c = parse_command("while i in w do (pw := w; nw := remove(pw, i))", sp);
  ASSERT_EQ(c->kind(), Kind::Derived);
  EXPECT_EQ(c->tag(), Tag::While);
  Expr guard = ops::member(ExprNode::variable(sp, "i"), ExprNode::variable(sp, "w"));
  EXPECT_EQ(eq_val(1, c->expr(), sp), eq_val(1, guard, sp));
  EXPECT_EQ(eq_val(1, c->expr(), sp).count(), 64u);
}

TEST(ParseCommand, ErrorsCarryPositions) {
  Space sp = xy();
  try {
    parse_command("pgm(x' = x) ; ; nil", sp);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position, 14u);
  }
  EXPECT_THROW(parse_command("pgm(x' = x", sp), ParseError);
  EXPECT_THROW(parse_command("z := 1", sp), ParseError);
}

TEST(Printer, RoundTripsGeneratedCommands) {
  for (Space sp : {parse_space("var x : {0, 1}"), xy()}) {
    LawContext ctx = LawContext::make(sp, 2);
    std::mt19937_64 rng(17);
    std::vector<Command> cs(ctx.abort_pool.begin(), ctx.abort_pool.end());
    for (int n = 0; n < 150; ++n) cs.push_back(random_command(ctx, rng, 3, true));
    for (const Command& c : cs) {
      std::string text = print_command(c);
      EXPECT_TRUE(same_cmd(parse_command(text, sp), c)) << text;
    }
  }
}

TEST(Printer, RoundTripsDerivedCommands) {
  Space sp = rem_from_set_space(1);
  for (const char* src :
       {"frame {w}: spec(w' = 0)", "if i in w then nw := remove(pw, i) else nil", "atomic(w = pw, w' = nw)",
        "assert(pw subseteq w) ; opt(w' = w)", "rely(w' subseteq w) /\\ guar(true) /\\ term"}) {
    Command c = parse_command(src, sp);
    EXPECT_TRUE(same_cmd(parse_command(print_command(c), sp), c)) << src;
  }
}
