// Axioms and derived properties of the underlying algebra, checked against the
// trace model.
#include "law_support.hpp"

namespace rgc {

namespace {

using namespace lawkit;
using namespace cmd;

constexpr const char* kGroup = "axiom";

/// Equality of two behavior sets as a decided fact.
Obligation same_sets(std::string label, const BehaviorSet& a, const BehaviorSet& b, const LawContext& ctx) {
  if (auto cx = find_counterexample(a, b))
    return Obligation::fact(std::move(label), false, "missing from lhs: " + render(cx->behavior, *ctx.space));
  if (auto cx = find_counterexample(b, a))
    return Obligation::fact(std::move(label), false, "missing from rhs: " + render(cx->behavior, *ctx.space));
  return Obligation::fact(std::move(label), true);
}

BehaviorSet den(const Command& c, const LawContext& ctx) { return denote(c, ctx.bound); }

LawSpec ax(std::string name, std::string statement, std::vector<ParamDecl> params, std::vector<Proviso> provisos,
           Conclude conclude) {
  return make_law(std::move(name), kGroup, std::move(statement), std::move(params), std::move(provisos), std::move(conclude));
}

Proviso refinement_proviso(std::string name, std::function<Command(const Instance&)> lhs,
                           std::function<Command(const Instance&)> rhs) {
  return {std::move(name), [lhs, rhs](const Instance& I, const LawContext& ctx) { return refines(lhs(I), rhs(I), ctx.bound); }};
}

std::vector<LawSpec> distribution_axioms() {
  std::vector<LawSpec> v;
  v.push_back(ax("Nondet-seq-distrib-right", "(∨C);d = ∨c∈C (c;d), including C = ∅",
                 {{"c0", ParamType::AbortCmd}, {"c1", ParamType::AbortCmd}, {"d", ParamType::AbortCmd}}, {},
                 [](const Instance& I, const LawContext& ctx) {
                   const Command &c0 = I.c("c0"), &c1 = I.c("c1"), &d = I.c("d");
                   return obs(Obligation::equal("binary", seq(choice(c0, c1), d), choice(seq(c0, d), seq(c1, d))),
                              Obligation::equal("empty", seq(nondet(ctx.space, {}), d), nondet(ctx.space, {})));
                 }));
  v.push_back(ax("Nondet-seq-distrib-left", "c;(∨D) = ∨d∈D (c;d) if D ≠ ∅",
                 {{"c", ParamType::AbortCmd}, {"d0", ParamType::AbortCmd}, {"d1", ParamType::AbortCmd}}, {},
                 [](const Instance& I, const LawContext&) {
                   const Command &c = I.c("c"), &d0 = I.c("d0"), &d1 = I.c("d1");
                   return obs(Obligation::equal("binary", seq(c, choice(d0, d1)), choice(seq(c, d0), seq(c, d1))),
                              Obligation::equal("singleton", seq(c, nondet(c->space(), {d0})), seq(c, d0)));
                 }));
  return v;
}

std::vector<LawSpec> test_axioms() {
  std::vector<LawSpec> v;
  v.push_back(ax("Nondet-test", "∨p∈P τp = τ(∪P)", {{"p1", ParamType::Set}, {"p2", ParamType::Set}, {"p3", ParamType::Set}}, {},
                 [](const Instance& I, const LawContext& ctx) {
                   const StateSet &a = I.p("p1"), &b = I.p("p2"), &c = I.p("p3");
                   return obs(Obligation::equal("three", nondet(ctx.space, {test(a), test(b), test(c)}), test(a | b | c)),
                              Obligation::equal("empty", nondet(ctx.space, {}), test(StateSet::none(ctx.space))));
                 }));
  v.push_back(ax("conjoin-test-test", "τp1 ∧ τp2 = τ(p1 ∩ p2)", {{"p1", ParamType::Set}, {"p2", ParamType::Set}}, {},
                 [](const Instance& I, const LawContext& ctx) {
                   BehaviorSet m = meet(den(test(I.p("p1")), ctx), den(test(I.p("p2")), ctx));
                   return obs(same_sets("meet", m, den(test(I.p("p1") & I.p("p2")), ctx), ctx));
                 }));
  v.push_back(ax("negate-test", "the complement of τp among tests is τp̄", {{"p", ParamType::Set}}, {},
                 [](const Instance& I, const LawContext& ctx) {
                   Command t = test(I.p("p")), tn = test(~I.p("p"));
                   BehaviorSet m = meet(den(t, ctx), den(tn, ctx));
                   return obs(Obligation::equal("join is nil", choice(t, tn), nil(ctx.space)),
                              same_sets("meet is magic", m, den(magic(ctx.space), ctx), ctx));
                 }));
  v.push_back(ax("seq-test-test", "τp1;τp2 = τ(p1 ∩ p2)", {{"p1", ParamType::Set}, {"p2", ParamType::Set}}, {},
                 [](const Instance& I, const LawContext&) {
                   return obs(Obligation::equal("merge", seq(test(I.p("p1")), test(I.p("p2"))), test(I.p("p1") & I.p("p2"))));
                 }));
  v.push_back(ax("nondet-test-test", "τp1 ∨ τp2 = τ(p1 ∪ p2)", {{"p1", ParamType::Set}, {"p2", ParamType::Set}}, {},
                 [](const Instance& I, const LawContext&) {
                   return obs(Obligation::equal("union", choice(test(I.p("p1")), test(I.p("p2"))), test(I.p("p1") | I.p("p2"))));
                 }));
  v.push_back(ax("test-strengthen", "if p1 ⊇ p2 then τp1 ⪰ τp2", {{"p1", ParamType::Set}, {"p2", ParamType::Set}},
                 {{"p1 ⊇ p2", [](const Instance& I, const LawContext&) { return I.p("p2").subset_of(I.p("p1")); }}},
                 [](const Instance& I, const LawContext&) {
                   return obs(Obligation::refine("strengthen", test(I.p("p1")), test(I.p("p2"))));
                 }));
  v.push_back(ax("test-intro", "nil ⪰ τp", {{"p", ParamType::Set}}, {}, [](const Instance& I, const LawContext& ctx) {
    return obs(Obligation::refine("introduce", nil(ctx.space), test(I.p("p"))));
  }));
  v.push_back(ax("assert-remove", "{p} ⪰ nil", {{"p", ParamType::Set}}, {}, [](const Instance& I, const LawContext& ctx) {
    return obs(Obligation::refine("remove", assertion(I.p("p")), nil(ctx.space)));
  }));
  v.push_back(ax("Galois-assert-test", "{p};c ⪰ d iff c ⪰ τp;d",
                 {{"p", ParamType::Set}, {"c", ParamType::AbortCmd}, {"d", ParamType::AbortCmd}}, {},
                 [](const Instance& I, const LawContext& ctx) {
                   bool left = refines(seq(assertion(I.p("p")), I.c("c")), I.c("d"), ctx.bound);
                   bool right = refines(I.c("c"), seq(test(I.p("p")), I.c("d")), ctx.bound);
                   return obs(Obligation::fact("Galois connection", left == right,
                                               left ? "{p};c ⪰ d but not c ⪰ τp;d" : "c ⪰ τp;d but not {p};c ⪰ d"));
                 }));
  v.push_back(ax("seq-assert-assert", "{p1};{p2} = {p1 ∩ p2}", {{"p1", ParamType::Set}, {"p2", ParamType::Set}}, {},
                 [](const Instance& I, const LawContext&) {
                   return obs(Obligation::equal("merge", seq(assertion(I.p("p1")), assertion(I.p("p2"))),
                                                assertion(I.p("p1") & I.p("p2"))));
                 }));
  v.push_back(ax("seq-test-assert", "τp;{p} = τp", {{"p", ParamType::Set}}, {}, [](const Instance& I, const LawContext&) {
    return obs(Obligation::equal("absorb", seq(test(I.p("p")), assertion(I.p("p"))), test(I.p("p"))));
  }));
  v.push_back(ax("seq-assert-test", "{p};τp = {p}", {{"p", ParamType::Set}}, {}, [](const Instance& I, const LawContext&) {
    return obs(Obligation::equal("absorb", seq(assertion(I.p("p")), test(I.p("p"))), assertion(I.p("p"))));
  }));
  return v;
}

std::vector<LawSpec> atomic_axioms() {
  std::vector<LawSpec> v;
  v.push_back(ax("nondet-pgm-pgm", "π r1 ∨ π r2 = π(r1 ∪ r2)", {{"r1", ParamType::Rel}, {"r2", ParamType::Rel}}, {},
                 [](const Instance& I, const LawContext&) {
                   return obs(Obligation::equal("union", choice(pgm(I.r("r1")), pgm(I.r("r2"))), pgm(I.r("r1") | I.r("r2"))));
                 }));
  v.push_back(ax("nondet-env-env", "ε r1 ∨ ε r2 = ε(r1 ∪ r2)", {{"r1", ParamType::Rel}, {"r2", ParamType::Rel}}, {},
                 [](const Instance& I, const LawContext&) {
                   return obs(Obligation::equal("union", choice(env(I.r("r1")), env(I.r("r2"))), env(I.r("r1") | I.r("r2"))));
                 }));
  v.push_back(ax("seq-test-pgm", "τp;π r = π(p ◁ r)", {{"p", ParamType::Set}, {"r", ParamType::Rel}}, {},
                 [](const Instance& I, const LawContext&) {
                   return obs(Obligation::equal("restrict", seq(test(I.p("p")), pgm(I.r("r"))), pgm(dom_restrict(I.p("p"), I.r("r")))));
                 }));
  v.push_back(ax("seq-test-env", "τp;ε r = ε(p ◁ r)", {{"p", ParamType::Set}, {"r", ParamType::Rel}}, {},
                 [](const Instance& I, const LawContext&) {
                   return obs(Obligation::equal("restrict", seq(test(I.p("p")), env(I.r("r"))), env(dom_restrict(I.p("p"), I.r("r")))));
                 }));
  v.push_back(ax("seq-pgm-test", "π(r ▷ p);τp = π(r ▷ p)", {{"r", ParamType::Rel}, {"p", ParamType::Set}}, {},
                 [](const Instance& I, const LawContext&) {
                   Command a = pgm(range_restrict(I.r("r"), I.p("p")));
                   return obs(Obligation::equal("absorb", seq(a, test(I.p("p"))), a));
                 }));
  v.push_back(ax("seq-env-test", "ε(r ▷ p);τp = ε(r ▷ p)", {{"r", ParamType::Rel}, {"p", ParamType::Set}}, {},
                 [](const Instance& I, const LawContext&) {
                   Command a = env(range_restrict(I.r("r"), I.p("p")));
                   return obs(Obligation::equal("absorb", seq(a, test(I.p("p"))), a));
                 }));
  v.push_back(ax("negate-atomic", "the complement of π r1 ∨ ε r2 among atomic steps is π r̄1 ∨ ε r̄2",
                 {{"r1", ParamType::Rel}, {"r2", ParamType::Rel}}, {},
                 [](const Instance& I, const LawContext& ctx) {
                   const Space& sp = ctx.space;
                   Command a = choice(pgm(I.r("r1")), env(I.r("r2")));
                   Command an = choice(pgm(~I.r("r1")), env(~I.r("r2")));
                   Command top = choice(pgm(Rel::univ(sp)), env(Rel::univ(sp)));
                   return obs(Obligation::equal("join is every step", choice(a, an), top),
                              same_sets("meet is magic", meet(den(a, ctx), den(an, ctx)), den(magic(sp), ctx), ctx));
                 }));
  v.push_back(ax("pgm-refine", "if r1 ⊇ r2 then π r1 ⪰ π r2", {{"r1", ParamType::Rel}, {"r2", ParamType::Rel}},
                 {{"r1 ⊇ r2", [](const Instance& I, const LawContext&) { return I.r("r2").subset_of(I.r("r1")); }}},
                 [](const Instance& I, const LawContext&) {
                   return obs(Obligation::refine("refine", pgm(I.r("r1")), pgm(I.r("r2"))));
                 }));
  v.push_back(ax("env-refine", "if r1 ⊇ r2 then ε r1 ⪰ ε r2", {{"r1", ParamType::Rel}, {"r2", ParamType::Rel}},
                 {{"r1 ⊇ r2", [](const Instance& I, const LawContext&) { return I.r("r2").subset_of(I.r("r1")); }}},
                 [](const Instance& I, const LawContext&) {
                   return obs(Obligation::refine("refine", env(I.r("r1")), env(I.r("r2"))));
                 }));
  v.push_back(ax("atomic-injective", "π and ε are injective", {{"r1", ParamType::Rel}, {"r2", ParamType::Rel}}, {},
                 [](const Instance& I, const LawContext& ctx) {
                   bool same = I.r("r1") == I.r("r2");
                   bool p = equivalent(pgm(I.r("r1")), pgm(I.r("r2")), ctx.bound);
                   bool e = equivalent(env(I.r("r1")), env(I.r("r2")), ctx.bound);
                   return obs(Obligation::fact("π injective", p == same, "π r1 = π r2 disagrees with r1 = r2"),
                              Obligation::fact("ε injective", e == same, "ε r1 = ε r2 disagrees with r1 = r2"));
                 }));
  return v;
}

std::vector<LawSpec> sync_step_axioms() {
  std::vector<LawSpec> v;
  auto two_rels = std::vector<ParamDecl>{{"r1", ParamType::Rel}, {"r2", ParamType::Rel}};
  v.push_back(ax("par-pgm-env", "π r1 ∥ ε r2 = π(r1 ∩ r2)", two_rels, {}, [](const Instance& I, const LawContext&) {
    return obs(Obligation::equal("sync", par(pgm(I.r("r1")), env(I.r("r2"))), pgm(I.r("r1") & I.r("r2"))));
  }));
  v.push_back(ax("par-env-env", "ε r1 ∥ ε r2 = ε(r1 ∩ r2)", two_rels, {}, [](const Instance& I, const LawContext&) {
    return obs(Obligation::equal("sync", par(env(I.r("r1")), env(I.r("r2"))), env(I.r("r1") & I.r("r2"))));
  }));
  v.push_back(ax("par-pgm-pgm", "π r1 ∥ π r2 = magic", two_rels, {}, [](const Instance& I, const LawContext& ctx) {
    return obs(Obligation::equal("infeasible", par(pgm(I.r("r1")), pgm(I.r("r2"))), magic(ctx.space)));
  }));
  v.push_back(ax("par-abort", "c ∥ abort = abort", {{"c", ParamType::AbortCmd}}, {}, [](const Instance& I, const LawContext& ctx) {
    return obs(Obligation::equal("annihilate", par(I.c("c"), abort(ctx.space)), abort(ctx.space)));
  }));
  v.push_back(ax("conj-pgm-pgm", "π r1 ⋓ π r2 = π(r1 ∩ r2)", two_rels, {}, [](const Instance& I, const LawContext&) {
    return obs(Obligation::equal("sync", conj(pgm(I.r("r1")), pgm(I.r("r2"))), pgm(I.r("r1") & I.r("r2"))));
  }));
  v.push_back(ax("conj-env-env", "ε r1 ⋓ ε r2 = ε(r1 ∩ r2)", two_rels, {}, [](const Instance& I, const LawContext&) {
    return obs(Obligation::equal("sync", conj(env(I.r("r1")), env(I.r("r2"))), env(I.r("r1") & I.r("r2"))));
  }));
  v.push_back(ax("conj-pgm-env", "π r1 ⋓ ε r2 = magic", two_rels, {}, [](const Instance& I, const LawContext& ctx) {
    return obs(Obligation::equal("infeasible", conj(pgm(I.r("r1")), env(I.r("r2"))), magic(ctx.space)));
  }));
  v.push_back(ax("conj-abort", "c ⋓ abort = abort", {{"c", ParamType::AbortCmd}}, {}, [](const Instance& I, const LawContext& ctx) {
    return obs(Obligation::equal("annihilate", conj(I.c("c"), abort(ctx.space)), abort(ctx.space)));
  }));
  v.push_back(ax("par-skip", "c ∥ skip = c", {{"c", ParamType::AbortCmd}}, {}, [](const Instance& I, const LawContext& ctx) {
    return obs(Obligation::equal("identity", par(I.c("c"), skip(ctx.space)), I.c("c")));
  }));
  v.push_back(ax("conjoin-chaos", "c ⋓ chaos = c", {{"c", ParamType::AbortCmd}}, {}, [](const Instance& I, const LawContext& ctx) {
    return obs(Obligation::equal("identity", conj(I.c("c"), chaos(ctx.space)), I.c("c")));
  }));
  v.push_back(ax("Nondet-sync-distrib", "(∨C) ⊗ d = ∨c∈C (c ⊗ d) if C ≠ ∅",
                 {{"c0", ParamType::Cmd}, {"c1", ParamType::Cmd}, {"d", ParamType::Cmd}, {"op", ParamType::Op}}, {},
                 [](const Instance& I, const LawContext&) {
                   int op = I.op("op");
                   const Command &c0 = I.c("c0"), &c1 = I.c("c1"), &d = I.c("d");
                   return obs(Obligation::equal("distribute", sync_op(op, choice(c0, c1), d),
                                                choice(sync_op(op, c0, d), sync_op(op, c1, d))));
                 }));
  return v;
}

std::vector<LawSpec> iteration_axioms() {
  std::vector<LawSpec> v;
  v.push_back(ax("fiter-unfold-left", "fin c = nil ∨ c;fin c", {{"c", ParamType::AbortCmd}}, {},
                 [](const Instance& I, const LawContext& ctx) {
                   const Command& c = I.c("c");
                   return obs(Obligation::equal("unfold", fin(c), choice(nil(ctx.space), seq(c, fin(c)))));
                 }));
  v.push_back(ax("fiter-unfold-right", "fin c = nil ∨ fin c;c", {{"c", ParamType::AbortCmd}}, {},
                 [](const Instance& I, const LawContext& ctx) {
                   const Command& c = I.c("c");
                   return obs(Obligation::equal("unfold", fin(c), choice(nil(ctx.space), seq(fin(c), c))));
                 }));
  v.push_back(ax("iter-unfold", "om c = nil ∨ c;om c", {{"c", ParamType::AbortCmd}}, {},
                 [](const Instance& I, const LawContext& ctx) {
                   const Command& c = I.c("c");
                   return obs(Obligation::equal("unfold", om(c), choice(nil(ctx.space), seq(c, om(c)))));
                 }));
  v.push_back(ax("isolation", "om c;d = fin c;d ∨ inf c", {{"c", ParamType::AbortCmd}, {"d", ParamType::AbortCmd}}, {},
                 [](const Instance& I, const LawContext&) {
                   const Command &c = I.c("c"), &d = I.c("d");
                   return obs(Obligation::equal("isolate", seq(om(c), d), choice(seq(fin(c), d), inf(c))));
                 }));
  v.push_back(ax("fiter-induction-left", "x ⪰ fin c;d if x ⪰ d ∨ c;x",
                 {{"c", ParamType::Cmd}, {"d", ParamType::Cmd}, {"x", ParamType::Cmd}},
                 {refinement_proviso(
                     "x ⪰ d ∨ c;x", [](const Instance& I) { return I.c("x"); },
                     [](const Instance& I) { return choice(I.c("d"), seq(I.c("c"), I.c("x"))); })},
                 [](const Instance& I, const LawContext&) {
                   return obs(Obligation::refine("induction", I.c("x"), seq(fin(I.c("c")), I.c("d"))));
                 }));
  v.push_back(ax("fiter-induction-right", "x ⪰ d;fin c if x ⪰ d ∨ x;c",
                 {{"c", ParamType::Cmd}, {"d", ParamType::Cmd}, {"x", ParamType::Cmd}},
                 {refinement_proviso(
                     "x ⪰ d ∨ x;c", [](const Instance& I) { return I.c("x"); },
                     [](const Instance& I) { return choice(I.c("d"), seq(I.c("x"), I.c("c"))); })},
                 [](const Instance& I, const LawContext&) {
                   return obs(Obligation::refine("induction", I.c("x"), seq(I.c("d"), fin(I.c("c")))));
                 }));
  v.push_back(ax("iter-induction", "om c;d ⪰ x if d ∨ c;x ⪰ x", {{"c", ParamType::Cmd}, {"d", ParamType::Cmd}, {"x", ParamType::Cmd}},
                 {refinement_proviso(
                     "d ∨ c;x ⪰ x", [](const Instance& I) { return choice(I.c("d"), seq(I.c("c"), I.c("x"))); },
                     [](const Instance& I) { return I.c("x"); })},
                 [](const Instance& I, const LawContext&) {
                   return obs(Obligation::refine("induction", seq(om(I.c("c")), I.c("d")), I.c("x")));
                 }));
  v.push_back(ax("fiter-split-d", "fin(c ∨ d) = fin(c ∨ d);fin d", {{"c", ParamType::AbortCmd}, {"d", ParamType::AbortCmd}}, {},
                 [](const Instance& I, const LawContext&) {
                   Command cd = fin(choice(I.c("c"), I.c("d")));
                   return obs(Obligation::equal("split", cd, seq(cd, fin(I.c("d")))));
                 }));
  return v;
}

std::vector<LawSpec> synchronisation_axioms() {
  std::vector<LawSpec> v;
  v.push_back(ax("sync-atomic-atomic", "a1;c1 ⊗ a2;c2 = (a1 ⊗ a2);(c1 ⊗ c2)",
                 {{"a1", ParamType::Atom}, {"a2", ParamType::Atom}, {"c1", ParamType::Cmd}, {"c2", ParamType::Cmd}, {"op", ParamType::Op}},
                 {}, [](const Instance& I, const LawContext&) {
                   int op = I.op("op");
                   const Command &a1 = I.c("a1"), &a2 = I.c("a2"), &c1 = I.c("c1"), &c2 = I.c("c2");
                   return obs(Obligation::equal("synchronise", sync_op(op, seq(a1, c1), seq(a2, c2)),
                                                seq(sync_op(op, a1, a2), sync_op(op, c1, c2))));
                 }));
  v.push_back(ax("sync-atomic-nil", "a;c ⊗ nil = magic", {{"a", ParamType::Atom}, {"c", ParamType::Cmd}, {"op", ParamType::Op}}, {},
                 [](const Instance& I, const LawContext& ctx) {
                   return obs(Obligation::equal("infeasible", sync_op(I.op("op"), seq(I.c("a"), I.c("c")), nil(ctx.space)),
                                                magic(ctx.space)));
                 }));
  v.push_back(ax("sync-test-test", "τp1 ⊗ τp2 = τp1 ∧ τp2", {{"p1", ParamType::Set}, {"p2", ParamType::Set}, {"op", ParamType::Op}},
                 {}, [](const Instance& I, const LawContext& ctx) {
                   Command t1 = test(I.p("p1")), t2 = test(I.p("p2"));
                   return obs(same_sets("meet", den(sync_op(I.op("op"), t1, t2), ctx), meet(den(t1, ctx), den(t2, ctx)), ctx));
                 }));
  v.push_back(ax("sync-test-distrib", "t;c1 ⊗ t;c2 = t;(c1 ⊗ c2)",
                 {{"p", ParamType::Set}, {"c1", ParamType::AbortCmd}, {"c2", ParamType::AbortCmd}, {"op", ParamType::Op}}, {},
                 [](const Instance& I, const LawContext&) {
                   int op = I.op("op");
                   Command t = test(I.p("p"));
                   return obs(Obligation::equal("distribute", sync_op(op, seq(t, I.c("c1")), seq(t, I.c("c2"))),
                                                seq(t, sync_op(op, I.c("c1"), I.c("c2")))));
                 }));
  v.push_back(ax("sync-iter-iter", "om a1;c1 ⊗ om a2;c2 = om(a1 ⊗ a2);((om a1;c1 ⊗ c2) ∨ (c1 ⊗ om a2;c2))",
                 {{"a1", ParamType::Atom}, {"a2", ParamType::Atom}, {"c1", ParamType::Cmd}, {"c2", ParamType::Cmd}, {"op", ParamType::Op}},
                 {}, [](const Instance& I, const LawContext&) {
                   int op = I.op("op");
                   const Command &a1 = I.c("a1"), &a2 = I.c("a2"), &c1 = I.c("c1"), &c2 = I.c("c2");
                   Command l1 = seq(om(a1), c1), l2 = seq(om(a2), c2);
                   Command rhs = seq(om(sync_op(op, a1, a2)), choice(sync_op(op, l1, c2), sync_op(op, c1, l2)));
                   return obs(Obligation::equal("iterate", sync_op(op, l1, l2), rhs));
                 }));
  v.push_back(ax("sync-iter-fiter", "om a1;c1 ⊗ fin a2;c2 = fin(a1 ⊗ a2);((om a1;c1 ⊗ c2) ∨ (c1 ⊗ fin a2;c2))",
                 {{"a1", ParamType::Atom}, {"a2", ParamType::Atom}, {"c1", ParamType::Cmd}, {"c2", ParamType::Cmd}, {"op", ParamType::Op}},
                 {}, [](const Instance& I, const LawContext&) {
                   int op = I.op("op");
                   const Command &a1 = I.c("a1"), &a2 = I.c("a2"), &c1 = I.c("c1"), &c2 = I.c("c2");
                   Command l1 = seq(om(a1), c1), l2 = seq(fin(a2), c2);
                   Command rhs = seq(fin(sync_op(op, a1, a2)), choice(sync_op(op, l1, c2), sync_op(op, c1, l2)));
                   return obs(Obligation::equal("iterate", sync_op(op, l1, l2), rhs));
                 }));
  v.push_back(ax("test-omega", "om a;c ⊗ t = c ⊗ t", {{"a", ParamType::Atom}, {"c", ParamType::Cmd}, {"p", ParamType::Set}, {"op", ParamType::Op}},
                 {}, [](const Instance& I, const LawContext&) {
                   int op = I.op("op");
                   Command t = test(I.p("p"));
                   return obs(Obligation::equal("drop iteration", sync_op(op, seq(om(I.c("a")), I.c("c")), t), sync_op(op, I.c("c"), t)));
                 }));
  v.push_back(ax("sync-seq-interchange", "(c0;d0) ⊗ (c1;d1) ⪰ (c0 ⊗ c1);(d0 ⊗ d1)",
                 {{"c0", ParamType::Cmd}, {"d0", ParamType::Cmd}, {"c1", ParamType::Cmd}, {"d1", ParamType::Cmd}, {"op", ParamType::Op}},
                 {}, [](const Instance& I, const LawContext&) {
                   int op = I.op("op");
                   return obs(Obligation::refine("interchange", sync_op(op, seq(I.c("c0"), I.c("d0")), seq(I.c("c1"), I.c("d1"))),
                                                 seq(sync_op(op, I.c("c0"), I.c("c1")), sync_op(op, I.c("d0"), I.c("d1")))));
                 }));
  v.push_back(ax("conj-par-interchange", "(c0 ∥ d0) ⋓ (c1 ∥ d1) ⪰ (c0 ⋓ c1) ∥ (d0 ⋓ d1)",
                 {{"c0", ParamType::Cmd}, {"d0", ParamType::Cmd}, {"c1", ParamType::Cmd}, {"d1", ParamType::Cmd}}, {},
                 [](const Instance& I, const LawContext&) {
                   return obs(Obligation::refine("interchange", conj(par(I.c("c0"), I.c("d0")), par(I.c("c1"), I.c("d1"))),
                                                 par(conj(I.c("c0"), I.c("c1")), conj(I.c("d0"), I.c("d1")))));
                 }));
  return v;
}

}  // namespace

const std::vector<LawSpec>& axiom_registry() {
  static const std::vector<LawSpec> axioms = [] {
    std::vector<LawSpec> all;
    for (auto part : {distribution_axioms(), test_axioms(), atomic_axioms(), sync_step_axioms(), iteration_axioms(),
                      synchronisation_axioms()})
      for (auto& l : part) all.push_back(std::move(l));
    return all;
  }();
  return axioms;
}

}  // namespace rgc
