// Laws and lemmas of the rely/guarantee calculus as executable schemas.
#include <algorithm>

#include "law_support.hpp"

namespace rgc {

namespace {

using namespace lawkit;
using namespace cmd;

std::vector<LawSpec> guarantee_laws() {
  std::vector<LawSpec> v;
  v.push_back(make_law("guar-strengthen", "guarantees", "if g0 ⊇ g1 then guar g0 ⪰ guar g1",
                       {{"g0", ParamType::Rel}, {"g1", ParamType::Rel}},
                       {{"g0 ⊇ g1", [](const Instance& I, const LawContext&) { return I.r("g1").subset_of(I.r("g0")); }}},
                       [](const Instance& I, const LawContext&) {
                         return obs(Obligation::refine("guar g0 ⪰ guar g1", guar(I.r("g0")), guar(I.r("g1"))));
                       }));
  v.push_back(make_law("guar-introduce", "guarantees", "c ⪰ guar g ⋓ c", {{"g", ParamType::Rel}, {"c", ParamType::Cmd}}, {},
                       [](const Instance& I, const LawContext&) {
                         return obs(Obligation::refine("c ⪰ guar g ⋓ c", I.c("c"), conj(guar(I.r("g")), I.c("c"))));
                       }));
  v.push_back(make_law("guar-merge", "guarantees", "guar g1 ⋓ guar g2 = guar (g1 ∩ g2)",
                       {{"g1", ParamType::Rel}, {"g2", ParamType::Rel}}, {},
                       [](const Instance& I, const LawContext&) {
                         return obs(Obligation::equal("merge", conj(guar(I.r("g1")), guar(I.r("g2"))),
                                                      guar(I.r("g1") & I.r("g2"))));
                       }));
  v.push_back(make_law("guar-seq-distrib", "guarantees", "guar g ⋓ (c;d) ⪰ (guar g ⋓ c);(guar g ⋓ d)",
                       {{"g", ParamType::Rel}, {"c", ParamType::Cmd}, {"d", ParamType::Cmd}}, {},
                       [](const Instance& I, const LawContext&) {
                         Command G = guar(I.r("g"));
                         return obs(Obligation::refine("distribute", conj(G, seq(I.c("c"), I.c("d"))),
                                                       seq(conj(G, I.c("c")), conj(G, I.c("d")))));
                       }));
  v.push_back(make_law("guar-par-distrib", "guarantees", "guar g ⋓ (c ∥ d) ⪰ (guar g ⋓ c) ∥ (guar g ⋓ d)",
                       {{"g", ParamType::Rel}, {"c", ParamType::Cmd}, {"d", ParamType::Cmd}}, {},
                       [](const Instance& I, const LawContext&) {
                         Command G = guar(I.r("g"));
                         return obs(Obligation::refine("distribute", conj(G, par(I.c("c"), I.c("d"))),
                                                       par(conj(G, I.c("c")), conj(G, I.c("d")))));
                       }));
  v.push_back(make_law("guar-assert", "guarantees", "guar g ⋓ {p} = {p}", {{"g", ParamType::Rel}, {"p", ParamType::Set}}, {},
                       [](const Instance& I, const LawContext&) {
                         return obs(Obligation::equal("absorb", conj(guar(I.r("g")), assertion(I.p("p"))), assertion(I.p("p"))));
                       }));
  v.push_back(make_law("distribute-frame", "guarantees", "X:(c;d) ⪰ X:c ; X:d",
                       {{"X", ParamType::VarSet}, {"c", ParamType::Cmd}, {"d", ParamType::Cmd}}, {},
                       [](const Instance& I, const LawContext&) {
                         const auto& X = I.X("X");
                         return obs(Obligation::refine("distribute", frame(X, seq(I.c("c"), I.c("d"))),
                                                       seq(frame(X, I.c("c")), frame(X, I.c("d")))));
                       }));
  v.push_back(make_law("frame-reduce", "guarantees", "(X ∪ Y):c ⪰ Y:c",
                       {{"X", ParamType::VarSet}, {"Y", ParamType::VarSet}, {"c", ParamType::Cmd}}, {},
                       [](const Instance& I, const LawContext&) {
                         auto XY = I.X("X");
                         XY.insert(XY.end(), I.X("Y").begin(), I.X("Y").end());
                         return obs(Obligation::refine("reduce", frame(XY, I.c("c")), frame(I.X("Y"), I.c("c"))));
                       }));
  return v;
}

std::vector<LawSpec> rely_laws() {
  std::vector<LawSpec> v;
  v.push_back(make_law("rely-weaken", "relies", "if r0 ⊆ r1 then rely r0 ⪰ rely r1",
                       {{"r0", ParamType::Rel}, {"r1", ParamType::Rel}},
                       {{"r0 ⊆ r1", [](const Instance& I, const LawContext&) { return I.r("r0").subset_of(I.r("r1")); }}},
                       [](const Instance& I, const LawContext&) {
                         return obs(Obligation::refine("weaken", rely(I.r("r0")), rely(I.r("r1"))));
                       }));
  v.push_back(make_law("rely-remove", "relies", "rely r ⋓ c ⪰ c", {{"r", ParamType::Rel}, {"c", ParamType::Cmd}}, {},
                       [](const Instance& I, const LawContext&) {
                         return obs(Obligation::refine("remove", conj(rely(I.r("r")), I.c("c")), I.c("c")));
                       }));
  v.push_back(make_law("rely-merge", "relies", "rely r1 ⋓ rely r2 = rely (r1 ∩ r2)",
                       {{"r1", ParamType::Rel}, {"r2", ParamType::Rel}}, {},
                       [](const Instance& I, const LawContext&) {
                         return obs(Obligation::equal("merge", conj(rely(I.r("r1")), rely(I.r("r2"))), rely(I.r("r1") & I.r("r2"))));
                       }));
  {
    LawSpec l = make_law(
        "rely-refine-within", "relies",
        "if rely r ⋓ c1 ⪰ rely r ⋓ d then rely r ⋓ c0;c1;c2 ⪰ rely r ⋓ c0;d;c2",
        {{"r", ParamType::Rel}, {"c0", ParamType::Cmd}, {"c1", ParamType::Cmd}, {"c2", ParamType::Cmd}, {"d", ParamType::Cmd}},
        {{"rely r ⋓ c1 ⪰ rely r ⋓ d",
          [](const Instance& I, const LawContext& ctx) {
            Command R = rely(I.r("r"));
            return refines(conj(R, I.c("c1")), conj(R, I.c("d")), ctx.bound);
          }}},
        [](const Instance& I, const LawContext&) {
          Command R = rely(I.r("r"));
          return obs(Obligation::refine("refine within", conj(R, seq({I.c("c0"), I.c("c1"), I.c("c2")})),
                                        conj(R, seq({I.c("c0"), I.c("d"), I.c("c2")}))));
        });
    l.steer = [](Instance& I, const LawContext& ctx, std::mt19937_64& rng) {
      // A guarantee conjoined to c1 always refines it.
      if (coin(rng, 0.5)) I.cmds["d"] = conj(guar(random_rel(ctx.space, rng)), I.c("c1"));
    };
    v.push_back(l);
  }
  v.push_back(make_law("rely-par-distrib", "relies",
                       "rely r ⋓ (c ∥ d) ⪰ (rely r ⋓ guar r ⋓ c) ∥ (rely r ⋓ guar r ⋓ d)",
                       {{"r", ParamType::Rel}, {"c", ParamType::Cmd}, {"d", ParamType::Cmd}}, {},
                       [](const Instance& I, const LawContext&) {
                         Command R = rely(I.r("r")), G = guar(I.r("r"));
                         return obs(Obligation::refine("distribute", conj(R, par(I.c("c"), I.c("d"))),
                                                       par(conj(R, conj(G, I.c("c"))), conj(R, conj(G, I.c("d"))))));
                       }));
  v.push_back(make_law("rely-guar", "relies", "rely r ∥ guar r = rely r", {{"r", ParamType::Rel}}, {},
                       [](const Instance& I, const LawContext&) {
                         return obs(Obligation::equal("absorb", par(rely(I.r("r")), guar(I.r("r"))), rely(I.r("r"))));
                       }));
  return v;
}

std::vector<LawSpec> termination_laws() {
  std::vector<LawSpec> v;
  v.push_back(make_law("seq-term-term", "termination", "term ; term = term", {}, {},
                       [](const Instance&, const LawContext& ctx) {
                         return obs(Obligation::equal("term;term", seq(term(ctx.space), term(ctx.space)), term(ctx.space)));
                       }));
  v.push_back(make_law("par-term-term", "termination", "term ∥ term = term", {}, {},
                       [](const Instance&, const LawContext& ctx) {
                         return obs(Obligation::equal("term∥term", par(term(ctx.space), term(ctx.space)), term(ctx.space)));
                       }));
  return v;
}

std::vector<LawSpec> spec_laws() {
  std::vector<LawSpec> v;
  v.push_back(make_law("sync-distribute-relation", "specifications",
                       "c ⊗ ∨σ τ{σ};d;τ(q(|σ|)) = ∨σ τ{σ};(c ⊗ d);τ(q(|σ|))",
                       {{"c", ParamType::Cmd}, {"d", ParamType::Cmd}, {"q", ParamType::Rel}, {"op", ParamType::Op}}, {},
                       [](const Instance& I, const LawContext& ctx) {
                         const Rel& q = I.r("q");
                         int op = I.op("op");
                         Command lhs = sync_op(op, I.c("c"), per_state(ctx.space, q, [&](State) { return I.c("d"); }));
                         Command rhs = per_state(ctx.space, q, [&](State) { return sync_op(op, I.c("c"), I.c("d")); });
                         return obs(Obligation::equal("distribute", lhs, rhs));
                       }));
  v.push_back(make_law("partially-correct", "specifications",
                       "c is partially correct w.r.t. q iff c ⋓ pspec q = c", {{"c", ParamType::Cmd}, {"q", ParamType::Rel}}, {},
                       [](const Instance& I, const LawContext& ctx) {
                         const Command& c = I.c("c");
                         bool by_definition = equivalent(c, per_state(ctx.space, I.r("q"), [&](State) { return c; }), ctx.bound);
                         bool by_conjunction = equivalent(conj(c, pspec(I.r("q"))), c, ctx.bound);
                         return obs(Obligation::fact("characterisation", by_definition == by_conjunction,
                                                     by_definition ? "definition holds but c ⋓ pspec q ≠ c"
                                                                   : "definition fails but c ⋓ pspec q = c"));
                       }));
  v.push_back(make_law("spec-refines", "specifications",
                       "if c is partially correct w.r.t. q and term ⪰ c then spec q ⪰ c",
                       {{"c", ParamType::Cmd}, {"q", ParamType::Rel}},
                       {{"c partially correct w.r.t. q",
                         [](const Instance& I, const LawContext& ctx) {
                           const Command& c = I.c("c");
                           return equivalent(c, per_state(ctx.space, I.r("q"), [&](State) { return c; }), ctx.bound);
                         }},
                        {"term ⪰ c",
                         [](const Instance& I, const LawContext& ctx) { return refines(term(ctx.space), I.c("c"), ctx.bound); }}},
                       [](const Instance& I, const LawContext&) {
                         return obs(Obligation::refine("spec q ⪰ c", spec(I.r("q")), I.c("c")));
                       }));
  v.push_back(make_law("spec-distribute-sync", "specifications", "c ⊗ (d ⋓ pspec q) = (c ⊗ d) ⋓ pspec q",
                       {{"c", ParamType::Cmd}, {"d", ParamType::Cmd}, {"q", ParamType::Rel}, {"op", ParamType::Op}}, {},
                       [](const Instance& I, const LawContext&) {
                         int op = I.op("op");
                         Command P = pspec(I.r("q"));
                         return obs(Obligation::equal("distribute", sync_op(op, I.c("c"), conj(I.c("d"), P)),
                                                      conj(sync_op(op, I.c("c"), I.c("d")), P)));
                       }));
  v.push_back(make_law("spec-strengthen", "specifications", "if q1 ⊇ q2 then pspec q1 ⪰ pspec q2 and spec q1 ⪰ spec q2",
                       {{"q1", ParamType::Rel}, {"q2", ParamType::Rel}},
                       {{"q1 ⊇ q2", [](const Instance& I, const LawContext&) { return I.r("q2").subset_of(I.r("q1")); }}},
                       [](const Instance& I, const LawContext&) {
                         return obs(Obligation::refine("pspec", pspec(I.r("q1")), pspec(I.r("q2"))),
                                    Obligation::refine("spec", spec(I.r("q1")), spec(I.r("q2"))));
                       }));
  v.push_back(make_law("spec-univ", "specifications", "pspec univ = chaos and spec univ = term", {}, {},
                       [](const Instance&, const LawContext& ctx) {
                         Rel U = Rel::univ(ctx.space);
                         return obs(Obligation::equal("pspec", pspec(U), chaos(ctx.space)),
                                    Obligation::equal("spec", spec(U), term(ctx.space)));
                       }));
  v.push_back(make_law("spec-introduce", "specifications", "chaos ⪰ pspec q and term ⪰ spec q", {{"q", ParamType::Rel}}, {},
                       [](const Instance& I, const LawContext& ctx) {
                         return obs(Obligation::refine("pspec", chaos(ctx.space), pspec(I.r("q"))),
                                    Obligation::refine("spec", term(ctx.space), spec(I.r("q"))));
                       }));
  v.push_back(make_law("test-restricts-spec", "specifications", "τp;pspec(p ◁ q) = τp;pspec q (and for spec)",
                       {{"p", ParamType::Set}, {"q", ParamType::Rel}}, {},
                       [](const Instance& I, const LawContext&) {
                         Command t = test(I.p("p"));
                         Rel pq = dom_restrict(I.p("p"), I.r("q"));
                         return obs(Obligation::equal("pspec", seq(t, pspec(pq)), seq(t, pspec(I.r("q")))),
                                    Obligation::equal("spec", seq(t, spec(pq)), seq(t, spec(I.r("q")))));
                       }));
  v.push_back(make_law("assert-restricts-spec", "specifications", "{p};pspec(p ◁ q) = {p};pspec q (and for spec)",
                       {{"p", ParamType::Set}, {"q", ParamType::Rel}}, {},
                       [](const Instance& I, const LawContext&) {
                         Command a = assertion(I.p("p"));
                         Rel pq = dom_restrict(I.p("p"), I.r("q"));
                         return obs(Obligation::equal("pspec", seq(a, pspec(pq)), seq(a, pspec(I.r("q")))),
                                    Obligation::equal("spec", seq(a, spec(pq)), seq(a, spec(I.r("q")))));
                       }));
  v.push_back(make_law(
      "spec-strengthen-under-pre", "specifications",
      "if p ◁ q2 ⊆ q1 then {p};X:pspec q1 ⪰ {p};X:pspec q2 (and for spec)",
      {{"p", ParamType::Set}, {"q1", ParamType::Rel}, {"q2", ParamType::Rel}, {"X", ParamType::VarSet}},
      {{"p ◁ q2 ⊆ q1",
        [](const Instance& I, const LawContext&) { return dom_restrict(I.p("p"), I.r("q2")).subset_of(I.r("q1")); }}},
      [](const Instance& I, const LawContext&) {
        Command a = assertion(I.p("p"));
        const auto& X = I.X("X");
        return obs(Obligation::refine("pspec", seq(a, frame(X, pspec(I.r("q1")))), seq(a, frame(X, pspec(I.r("q2"))))),
                   Obligation::refine("spec", seq(a, frame(X, spec(I.r("q1")))), seq(a, frame(X, spec(I.r("q2"))))));
      }));
  v.push_back(make_law("spec-test-restricts", "specifications", "pspec q;τp = pspec(q ▷ p) (and for spec)",
                       {{"q", ParamType::Rel}, {"p", ParamType::Set}}, {},
                       [](const Instance& I, const LawContext&) {
                         Command t = test(I.p("p"));
                         Rel qp = range_restrict(I.r("q"), I.p("p"));
                         return obs(Obligation::equal("pspec", seq(pspec(I.r("q")), t), pspec(qp)),
                                    Obligation::equal("spec", seq(spec(I.r("q")), t), spec(qp)));
                       }));
  v.push_back(make_law("spec-assert-restricts", "specifications", "pspec(q ▷ p);{p} = pspec(q ▷ p) (and for spec)",
                       {{"q", ParamType::Rel}, {"p", ParamType::Set}}, {},
                       [](const Instance& I, const LawContext&) {
                         Command a = assertion(I.p("p"));
                         Rel qp = range_restrict(I.r("q"), I.p("p"));
                         return obs(Obligation::equal("pspec", seq(pspec(qp), a), pspec(qp)),
                                    Obligation::equal("spec", seq(spec(qp), a), spec(qp)));
                       }));
  v.push_back(make_law("spec-test-commute", "specifications", "pspec q;τ(q(|p|)) ⪰ τp;pspec q (and for spec)",
                       {{"q", ParamType::Rel}, {"p", ParamType::Set}}, {},
                       [](const Instance& I, const LawContext&) {
                         Command t0 = test(I.p("p")), t1 = test(image(I.r("q"), I.p("p")));
                         return obs(Obligation::refine("pspec", seq(pspec(I.r("q")), t1), seq(t0, pspec(I.r("q")))),
                                    Obligation::refine("spec", seq(spec(I.r("q")), t1), seq(t0, spec(I.r("q")))));
                       }));
  v.push_back(make_law("spec-to-sequential", "specifications", "pspec(q1 ⨾ q2) ⪰ pspec q1;pspec q2 (and for spec)",
                       {{"q1", ParamType::Rel}, {"q2", ParamType::Rel}}, {},
                       [](const Instance& I, const LawContext&) {
                         Rel q = compose(I.r("q1"), I.r("q2"));
                         return obs(Obligation::refine("pspec", pspec(q), seq(pspec(I.r("q1")), pspec(I.r("q2")))),
                                    Obligation::refine("spec", spec(q), seq(spec(I.r("q1")), spec(I.r("q2")))));
                       }));
  v.push_back(spec_seq_introduce());
  v.push_back(make_law("sync-spec-spec", "specifications", "pspec q0 ⊗ pspec q1 = pspec(q0 ∩ q1) (and for spec)",
                       {{"q0", ParamType::Rel}, {"q1", ParamType::Rel}, {"op", ParamType::Op}}, {},
                       [](const Instance& I, const LawContext&) {
                         int op = I.op("op");
                         Rel q = I.r("q0") & I.r("q1");
                         return obs(Obligation::equal("pspec", sync_op(op, pspec(I.r("q0")), pspec(I.r("q1"))), pspec(q)),
                                    Obligation::equal("spec", sync_op(op, spec(I.r("q0")), spec(I.r("q1"))), spec(q)));
                       }));
  return v;
}

std::vector<LawSpec> stability_laws() {
  std::vector<LawSpec> v;
  v.push_back(make_law("stable-transitive", "stability", "if p is stable under r then rtc(r)(|p|) = p",
                       {{"p", ParamType::Set}, {"r", ParamType::Rel}},
                       {{"p stable under r", [](const Instance& I, const LawContext&) { return is_stable(I.p("p"), I.r("r")); }}},
                       [](const Instance& I, const LawContext&) {
                         StateSet img = image(rtc(I.r("r")), I.p("p"));
                         return obs(Obligation::fact("rtc(r)(|p|) = p", img == I.p("p"), "rtc(r)(|p|) = " + print_set(img)));
                       }));
  v.push_back(make_law("guar-test-commute-under-rely", "stability",
                       "if p is stable under r and g then rely r ⋓ guar g;τp ⪰ rely r ⋓ τp;guar g",
                       {{"r", ParamType::Rel}, {"g", ParamType::Rel}, {"p", ParamType::Set}},
                       {{"p stable under r", [](const Instance& I, const LawContext&) { return is_stable(I.p("p"), I.r("r")); }},
                        {"p stable under g", [](const Instance& I, const LawContext&) { return is_stable(I.p("p"), I.r("g")); }}},
                       [](const Instance& I, const LawContext&) {
                         Command R = rely(I.r("r")), G = guar(I.r("g")), t = test(I.p("p"));
                         return obs(Obligation::refine("commute", conj(R, seq(G, t)), conj(R, seq(t, G))));
                       }));
  v.push_back(make_law("spec-trade-rely-guar", "stability", "rely r ⋓ pspec(rtc(r ∪ g)) ⪰ rely r ⋓ guar g",
                       {{"r", ParamType::Rel}, {"g", ParamType::Rel}}, {},
                       [](const Instance& I, const LawContext&) {
                         Command R = rely(I.r("r"));
                         return obs(Obligation::refine("trade", conj(R, pspec(rtc(I.r("r") | I.r("g")))), conj(R, guar(I.r("g")))));
                       }));
  v.push_back(make_law("spec-trading", "stability",
                       "rely r ⋓ guar g ⋓ spec(rtc(r ∪ g) ∩ q) = rely r ⋓ guar g ⋓ spec q",
                       {{"r", ParamType::Rel}, {"g", ParamType::Rel}, {"q", ParamType::Rel}}, {},
                       [](const Instance& I, const LawContext&) {
                         Command RG = conj(rely(I.r("r")), guar(I.r("g")));
                         Rel t = rtc(I.r("r") | I.r("g")) & I.r("q");
                         return obs(Obligation::equal("trade", conj(RG, spec(t)), conj(RG, spec(I.r("q")))));
                       }));
  v.push_back(spec_strengthen_with_trading());
  v.push_back(make_law(
      "frame-restrict", "stability",
      "if Z ⊆ X, Y ⊆ Z̄ and r ⊆ id(Y) then rely r ⋓ X:spec(id(Y) ∩ q) ⪰ rely r ⋓ Z:spec q",
      {{"X", ParamType::VarSet}, {"Y", ParamType::VarSet}, {"Z", ParamType::VarSet}, {"r", ParamType::Rel}, {"q", ParamType::Rel}},
      {{"Z ⊆ X", [](const Instance& I, const LawContext&) { return names_subset(I.X("Z"), I.X("X")); }},
       {"Y ⊆ Z̄", [](const Instance& I, const LawContext&) { return names_disjoint(I.X("Y"), I.X("Z")); }},
       {"r ⊆ id(Y)",
        [](const Instance& I, const LawContext& ctx) { return I.r("r").subset_of(id_on(ctx.space, I.X("Y"))); }}},
      [](const Instance& I, const LawContext& ctx) {
        Command R = rely(I.r("r"));
        Rel q = id_on(ctx.space, I.X("Y")) & I.r("q");
        return obs(Obligation::refine("restrict", conj(R, frame(I.X("X"), spec(q))), conj(R, frame(I.X("Z"), spec(I.r("q"))))));
      }));
  v.push_back(make_law("tolerates-transitive", "stability",
                       "if q tolerates r from p then p ◁ rtc(r) ⨾ q ⨾ rtc(r) ⊆ q",
                       {{"q", ParamType::Rel}, {"r", ParamType::Rel}, {"p", ParamType::Set}},
                       {{"q tolerates r from p",
                         [](const Instance& I, const LawContext&) { return tolerates(I.r("q"), I.r("r"), I.p("p")); }}},
                       [](const Instance& I, const LawContext&) {
                         Rel t = rtc(I.r("r"));
                         Rel lhs = dom_restrict(I.p("p"), compose(compose(t, I.r("q")), t));
                         return obs(containment("p ◁ rtc(r) ⨾ q ⨾ rtc(r) ⊆ q", lhs, I.r("q")));
                       }));
  v.push_back(make_law("interference-before", "stability",
                       "if p ◁ (r ⨾ q) ⊆ q and p is stable under r then p ◁ rtc(r) ⨾ q ⊆ q",
                       {{"p", ParamType::Set}, {"r", ParamType::Rel}, {"q", ParamType::Rel}},
                       {{"p ◁ (r ⨾ q) ⊆ q",
                         [](const Instance& I, const LawContext&) {
                           return dom_restrict(I.p("p"), compose(I.r("r"), I.r("q"))).subset_of(I.r("q"));
                         }},
                        {"p stable under r", [](const Instance& I, const LawContext&) { return is_stable(I.p("p"), I.r("r")); }}},
                       [](const Instance& I, const LawContext&) {
                         Rel lhs = dom_restrict(I.p("p"), compose(rtc(I.r("r")), I.r("q")));
                         return obs(containment("p ◁ rtc(r) ⨾ q ⊆ q", lhs, I.r("q")));
                       }));
  v.push_back(make_law("interference-after", "stability", "if p ◁ (q ⨾ r) ⊆ q then p ◁ q ⨾ rtc(r) ⊆ q",
                       {{"p", ParamType::Set}, {"r", ParamType::Rel}, {"q", ParamType::Rel}},
                       {{"p ◁ (q ⨾ r) ⊆ q",
                         [](const Instance& I, const LawContext&) {
                           return dom_restrict(I.p("p"), compose(I.r("q"), I.r("r"))).subset_of(I.r("q"));
                         }}},
                       [](const Instance& I, const LawContext&) {
                         Rel lhs = dom_restrict(I.p("p"), compose(I.r("q"), rtc(I.r("r"))));
                         return obs(containment("p ◁ q ⨾ rtc(r) ⊆ q", lhs, I.r("q")));
                       }));
  return v;
}

std::vector<LawSpec> parallel_laws() {
  std::vector<LawSpec> v;
  v.push_back(make_law(
      "spec-introduce-par", "parallel",
      "rely r ⋓ spec(q0 ∩ q1) ⪰ (rely(r ∪ r0) ⋓ guar r1 ⋓ spec q0) ∥ (rely(r ∪ r1) ⋓ guar r0 ⋓ spec q1)",
      {{"r", ParamType::Rel}, {"r0", ParamType::Rel}, {"r1", ParamType::Rel}, {"q0", ParamType::Rel}, {"q1", ParamType::Rel}}, {},
      [](const Instance& I, const LawContext&) {
        const Rel &r = I.r("r"), &r0 = I.r("r0"), &r1 = I.r("r1");
        Command lhs = conj(rely(r), spec(I.r("q0") & I.r("q1")));
        Command rhs = par(conj(rely(r | r0), conj(guar(r1), spec(I.r("q0")))),
                          conj(rely(r | r1), conj(guar(r0), spec(I.r("q1")))));
        return obs(Obligation::refine("introduce parallel", lhs, rhs));
      }));
  return v;
}

std::vector<LawSpec> opt_laws() {
  std::vector<LawSpec> v;
  v.push_back(make_law("opt-strengthen-under-pre", "optional-step", "if p ◁ q2 ⊆ q1 then {p};opt q1 ⪰ opt q2",
                       {{"p", ParamType::Set}, {"q1", ParamType::Rel}, {"q2", ParamType::Rel}},
                       {{"p ◁ q2 ⊆ q1",
                         [](const Instance& I, const LawContext&) { return dom_restrict(I.p("p"), I.r("q2")).subset_of(I.r("q1")); }}},
                       [](const Instance& I, const LawContext&) {
                         return obs(Obligation::refine("strengthen", seq(assertion(I.p("p")), opt(I.r("q1"))), opt(I.r("q2"))));
                       }));
  v.push_back(make_law("spec-to-pgm", "optional-step", "spec q ⪰ π q", {{"q", ParamType::Rel}}, {},
                       [](const Instance& I, const LawContext&) {
                         return obs(Obligation::refine("spec q ⪰ π q", spec(I.r("q")), pgm(I.r("q"))));
                       }));
  v.push_back(make_law("spec-to-test", "optional-step", "spec q ⪰ τ(dom(q ∩ id))", {{"q", ParamType::Rel}}, {},
                       [](const Instance& I, const LawContext& ctx) {
                         return obs(Obligation::refine("spec q ⪰ test", spec(I.r("q")), test(domain(I.r("q") & Rel::id(ctx.space)))));
                       }));
  v.push_back(make_law("spec-to-opt", "optional-step", "spec q ⪰ opt q", {{"q", ParamType::Rel}}, {},
                       [](const Instance& I, const LawContext&) {
                         return obs(Obligation::refine("spec q ⪰ opt q", spec(I.r("q")), opt(I.r("q"))));
                       }));
  v.push_back(guar_opt());
  return v;
}

std::vector<LawSpec> idle_laws() {
  std::vector<LawSpec> v;
  v.push_back(guar_idle());
  v.push_back(rely_idle_stable());
  v.push_back(make_law("rely-idle", "idle", "if p is stable under r then rely r ⋓ {p};spec(rtc(r) ▷ p) ⪰ rely r ⋓ idle",
                       {{"r", ParamType::Rel}, {"p", ParamType::Set}},
                       {{"p stable under r", [](const Instance& I, const LawContext&) { return is_stable(I.p("p"), I.r("r")); }}},
                       [](const Instance& I, const LawContext& ctx) {
                         Command R = rely(I.r("r"));
                         Command lhs = conj(R, seq(assertion(I.p("p")), spec(range_restrict(rtc(I.r("r")), I.p("p")))));
                         return obs(Obligation::refine("idle", lhs, conj(R, idle(ctx.space))));
                       }));
  v.push_back(tolerate_interference());
  v.push_back(make_law("par-idle-idle", "idle", "idle ∥ idle = idle", {}, {},
                       [](const Instance&, const LawContext& ctx) {
                         return obs(Obligation::equal("idle∥idle", par(idle(ctx.space), idle(ctx.space)), idle(ctx.space)));
                       }));
  v.push_back(make_law("test-par-idle", "idle", "idle;t;idle = (skip;t;skip) ∥ idle", {{"p", ParamType::Set}}, {},
                       [](const Instance& I, const LawContext& ctx) {
                         const Space& sp = ctx.space;
                         Command t = test(I.p("p"));
                         return obs(Obligation::equal("expand", seq({idle(sp), t, idle(sp)}), par(seq({skip(sp), t, skip(sp)}), idle(sp))));
                       }));
  v.push_back(make_law("idle-test-idle", "idle", "(idle;t;idle) ∥ idle = idle;t;idle", {{"p", ParamType::Set}}, {},
                       [](const Instance& I, const LawContext& ctx) {
                         const Space& sp = ctx.space;
                         Command iti = seq({idle(sp), test(I.p("p")), idle(sp)});
                         return obs(Obligation::equal("absorb", par(iti, idle(sp)), iti));
                       }));
  v.push_back(make_law("idle-expanded", "idle", "idle = fin(π id ∨ ε univ);om(ε univ)", {}, {},
                       [](const Instance&, const LawContext& ctx) {
                         const Space& sp = ctx.space;
                         Command rhs = seq(fin(choice(pgm(Rel::id(sp)), env(Rel::univ(sp)))), om(env(Rel::univ(sp))));
                         return obs(Obligation::equal("expand", idle(sp), rhs));
                       }));
  return v;
}

std::vector<LawSpec> atomic_spec_laws() {
  std::vector<LawSpec> v;
  v.push_back(make_law("atomic-spec-weaken-pre", "atomic-spec", "if p0 ⊆ p1 then ⟨p0,q⟩ ⪰ ⟨p1,q⟩",
                       {{"p0", ParamType::Set}, {"p1", ParamType::Set}, {"q", ParamType::Rel}},
                       {{"p0 ⊆ p1", [](const Instance& I, const LawContext&) { return I.p("p0").subset_of(I.p("p1")); }}},
                       [](const Instance& I, const LawContext&) {
                         return obs(Obligation::refine("weaken", atomic(I.p("p0"), I.r("q")), atomic(I.p("p1"), I.r("q"))));
                       }));
  v.push_back(atomic_spec_strengthen_post());
  v.push_back(make_law("atomic-guar", "atomic-spec", "if g is reflexive then guar g ⋓ ⟨p,q⟩ ⪰ ⟨p, g ∩ q⟩",
                       {{"g", ParamType::Rel}, {"p", ParamType::Set}, {"q", ParamType::Rel}},
                       {{"g reflexive", [](const Instance& I, const LawContext&) { return I.r("g").is_reflexive(); }}},
                       [](const Instance& I, const LawContext&) {
                         return obs(Obligation::refine("guarantee", conj(guar(I.r("g")), atomic(I.p("p"), I.r("q"))),
                                                       atomic(I.p("p"), I.r("g") & I.r("q"))));
                       }));
  v.push_back(make_law(
      "atomic-spec-introduce", "atomic-spec",
      "if g is reflexive and q tolerates r from p then rely r ⋓ guar g ⋓ {p};spec q ⪰ rely r ⋓ ⟨p, g ∩ q⟩",
      {{"r", ParamType::Rel}, {"g", ParamType::Rel}, {"p", ParamType::Set}, {"q", ParamType::Rel}},
      {{"g reflexive", [](const Instance& I, const LawContext&) { return I.r("g").is_reflexive(); }},
       {"q tolerates r from p", [](const Instance& I, const LawContext&) { return tolerates(I.r("q"), I.r("r"), I.p("p")); }}},
      [](const Instance& I, const LawContext&) {
        Command R = rely(I.r("r"));
        Command lhs = conj(R, conj(guar(I.r("g")), seq(assertion(I.p("p")), spec(I.r("q")))));
        return obs(Obligation::refine("introduce", lhs, conj(R, atomic(I.p("p"), I.r("g") & I.r("q")))));
      }));
  return v;
}

std::vector<LawSpec> expression_laws() {
  std::vector<LawSpec> v;
  v.push_back(make_law("idle-eval", "expressions", "idle ⪰ [e]k", {{"e", ParamType::Expr}, {"k", ParamType::Value}}, {},
                       [](const Instance& I, const LawContext& ctx) {
                         return obs(Obligation::refine("idle ⪰ eval", idle(ctx.space), eval(ctx.space, I.e("e"), I.k("k"))));
                       }));
  v.push_back(make_law("guar-eval", "expressions", "if g is reflexive then guar g ⋓ [e]k = [e]k",
                       {{"g", ParamType::Rel}, {"e", ParamType::Expr}, {"k", ParamType::Value}},
                       {{"g reflexive", [](const Instance& I, const LawContext&) { return I.r("g").is_reflexive(); }}},
                       [](const Instance& I, const LawContext& ctx) {
                         Command ev = eval(ctx.space, I.e("e"), I.k("k"));
                         return obs(Obligation::equal("absorb", conj(guar(I.r("g")), ev), ev));
                       }));
  v.push_back(make_law("invariant-expr-stable", "expressions", "if e is invariant under r then eq(k,e) is stable under r",
                       {{"e", ParamType::Expr}, {"r", ParamType::Rel}, {"k", ParamType::Value}},
                       {{"e invariant under r", [](const Instance& I, const LawContext&) { return is_invariant_under(I.e("e"), I.r("r")); }}},
                       [](const Instance& I, const LawContext& ctx) {
                         StateSet s = eq_val(I.k("k"), I.e("e"), ctx.space);
                         return obs(Obligation::fact("eq(k,e) stable under r", is_stable(s, I.r("r")),
                                                     "r(|eq(k,e)|) = " + print_set(image(I.r("r"), s))));
                       }));
  v.push_back(make_law("eval-single-reference", "expressions",
                       "if e is single reference under r then rely r ⋓ idle;τ(eq(k,e));idle ⪰ [e]k",
                       {{"e", ParamType::Expr}, {"r", ParamType::Rel}, {"k", ParamType::Value}},
                       {{"e single reference under r",
                         [](const Instance& I, const LawContext&) { return is_single_reference(I.e("e"), I.r("r")); }}},
                       [](const Instance& I, const LawContext& ctx) {
                         const Space& sp = ctx.space;
                         Command lhs = conj(rely(I.r("r")), seq({idle(sp), test(eq_val(I.k("k"), I.e("e"), sp)), idle(sp)}));
                         return obs(Obligation::refine("single state", lhs, eval(sp, I.e("e"), I.k("k"))));
                       }));
  v.push_back(make_law(
      "rely-eval", "expressions",
      "if e is single reference under r, q tolerates r from p and (p ∩ eq(k,e)) ◁ id ⊆ q then rely r ⋓ {p};spec q ⪰ [e]k",
      {{"k", ParamType::Value}, {"e", ParamType::Expr}, {"p", ParamType::Set}, {"r", ParamType::Rel}, {"q", ParamType::Rel}},
      {{"e single reference under r", [](const Instance& I, const LawContext&) { return is_single_reference(I.e("e"), I.r("r")); }},
       {"q tolerates r from p", [](const Instance& I, const LawContext&) { return tolerates(I.r("q"), I.r("r"), I.p("p")); }},
       {"(p ∩ eq(k,e)) ◁ id ⊆ q",
        [](const Instance& I, const LawContext& ctx) {
          StateSet pk = I.p("p") & eq_val(I.k("k"), I.e("e"), ctx.space);
          return dom_restrict(pk, Rel::id(ctx.space)).subset_of(I.r("q"));
        }}},
      [](const Instance& I, const LawContext& ctx) {
        Command lhs = conj(rely(I.r("r")), seq(assertion(I.p("p")), spec(I.r("q"))));
        return obs(Obligation::refine("evaluate", lhs, eval(ctx.space, I.e("e"), I.k("k"))));
      }));
  v.push_back(make_law(
      "rely-eval-expr", "expressions",
      "if e is single reference under r, p is stable under r, p ∩ eq(k,e) ⊆ p0 and p0 is stable under p ◁ r "
      "then rely r ⋓ {p};spec(rtc(r) ▷ (p ∩ p0)) ⪰ [e]k",
      {{"k", ParamType::Value}, {"e", ParamType::Expr}, {"p", ParamType::Set}, {"p0", ParamType::Set}, {"r", ParamType::Rel}},
      {{"e single reference under r", [](const Instance& I, const LawContext&) { return is_single_reference(I.e("e"), I.r("r")); }},
       {"p stable under r", [](const Instance& I, const LawContext&) { return is_stable(I.p("p"), I.r("r")); }},
       {"p ∩ eq(k,e) ⊆ p0",
        [](const Instance& I, const LawContext& ctx) {
          return (I.p("p") & eq_val(I.k("k"), I.e("e"), ctx.space)).subset_of(I.p("p0"));
        }},
       {"p0 stable under p ◁ r",
        [](const Instance& I, const LawContext&) { return is_stable(I.p("p0"), dom_restrict(I.p("p"), I.r("r"))); }}},
      [](const Instance& I, const LawContext& ctx) {
        Rel q = range_restrict(rtc(I.r("r")), I.p("p") & I.p("p0"));
        Command lhs = conj(rely(I.r("r")), seq(assertion(I.p("p")), spec(q)));
        return obs(Obligation::refine("evaluate", lhs, eval(ctx.space, I.e("e"), I.k("k"))));
      }));
  return v;
}

// (p ◁ id(x̄)) ▷ eq(k,x): state changes that set x to k and nothing else.
Rel set_x_to(const Space& sp, const std::string& x, Value k) {
  return range_restrict(frame_rel(sp, {x}), eq_val(k, ExprNode::variable(sp, x), sp));
}

Command assign_lhs(const Instance& I, const Rel& q) {
  Command ctx = conj(rely(I.r("r")), guar(I.r("g")));
  return conj(ctx, seq(assertion(I.p("p")), frame({I.x("x")}, spec(q))));
}

void steer_assign(Instance& I, const LawContext& ctx, std::mt19937_64& rng) {
  // Small relations rarely tolerate interference; favour identity-like relies.
  if (coin(rng, 0.4)) I.rels["r"] = random_rel(ctx.space, rng) & Rel::id(ctx.space);
  if (coin(rng, 0.3)) I.rels["g"] = Rel::univ(ctx.space);
  if (coin(rng, 0.3)) I.rels["q"] = Rel::univ(ctx.space);
}

std::vector<LawSpec> assignment_laws() {
  std::vector<LawSpec> v;
  {
    LawSpec l = make_law(
        "rely-guar-assign", "assignment",
        "if g is reflexive, e is single reference under r, q tolerates r from p and for all k "
        "(p ∩ eq(k,e)) ◁ rtc(r) ⨾ id(x̄) ▷ eq(k,x) ⊆ q and (p ∩ rtc(r)(|eq(k,e)|)) ◁ id(x̄) ▷ eq(k,x) ⊆ g "
        "then rely r ⋓ guar g ⋓ {p};x:spec q ⪰ x := e",
        {{"p", ParamType::Set}, {"g", ParamType::Rel}, {"r", ParamType::Rel}, {"q", ParamType::Rel}, {"x", ParamType::Var},
         {"e", ParamType::Expr}},
        {{"g reflexive", [](const Instance& I, const LawContext&) { return I.r("g").is_reflexive(); }},
         {"e single reference under r", [](const Instance& I, const LawContext&) { return is_single_reference(I.e("e"), I.r("r")); }},
         {"q tolerates r from p", [](const Instance& I, const LawContext&) { return tolerates(I.r("q"), I.r("r"), I.p("p")); }},
         {"assignment (a)",
          [](const Instance& I, const LawContext& ctx) {
            return for_all_values(ctx, I.e("e"), [&](Value k) {
              StateSet pk = I.p("p") & eq_val(k, I.e("e"), ctx.space);
              Rel lhs = dom_restrict(pk, compose(rtc(I.r("r")), set_x_to(ctx.space, I.x("x"), k)));
              return lhs.subset_of(I.r("q"));
            });
          }},
         {"assignment (b)",
          [](const Instance& I, const LawContext& ctx) {
            return for_all_values(ctx, I.e("e"), [&](Value k) {
              StateSet pk = I.p("p") & image(rtc(I.r("r")), eq_val(k, I.e("e"), ctx.space));
              return dom_restrict(pk, set_x_to(ctx.space, I.x("x"), k)).subset_of(I.r("g"));
            });
          }}},
        [](const Instance& I, const LawContext& ctx) {
          return obs(Obligation::refine("assign", assign_lhs(I, I.r("q")), assign(ctx.space, I.x("x"), I.e("e"))));
        });
    l.steer = steer_assign;
    v.push_back(l);
  }
  {
    LawSpec l = make_law(
        "rely-guar-assign-stable-pre", "assignment",
        "if g is reflexive, e is single reference under r, q tolerates r from p and for all k some p1 ⊇ eq(k,e) "
        "stable under r has (p ∩ p1) ◁ id(x̄) ▷ eq(k,x) ⊆ g ∩ q then rely r ⋓ guar g ⋓ {p};x:spec q ⪰ x := e",
        {{"p", ParamType::Set}, {"s", ParamType::Set}, {"g", ParamType::Rel}, {"r", ParamType::Rel}, {"q", ParamType::Rel},
         {"x", ParamType::Var}, {"e", ParamType::Expr}},
        {{"g reflexive", [](const Instance& I, const LawContext&) { return I.r("g").is_reflexive(); }},
         {"e single reference under r", [](const Instance& I, const LawContext&) { return is_single_reference(I.e("e"), I.r("r")); }},
         {"q tolerates r from p", [](const Instance& I, const LawContext&) { return tolerates(I.r("q"), I.r("r"), I.p("p")); }},
         {"p1 stable under r",
          [](const Instance& I, const LawContext& ctx) {
            return for_all_values(ctx, I.e("e"), [&](Value k) { return is_stable(stable_pre_p1(I, ctx, k), I.r("r")); });
          }},
         {"eq(k,e) ⊆ p1",
          [](const Instance& I, const LawContext& ctx) {
            return for_all_values(ctx, I.e("e"), [&](Value k) {
              return eq_val(k, I.e("e"), ctx.space).subset_of(stable_pre_p1(I, ctx, k));
            });
          }},
         {"assignment (c)",
          [](const Instance& I, const LawContext& ctx) {
            return for_all_values(ctx, I.e("e"), [&](Value k) {
              StateSet pp = I.p("p") & stable_pre_p1(I, ctx, k);
              return dom_restrict(pp, set_x_to(ctx.space, I.x("x"), k)).subset_of(I.r("g") & I.r("q"));
            });
          }}},
        [](const Instance& I, const LawContext& ctx) {
          return obs(Obligation::refine("assign", assign_lhs(I, I.r("q")), assign(ctx.space, I.x("x"), I.e("e"))));
        });
    l.steer = steer_assign;
    v.push_back(l);
  }
  {
    LawSpec l = make_law(
        "local-expr-assign", "assignment",
        "if e is single reference and invariant under r, g is reflexive, q tolerates r from p and for all k "
        "(p ∩ eq(k,e)) ◁ id(x̄) ▷ eq(k,x) ⊆ g ∩ q then rely r ⋓ guar g ⋓ {p};x:spec q ⪰ x := e",
        {{"p", ParamType::Set}, {"g", ParamType::Rel}, {"r", ParamType::Rel}, {"q", ParamType::Rel}, {"x", ParamType::Var},
         {"e", ParamType::Expr}},
        {{"e single reference under r", [](const Instance& I, const LawContext&) { return is_single_reference(I.e("e"), I.r("r")); }},
         {"e invariant under r", [](const Instance& I, const LawContext&) { return is_invariant_under(I.e("e"), I.r("r")); }},
         {"g reflexive", [](const Instance& I, const LawContext&) { return I.r("g").is_reflexive(); }},
         {"q tolerates r from p", [](const Instance& I, const LawContext&) { return tolerates(I.r("q"), I.r("r"), I.p("p")); }},
         {"(p ∩ eq(k,e)) ◁ id(x̄) ▷ eq(k,x) ⊆ g ∩ q",
          [](const Instance& I, const LawContext& ctx) {
            return for_all_values(ctx, I.e("e"), [&](Value k) {
              StateSet pk = I.p("p") & eq_val(k, I.e("e"), ctx.space);
              return dom_restrict(pk, set_x_to(ctx.space, I.x("x"), k)).subset_of(I.r("g") & I.r("q"));
            });
          }}},
        [](const Instance& I, const LawContext& ctx) {
          return obs(Obligation::refine("assign", assign_lhs(I, I.r("q")), assign(ctx.space, I.x("x"), I.e("e"))));
        });
    l.steer = steer_assign;
    v.push_back(l);
  }
  v.push_back(make_law(
      "rely-assign-monotonic", "assignment",
      "if g is reflexive, p is stable under r, x is invariant under r, e is single reference under r, ⪰ is reflexive and "
      "transitive, for all k (p ∩ ge(k,e)) ◁ id(x̄) ▷ eq(k,x) ⊆ g and (p ◁ id(x̄)) ∪ r ⊆ {e(σ) ⪰ e(σ')} "
      "then rely r ⋓ guar g ⋓ {p};x:spec{e(σ) ⪰ x(σ') ⪰ e(σ')} ⪰ x := e",
      {{"p", ParamType::Set}, {"g", ParamType::Rel}, {"r", ParamType::Rel}, {"x", ParamType::Var}, {"e", ParamType::Expr},
       {"order", ParamType::Order}},
      {{"g reflexive", [](const Instance& I, const LawContext&) { return I.r("g").is_reflexive(); }},
       {"p stable under r", [](const Instance& I, const LawContext&) { return is_stable(I.p("p"), I.r("r")); }},
       {"x invariant under r",
        [](const Instance& I, const LawContext& ctx) {
          return is_invariant_under(ExprNode::variable(ctx.space, I.x("x")), I.r("r"));
        }},
       {"e single reference under r", [](const Instance& I, const LawContext&) { return is_single_reference(I.e("e"), I.r("r")); }},
       {"⪰ transitive", [](const Instance& I, const LawContext& ctx) { return preorder_transitive(I.ord("order"), ctx.values); }},
       {"monotonic g",
        [](const Instance& I, const LawContext& ctx) {
          return for_all_values(ctx, I.e("e"), [&](Value k) {
            StateSet ge = compare_sets(ExprNode::constant(k), I.e("e"), I.ord("order"), false, ctx.space);
            return dom_restrict(I.p("p") & ge, set_x_to(ctx.space, I.x("x"), k)).subset_of(I.r("g"));
          });
        }},
       {"(p ◁ id(x̄)) ∪ r ⊆ dec(e)",
        [](const Instance& I, const LawContext& ctx) {
          Rel lhs = dom_restrict(I.p("p"), frame_rel(ctx.space, {I.x("x")})) | I.r("r");
          return lhs.subset_of(dec_eq(I.e("e"), I.ord("order"), ctx.space));
        }}},
      [](const Instance& I, const LawContext& ctx) {
        const Space& sp = ctx.space;
        const ValueOrder& o = I.ord("order");
        Expr e = I.e("e"), x = ExprNode::variable(sp, I.x("x"));
        Rel q = Rel::of(sp, [&](State a, State b) {
          Value xb = eval(x, *sp, b);
          return o.greater_eq(eval(e, *sp, a), xb) && o.greater_eq(xb, eval(e, *sp, b));
        });
        return obs(Obligation::refine("assign", assign_lhs(I, q), assign(sp, I.x("x"), e)));
      }));
  return v;
}

std::vector<LawSpec> conditional_laws() {
  std::vector<LawSpec> v;
  v.push_back(make_law(
      "guar-conditional-distrib", "conditional",
      "if g is reflexive then guar g ⋓ (if b then c else d) ⪰ if b then guar g ⋓ c else guar g ⋓ d",
      {{"g", ParamType::Rel}, {"b", ParamType::Expr}, {"c", ParamType::Cmd}, {"d", ParamType::Cmd}},
      {{"g reflexive", [](const Instance& I, const LawContext&) { return I.r("g").is_reflexive(); }}},
      [](const Instance& I, const LawContext& ctx) {
        Command G = guar(I.r("g"));
        Command lhs = conj(G, cond(ctx.space, I.e("b"), I.c("c"), I.c("d")));
        Command rhs = cond(ctx.space, I.e("b"), conj(G, I.c("c")), conj(G, I.c("d")));
        return obs(Obligation::refine("distribute", lhs, rhs));
      }));
  v.push_back(rely_conditional());
  return v;
}

std::vector<LawSpec> induction_laws() {
  std::vector<LawSpec> v;
  v.push_back(make_law(
      "well-founded-variant", "well-founded",
      "if ≻ is well founded and for all k ({gt(k,w)};s ⪰ c) ⇒ ({eq(k,w)};s ⪰ c) then s ⪰ c",
      {{"w", ParamType::Expr}, {"order", ParamType::Order}, {"s", ParamType::Cmd}, {"c", ParamType::Cmd}},
      {{"≻ well founded", [](const Instance& I, const LawContext&) { return is_well_founded(I.ord("order")); }},
       {"variant step",
        [](const Instance& I, const LawContext& ctx) {
          return for_all_values(ctx, I.e("w"), [&](Value k) {
            StateSet gt = compare_sets(ExprNode::constant(k), I.e("w"), I.ord("order"), true, ctx.space);
            StateSet eq = eq_val(k, I.e("w"), ctx.space);
            bool below = refines(seq(assertion(gt), I.c("s")), I.c("c"), ctx.bound);
            return !below || refines(seq(assertion(eq), I.c("s")), I.c("c"), ctx.bound);
          });
        }}},
      [](const Instance& I, const LawContext&) { return obs(Obligation::refine("s ⪰ c", I.c("s"), I.c("c"))); }));
  v.push_back(well_founded_recursion());
  return v;
}

std::vector<LawSpec> loop_laws() { return {rely_loop_early(), rely_loop()}; }

std::vector<LawSpec> algebra_lemmas() {
  std::vector<LawSpec> v;
  v.push_back(make_law("par-guar-guar", "algebra", "guar g ∥ guar g = guar g", {{"g", ParamType::Rel}}, {},
                       [](const Instance& I, const LawContext&) {
                         Command G = guar(I.r("g"));
                         return obs(Obligation::equal("idempotent", par(G, G), G));
                       }));
  v.push_back(make_law("conj-rely-guar", "algebra", "rely r ⋓ guar g = om(π g ∨ ε r);(nil ∨ ε r̄;abort)",
                       {{"r", ParamType::Rel}, {"g", ParamType::Rel}}, {},
                       [](const Instance& I, const LawContext& ctx) {
                         const Space& sp = ctx.space;
                         Command rhs = seq(om(choice(pgm(I.r("g")), env(I.r("r")))),
                                           choice(nil(sp), seq(env(~I.r("r")), abort(sp))));
                         return obs(Obligation::equal("expand", conj(rely(I.r("r")), guar(I.r("g"))), rhs));
                       }));
  v.push_back(make_law("rely-seq-distrib", "algebra", "rely r ⋓ (c;d) ⪰ (rely r ⋓ c);(rely r ⋓ d)",
                       {{"r", ParamType::Rel}, {"c", ParamType::Cmd}, {"d", ParamType::Cmd}}, {},
                       [](const Instance& I, const LawContext&) {
                         Command R = rely(I.r("r"));
                         return obs(Obligation::refine("distribute", conj(R, seq(I.c("c"), I.c("d"))),
                                                       seq(conj(R, I.c("c")), conj(R, I.c("d")))));
                       }));
  v.push_back(make_law("atomic-test-commute", "algebra",
                       "if r(|p0|) ⊆ p1 then π r;τp1 ⪰ τp0;π r and ε r;τp1 ⪰ τp0;ε r",
                       {{"r", ParamType::Rel}, {"p0", ParamType::Set}, {"p1", ParamType::Set}},
                       {{"r(|p0|) ⊆ p1",
                         [](const Instance& I, const LawContext&) { return image(I.r("r"), I.p("p0")).subset_of(I.p("p1")); }}},
                       [](const Instance& I, const LawContext&) {
                         Command t0 = test(I.p("p0")), t1 = test(I.p("p1"));
                         return obs(Obligation::refine("pgm", seq(pgm(I.r("r")), t1), seq(t0, pgm(I.r("r")))),
                                    Obligation::refine("env", seq(env(I.r("r")), t1), seq(t0, env(I.r("r")))));
                       }));
  v.push_back(make_law("nondet-test-commute", "algebra",
                       "if c;t1 ⪰ t0;c and d;t1 ⪰ t0;d then (c ∨ d);t1 ⪰ t0;(c ∨ d)",
                       {{"p0", ParamType::Set}, {"p1", ParamType::Set}, {"c", ParamType::Cmd}, {"d", ParamType::Cmd}},
                       {{"c;t1 ⪰ t0;c",
                         [](const Instance& I, const LawContext& ctx) {
                           return refines(seq(I.c("c"), test(I.p("p1"))), seq(test(I.p("p0")), I.c("c")), ctx.bound);
                         }},
                        {"d;t1 ⪰ t0;d",
                         [](const Instance& I, const LawContext& ctx) {
                           return refines(seq(I.c("d"), test(I.p("p1"))), seq(test(I.p("p0")), I.c("d")), ctx.bound);
                         }}},
                       [](const Instance& I, const LawContext&) {
                         Command cd = choice(I.c("c"), I.c("d"));
                         return obs(Obligation::refine("commute", seq(cd, test(I.p("p1"))), seq(test(I.p("p0")), cd)));
                       }));
  v.push_back(make_law("iteration-test-commute", "algebra", "if c;t ⪰ t;c then om(c);t ⪰ t;om(c) and fin(c);t ⪰ t;fin(c)",
                       {{"p", ParamType::Set}, {"c", ParamType::Cmd}},
                       {{"c;t ⪰ t;c",
                         [](const Instance& I, const LawContext& ctx) {
                           return refines(seq(I.c("c"), test(I.p("p"))), seq(test(I.p("p")), I.c("c")), ctx.bound);
                         }}},
                       [](const Instance& I, const LawContext&) {
                         Command t = test(I.p("p"));
                         return obs(Obligation::refine("om", seq(om(I.c("c")), t), seq(t, om(I.c("c")))),
                                    Obligation::refine("fin", seq(fin(I.c("c")), t), seq(t, fin(I.c("c")))));
                       }));
  v.push_back(make_law("sync-test-assert", "algebra", "nil ⊗ {p} = {p}", {{"p", ParamType::Set}, {"op", ParamType::Op}}, {},
                       [](const Instance& I, const LawContext& ctx) {
                         Command a = assertion(I.p("p"));
                         return obs(Obligation::equal("absorb", sync_op(I.op("op"), nil(ctx.space), a), a));
                       }));
  v.push_back(make_law("test-suffix-assert", "algebra", "c ⊗ d;τp = (c ⊗ d;τp);{p}",
                       {{"c", ParamType::Cmd}, {"d", ParamType::Cmd}, {"p", ParamType::Set}, {"op", ParamType::Op}}, {},
                       [](const Instance& I, const LawContext&) {
                         Command s = sync_op(I.op("op"), I.c("c"), seq(I.c("d"), test(I.p("p"))));
                         return obs(Obligation::equal("suffix", s, seq(s, assertion(I.p("p")))));
                       }));
  v.push_back(make_law("test-suffix-test", "algebra", "c ⊗ d;τp = (c ⊗ d;τp);τp",
                       {{"c", ParamType::Cmd}, {"d", ParamType::Cmd}, {"p", ParamType::Set}, {"op", ParamType::Op}}, {},
                       [](const Instance& I, const LawContext&) {
                         Command s = sync_op(I.op("op"), I.c("c"), seq(I.c("d"), test(I.p("p"))));
                         return obs(Obligation::equal("suffix", s, seq(s, test(I.p("p")))));
                       }));
  v.push_back(make_law("test-suffix-interchange", "algebra", "c ⊗ d;τp = (c ⊗ d);τp",
                       {{"c", ParamType::Cmd}, {"d", ParamType::Cmd}, {"p", ParamType::Set}, {"op", ParamType::Op}}, {},
                       [](const Instance& I, const LawContext&) {
                         int op = I.op("op");
                         Command t = test(I.p("p"));
                         return obs(Obligation::equal("interchange", sync_op(op, I.c("c"), seq(I.c("d"), t)),
                                                      seq(sync_op(op, I.c("c"), I.c("d")), t)));
                       }));
  v.push_back(make_law("assert-distrib", "algebra", "{p};(c ⊗ d) = c ⊗ {p};d",
                       {{"p", ParamType::Set}, {"c", ParamType::Cmd}, {"d", ParamType::Cmd}, {"op", ParamType::Op}}, {},
                       [](const Instance& I, const LawContext&) {
                         int op = I.op("op");
                         Command a = assertion(I.p("p"));
                         return obs(Obligation::equal("distribute", seq(a, sync_op(op, I.c("c"), I.c("d"))),
                                                      sync_op(op, I.c("c"), seq(a, I.c("d")))));
                       }));
  v.push_back(make_law("Nondet-test-set", "algebra", "∨σ∈p τ{σ} = τp", {{"p", ParamType::Set}}, {},
                       [](const Instance& I, const LawContext& ctx) {
                         std::vector<Command> alts;
                         for (State s : I.p("p").members()) alts.push_back(test(StateSet::singleton(ctx.space, s)));
                         return obs(Obligation::equal("tests", nondet(ctx.space, alts), test(I.p("p"))));
                       }));
  v.push_back(make_law("test-restricts-Nondet", "algebra", "τp;∨σ0 τ{σ0};c = ∨σ0∈p τ{σ0};c",
                       {{"p", ParamType::Set}, {"c", ParamType::Cmd}}, {},
                       [](const Instance& I, const LawContext& ctx) {
                         std::vector<Command> all, in_p;
                         for (State s : enumerate_states(*ctx.space)) {
                           Command alt = seq(test(StateSet::singleton(ctx.space, s)), I.c("c"));
                           all.push_back(alt);
                           if (I.p("p").contains(s)) in_p.push_back(alt);
                         }
                         return obs(Obligation::equal("restrict", seq(test(I.p("p")), nondet(ctx.space, all)), nondet(ctx.space, in_p)));
                       }));
  v.push_back(make_law("test-command-sync-command", "algebra", "if nil ∨ (π ∨ ε);abort ⪰ c then c ⊗ t;d = t;(c ⊗ d)",
                       {{"c", ParamType::AbortCmd}, {"d", ParamType::AbortCmd}, {"p", ParamType::Set}, {"op", ParamType::Op}},
                       {{"nil ∨ (π ∨ ε);abort ⪰ c",
                         [](const Instance& I, const LawContext& ctx) {
                           const Space& sp = ctx.space;
                           Command bound = choice(nil(sp), seq(choice(pgm(Rel::univ(sp)), env(Rel::univ(sp))), abort(sp)));
                           return refines(bound, I.c("c"), ctx.bound);
                         }}},
                       [](const Instance& I, const LawContext&) {
                         int op = I.op("op");
                         Command t = test(I.p("p"));
                         return obs(Obligation::equal("commute", sync_op(op, I.c("c"), seq(t, I.c("d"))),
                                                      seq(t, sync_op(op, I.c("c"), I.c("d")))));
                       }));
  v.push_back(make_law("conj-seq-distrib", "algebra", "if c ⪰ c;c then c ⋓ (d0;d1) ⪰ (c ⋓ d0);(c ⋓ d1)",
                       {{"c", ParamType::Cmd}, {"d0", ParamType::Cmd}, {"d1", ParamType::Cmd}},
                       {{"c ⪰ c;c",
                         [](const Instance& I, const LawContext& ctx) { return refines(I.c("c"), seq(I.c("c"), I.c("c")), ctx.bound); }}},
                       [](const Instance& I, const LawContext&) {
                         const Command& c = I.c("c");
                         return obs(Obligation::refine("distribute", conj(c, seq(I.c("d0"), I.c("d1"))),
                                                       seq(conj(c, I.c("d0")), conj(c, I.c("d1")))));
                       }));
  v.push_back(make_law("conj-par-distrib", "algebra", "if c ⪰ c ∥ c then c ⋓ (d0 ∥ d1) ⪰ (c ⋓ d0) ∥ (c ⋓ d1)",
                       {{"c", ParamType::Cmd}, {"d0", ParamType::Cmd}, {"d1", ParamType::Cmd}},
                       {{"c ⪰ c ∥ c",
                         [](const Instance& I, const LawContext& ctx) { return refines(I.c("c"), par(I.c("c"), I.c("c")), ctx.bound); }}},
                       [](const Instance& I, const LawContext&) {
                         const Command& c = I.c("c");
                         return obs(Obligation::refine("distribute", conj(c, par(I.c("d0"), I.c("d1"))),
                                                       par(conj(c, I.c("d0")), conj(c, I.c("d1")))));
                       }));
  v.push_back(make_law(
      "refine-to-choice", "algebra",
      "∨C ⪰ ∨D if every d has a c ⪰ d; ∨C ⪰ d if some c ⪰ d; c ⪰ ∨D if c ⪰ every d",
      {{"c0", ParamType::Cmd}, {"c1", ParamType::Cmd}, {"d0", ParamType::Cmd}, {"d1", ParamType::Cmd}}, {},
      [](const Instance& I, const LawContext& ctx) {
        std::size_t K = ctx.bound;
        const Command &c0 = I.c("c0"), &c1 = I.c("c1"), &d0 = I.c("d0"), &d1 = I.c("d1");
        Command C = choice(c0, c1), D = choice(d0, d1);
        bool r00 = refines(c0, d0, K), r01 = refines(c0, d1, K), r10 = refines(c1, d0, K), r11 = refines(c1, d1, K);
        bool all_covered = (r00 || r10) && (r01 || r11);
        return obs(Obligation::fact("choice refines choice", !all_covered || refines(C, D, K)),
                   Obligation::fact("choice refines element", !(r00 || r10) || refines(C, d0, K)),
                   Obligation::fact("element refines choice", !(r00 && r01) || refines(c0, D, K)));
      }));
  return v;
}

}  // namespace

const std::vector<LawSpec>& law_registry() {
  static const std::vector<LawSpec> laws = [] {
    std::vector<LawSpec> all;
    for (auto part : {guarantee_laws(), rely_laws(), termination_laws(), spec_laws(), stability_laws(), parallel_laws(),
                      opt_laws(), idle_laws(), atomic_spec_laws(), expression_laws(), assignment_laws(),
                      conditional_laws(), induction_laws(), loop_laws(), algebra_lemmas()})
      for (auto& l : part) all.push_back(std::move(l));
    return all;
  }();
  return laws;
}

}  // namespace rgc
