// Laws whose provisos are rarely met by uniform sampling, with steering, and
// the negative controls derived from them.
#include <stdexcept>

#include "law_support.hpp"

namespace rgc {

namespace lawkit {

using namespace cmd;

namespace {

StateSet truth(const Expr& b, const Space& sp) { return eq_val(1, b, sp); }
StateSet falsity(const Expr& b, const Space& sp) { return eq_val(0, b, sp); }
StateSet booleans(const Expr& b, const Space& sp) { return type_of(b, {0, 1}, sp); }

Rel reflexive_rel(const Space& sp, std::mt19937_64& rng) {
  return coin(rng, 0.4) ? Rel::univ(sp) : random_rel(sp, rng) | Rel::id(sp);
}

Rel rely_like(const Space& sp, std::mt19937_64& rng) {
  return coin(rng, 0.6) ? random_rel(sp, rng) & Rel::id(sp) : random_rel(sp, rng);
}

/// Loop bodies: nil, idle, an assignment or a pool command.
Command loop_body(const LawContext& ctx, std::mt19937_64& rng) {
  const Space& sp = ctx.space;
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: return nil(sp);
    case 1: return idle(sp);
    case 2: {
      const auto& v = sp->var(std::uniform_int_distribution<std::size_t>(0, sp->var_count() - 1)(rng));
      std::vector<Expr> fits;
      for (const auto& e : ctx.exprs)
        if (std::all_of(e->range().begin(), e->range().end(), [&](Value k) {
              return std::find(v.domain.begin(), v.domain.end(), k) != v.domain.end();
            }))
          fits.push_back(e);
      if (fits.empty()) return nil(sp);
      return assign(sp, v.name, pick_one(fits, rng));
    }
    default: return pick_one(ctx.pool, rng);
  }
}

Command rely_pre_spec(const Rel& r, const StateSet& p, const Rel& q) {
  return conj(rely(r), seq(assertion(p), spec(q)));
}

}  // namespace

LawSpec spec_seq_introduce() {
  auto mid = [](const Instance& I) {
    return dom_restrict(I.p("p1"), compose(range_restrict(I.r("q1"), I.p("p2")), I.r("q2")));
  };
  LawSpec l = make_law(
      "spec-seq-introduce", "specifications",
      "if p1 ◁ ((q1 ▷ p2) ⨾ q2) ⊆ q then {p1};X:pspec q ⪰ {p1};X:pspec(q1 ▷ p2);{p2};X:pspec q2 (and for spec)",
      {{"p1", ParamType::Set}, {"p2", ParamType::Set}, {"q", ParamType::Rel}, {"q1", ParamType::Rel}, {"q2", ParamType::Rel},
       {"X", ParamType::VarSet}},
      {{"p1 ◁ ((q1 ▷ p2) ⨾ q2) ⊆ q", [mid](const Instance& I, const LawContext&) { return mid(I).subset_of(I.r("q")); }}},
      [](const Instance& I, const LawContext&) {
        const auto& X = I.X("X");
        Command a1 = assertion(I.p("p1")), a2 = assertion(I.p("p2"));
        Rel q1p = range_restrict(I.r("q1"), I.p("p2"));
        return obs(Obligation::refine("pspec", seq(a1, frame(X, pspec(I.r("q")))),
                                      seq({a1, frame(X, pspec(q1p)), a2, frame(X, pspec(I.r("q2")))})),
                   Obligation::refine("spec", seq(a1, frame(X, spec(I.r("q")))),
                                      seq({a1, frame(X, spec(q1p)), a2, frame(X, spec(I.r("q2")))})));
      });
  l.steer = [mid](Instance& I, const LawContext&, std::mt19937_64& rng) {
    if (coin(rng, 0.5)) I.rels["q"] = I.r("q") | mid(I);
  };
  return l;
}

LawSpec spec_strengthen_with_trading() {
  auto traded = [](const Instance& I, const LawContext& ctx) {
    Rel moves = rtc(I.r("r") | (I.r("g") & frame_rel(ctx.space, I.X("X"))));
    return dom_restrict(I.p("p"), moves & I.r("q2"));
  };
  LawSpec l = make_law(
      "spec-strengthen-with-trading", "stability",
      "if p ◁ (rtc(r ∪ (g ∩ id(X̄))) ∩ q2) ⊆ q1 then rely r ⋓ guar g ⋓ {p};X:spec q1 ⪰ rely r ⋓ guar g ⋓ {p};X:spec q2",
      {{"r", ParamType::Rel}, {"g", ParamType::Rel}, {"p", ParamType::Set}, {"q1", ParamType::Rel}, {"q2", ParamType::Rel},
       {"X", ParamType::VarSet}},
      {{"p ◁ (rtc(r ∪ (g ∩ id(X̄))) ∩ q2) ⊆ q1",
        [traded](const Instance& I, const LawContext& ctx) { return traded(I, ctx).subset_of(I.r("q1")); }}},
      [](const Instance& I, const LawContext&) {
        Command RG = conj(rely(I.r("r")), guar(I.r("g")));
        const auto& X = I.X("X");
        Command a = assertion(I.p("p"));
        return obs(Obligation::refine("strengthen", conj(RG, seq(a, frame(X, spec(I.r("q1"))))),
                                      conj(RG, seq(a, frame(X, spec(I.r("q2")))))));
      });
  l.steer = [traded](Instance& I, const LawContext& ctx, std::mt19937_64& rng) {
    if (coin(rng, 0.6)) I.rels["q1"] = I.r("q1") | traded(I, ctx);
  };
  return l;
}

LawSpec guar_opt() {
  return make_law("guar-opt", "optional-step", "if g is reflexive then guar g ⋓ opt q = opt(g ∩ q)",
                  {{"g", ParamType::Rel}, {"q", ParamType::Rel}},
                  {{"g reflexive", [](const Instance& I, const LawContext&) { return I.r("g").is_reflexive(); }}},
                  [](const Instance& I, const LawContext&) {
                    return obs(Obligation::equal("merge", conj(guar(I.r("g")), opt(I.r("q"))), opt(I.r("g") & I.r("q"))));
                  });
}

LawSpec guar_idle() {
  return make_law("guar-idle", "idle", "if g is reflexive then guar g ⋓ idle = idle", {{"g", ParamType::Rel}},
                  {{"g reflexive", [](const Instance& I, const LawContext&) { return I.r("g").is_reflexive(); }}},
                  [](const Instance& I, const LawContext& ctx) {
                    return obs(Obligation::equal("absorb", conj(guar(I.r("g")), idle(ctx.space)), idle(ctx.space)));
                  });
}

LawSpec rely_idle_stable() {
  return make_law("rely-idle-stable", "idle", "if p is stable under r then rely r ⋓ idle;τp ⪰ rely r ⋓ τp;idle",
                  {{"r", ParamType::Rel}, {"p", ParamType::Set}},
                  {{"p stable under r", [](const Instance& I, const LawContext&) { return is_stable(I.p("p"), I.r("r")); }}},
                  [](const Instance& I, const LawContext& ctx) {
                    Command R = rely(I.r("r")), t = test(I.p("p"));
                    return obs(Obligation::refine("commute", conj(R, seq(idle(ctx.space), t)), conj(R, seq(t, idle(ctx.space)))));
                  });
}

LawSpec tolerate_interference() {
  return make_law("tolerate-interference", "idle",
                  "if q tolerates r from p then rely r ⋓ {p};spec q = rely r ⋓ idle;{p};spec q;idle",
                  {{"r", ParamType::Rel}, {"p", ParamType::Set}, {"q", ParamType::Rel}},
                  {{"q tolerates r from p",
                    [](const Instance& I, const LawContext&) { return tolerates(I.r("q"), I.r("r"), I.p("p")); }}},
                  [](const Instance& I, const LawContext& ctx) {
                    const Space& sp = ctx.space;
                    Command R = rely(I.r("r"));
                    Command body = seq(assertion(I.p("p")), spec(I.r("q")));
                    return obs(Obligation::equal("idle padding", conj(R, body), conj(R, seq({idle(sp), body, idle(sp)}))));
                  });
}

LawSpec atomic_spec_strengthen_post() {
  return make_law("atomic-spec-strengthen-post", "atomic-spec", "if p ◁ q2 ⊆ q1 then ⟨p,q1⟩ ⪰ ⟨p,q2⟩",
                  {{"p", ParamType::Set}, {"q1", ParamType::Rel}, {"q2", ParamType::Rel}},
                  {{"p ◁ q2 ⊆ q1",
                    [](const Instance& I, const LawContext&) { return dom_restrict(I.p("p"), I.r("q2")).subset_of(I.r("q1")); }}},
                  [](const Instance& I, const LawContext&) {
                    return obs(Obligation::refine("strengthen", atomic(I.p("p"), I.r("q1")), atomic(I.p("p"), I.r("q2"))));
                  });
}

LawSpec rely_conditional() {
  LawSpec l = make_law(
      "rely-conditional", "conditional",
      "if b is single reference under r, q tolerates r from p, p ∩ b ⊆ bt, p ∩ ¬b ⊆ bf, p ⊆ type(b,𝔹) and bt, bf are "
      "stable under p ◁ r then rely r ⋓ {p};spec q ⪰ if b then rely r ⋓ {bt ∩ p};spec q else rely r ⋓ {bf ∩ p};spec q",
      {{"b", ParamType::Expr}, {"p", ParamType::Set}, {"bt", ParamType::Set}, {"bf", ParamType::Set}, {"q", ParamType::Rel},
       {"r", ParamType::Rel}},
      {{"b single reference under r", [](const Instance& I, const LawContext&) { return is_single_reference(I.e("b"), I.r("r")); }},
       {"q tolerates r from p", [](const Instance& I, const LawContext&) { return tolerates(I.r("q"), I.r("r"), I.p("p")); }},
       {"p ∩ b ⊆ bt",
        [](const Instance& I, const LawContext& ctx) { return (I.p("p") & truth(I.e("b"), ctx.space)).subset_of(I.p("bt")); }},
       {"p ∩ ¬b ⊆ bf",
        [](const Instance& I, const LawContext& ctx) { return (I.p("p") & falsity(I.e("b"), ctx.space)).subset_of(I.p("bf")); }},
       {"p ⊆ type(b,𝔹)",
        [](const Instance& I, const LawContext& ctx) { return I.p("p").subset_of(booleans(I.e("b"), ctx.space)); }},
       {"bt stable under p ◁ r",
        [](const Instance& I, const LawContext&) { return is_stable(I.p("bt"), dom_restrict(I.p("p"), I.r("r"))); }},
       {"bf stable under p ◁ r",
        [](const Instance& I, const LawContext&) { return is_stable(I.p("bf"), dom_restrict(I.p("p"), I.r("r"))); }}},
      [](const Instance& I, const LawContext& ctx) {
        const Rel &r = I.r("r"), &q = I.r("q");
        const StateSet& p = I.p("p");
        Command rhs = cond(ctx.space, I.e("b"), rely_pre_spec(r, I.p("bt") & p, q), rely_pre_spec(r, I.p("bf") & p, q));
        return obs(Obligation::refine("conditional", rely_pre_spec(r, p, q), rhs));
      });
  l.steer = [](Instance& I, const LawContext& ctx, std::mt19937_64& rng) {
    const Space& sp = ctx.space;
    const StateSet& p = I.p("p");
    if (coin(rng, 0.5)) I.rels["r"] = rely_like(sp, rng);
    if (coin(rng, 0.4)) I.rels["q"] = Rel::univ(sp);
    if (coin(rng, 0.7)) I.sets["bt"] = I.p("bt") | (p & truth(I.e("b"), sp));
    if (coin(rng, 0.7)) I.sets["bf"] = I.p("bf") | (p & falsity(I.e("b"), sp));
  };
  return l;
}

LawSpec well_founded_recursion() {
  // form 0 is the while functional, form 1 the guarded-choice functional.
  auto functional = [](const Instance& I, const LawContext& ctx, const Command& x) {
    const Space& sp = ctx.space;
    const Expr& b = I.e("b");
    if (I.op("form") == 0) return cond(sp, b, seq(I.c("c"), x), nil(sp));
    return choice(seq({test(truth(b, sp)), I.c("c"), x}), test(~truth(b, sp)));
  };
  auto nu_f = [functional](const Instance& I, const LawContext& ctx) {
    return nu("%wf", functional(I, ctx, fixvar(ctx.space, "%wf")));
  };
  LawSpec l = make_law(
      "well-founded-recursion", "well-founded",
      "if ≻ is well founded, {p};s ⪰ νf and for all k {eq(k,w)};s ⪰ f({gt(k,w) ∪ p};s) then s ⪰ νf",
      {{"p", ParamType::Set}, {"w", ParamType::Expr}, {"order", ParamType::Order}, {"s", ParamType::Cmd},
       {"b", ParamType::Expr}, {"c", ParamType::Cmd}, {"form", ParamType::Op}},
      {{"≻ well founded", [](const Instance& I, const LawContext&) { return is_well_founded(I.ord("order")); }},
       {"{p};s ⪰ νf",
        [nu_f](const Instance& I, const LawContext& ctx) {
          return refines(seq(assertion(I.p("p")), I.c("s")), nu_f(I, ctx), ctx.bound);
        }},
       {"variant step",
        [functional](const Instance& I, const LawContext& ctx) {
          return for_all_values(ctx, I.e("w"), [&](Value k) {
            StateSet eq = eq_val(k, I.e("w"), ctx.space);
            StateSet gt = compare_sets(ExprNode::constant(k), I.e("w"), I.ord("order"), true, ctx.space);
            Command below = seq(assertion(gt | I.p("p")), I.c("s"));
            return refines(seq(assertion(eq), I.c("s")), functional(I, ctx, below), ctx.bound);
          });
        }}},
      [nu_f](const Instance& I, const LawContext& ctx) {
        return obs(Obligation::refine("s ⪰ νf", I.c("s"), nu_f(I, ctx)));
      });
  l.steer = [nu_f](Instance& I, const LawContext& ctx, std::mt19937_64& rng) {
    // Specifications that hold of the recursion satisfy the premises most often.
    int k = std::uniform_int_distribution<int>(0, 9)(rng);
    if (k < 4) {
      I.cmds["s"] = nu_f(I, ctx);
    } else if (k < 6) {
      I.cmds["s"] = choice(nu_f(I, ctx), pick_one(ctx.pool, rng));
    } else if (k < 7) {
      I.cmds["s"] = abort(ctx.space);
    }
    if (coin(rng, 0.5)) I.cmds["c"] = loop_body(ctx, rng);
  };
  return l;
}

namespace {

std::vector<ParamDecl> loop_params(bool early) {
  std::vector<ParamDecl> ps = {{"p", ParamType::Set},   {"bt", ParamType::Set}, {"bf", ParamType::Set}};
  if (early) ps.push_back({"bx", ParamType::Set});
  for (ParamDecl d : std::vector<ParamDecl>{{"q", ParamType::Rel},
                                            {"r", ParamType::Rel},
                                            {"g", ParamType::Rel},
                                            {"b", ParamType::Expr},
                                            {"w", ParamType::Expr},
                                            {"order", ParamType::Order},
                                            {"c", ParamType::Cmd}})
    ps.push_back(d);
  return ps;
}

std::vector<Proviso> loop_provisos(bool early) {
  std::vector<Proviso> v = {
      {"g reflexive", [](const Instance& I, const LawContext&) { return I.r("g").is_reflexive(); }},
      {"b single reference under r", [](const Instance& I, const LawContext&) { return is_single_reference(I.e("b"), I.r("r")); }},
      {"≻ well founded", [](const Instance& I, const LawContext&) { return is_well_founded(I.ord("order")); }},
  };
  if (!early)
    v.push_back({"≻ transitive",
                 [](const Instance& I, const LawContext& ctx) { return order_transitive(I.ord("order"), values_for(ctx, I.e("w"))); }});
  v.push_back({"p ⊆ type(b,𝔹)",
               [](const Instance& I, const LawContext& ctx) { return I.p("p").subset_of(booleans(I.e("b"), ctx.space)); }});
  v.push_back({"rtc(q) ▷ p tolerates r from p", [](const Instance& I, const LawContext&) {
                 return tolerates(range_restrict(rtc(I.r("q")), I.p("p")), I.r("r"), I.p("p"));
               }});
  for (const char* s : {"bt", "bf", "bx"}) {
    if (!early && std::string(s) == "bx") continue;
    std::string name = s;
    v.push_back({name + " stable under p ◁ r", [name](const Instance& I, const LawContext&) {
                   return is_stable(I.p(name), dom_restrict(I.p("p"), I.r("r")));
                 }});
  }
  v.push_back({"p ◁ r ⊆ dec(w)", [](const Instance& I, const LawContext& ctx) {
                 return dom_restrict(I.p("p"), I.r("r")).subset_of(dec_eq(I.e("w"), I.ord("order"), ctx.space));
               }});
  v.push_back({"p ∩ b ⊆ bt",
               [](const Instance& I, const LawContext& ctx) { return (I.p("p") & truth(I.e("b"), ctx.space)).subset_of(I.p("bt")); }});
  v.push_back({"p ∩ ¬b ⊆ bf", [](const Instance& I, const LawContext& ctx) {
                 return (I.p("p") & falsity(I.e("b"), ctx.space)).subset_of(I.p("bf"));
               }});
  if (early)
    v.push_back({"p ∩ bx ⊆ ¬b", [](const Instance& I, const LawContext& ctx) {
                   return (I.p("p") & I.p("bx")).subset_of(falsity(I.e("b"), ctx.space));
                 }});
  v.push_back({"loop body premise", [early](const Instance& I, const LawContext& ctx) {
                 const Space& sp = ctx.space;
                 Command GR = conj(guar(I.r("g")), rely(I.r("r")));
                 Rel tq = rtc(I.r("q"));
                 return for_all_values(ctx, I.e("w"), [&](Value k) {
                   Expr kk = ExprNode::constant(k);
                   StateSet ge = compare_sets(kk, I.e("w"), I.ord("order"), false, sp);
                   StateSet gt = compare_sets(kk, I.e("w"), I.ord("order"), true, sp);
                   StateSet post = I.p("p") & (early ? gt | I.p("bx") : gt);
                   Command lhs = conj(GR, seq(assertion(I.p("bt") & I.p("p") & ge), spec(range_restrict(tq, post))));
                   return refines(lhs, I.c("c"), ctx.bound);
                 });
               }});
  return v;
}

void steer_loop(Instance& I, const LawContext& ctx, std::mt19937_64& rng, bool early) {
  const Space& sp = ctx.space;
  I.cmds["c"] = loop_body(ctx, rng);
  if (coin(rng, 0.7)) I.rels["g"] = reflexive_rel(sp, rng);
  if (coin(rng, 0.6)) I.rels["r"] = rely_like(sp, rng);
  if (coin(rng, 0.4)) I.rels["q"] = Rel::univ(sp);
  if (coin(rng, 0.3)) I.sets["p"] = StateSet::all(sp);
  const StateSet& p = I.p("p");
  const Expr& b = I.e("b");
  if (coin(rng, 0.7)) I.sets["bt"] = I.p("bt") | (p & truth(b, sp));
  if (coin(rng, 0.7)) I.sets["bf"] = I.p("bf") | (p & falsity(b, sp));
  if (early && coin(rng, 0.7)) I.sets["bx"] = I.p("bx") - (p & ~falsity(b, sp));
}

}  // namespace

LawSpec rely_loop_early() {
  LawSpec l = make_law(
      "rely-loop-early", "loops",
      "under the loop provisos, if for all k guar g ⋓ rely r ⋓ {bt ∩ p ∩ ge(k,w)};spec(rtc(q) ▷ (p ∩ (gt(k,w) ∪ bx))) ⪰ c "
      "then guar g ⋓ rely r ⋓ {p};spec(rtc(q) ▷ (p ∩ bf)) ⪰ while b do c",
      loop_params(true), loop_provisos(true), [](const Instance& I, const LawContext& ctx) {
        Command GR = conj(guar(I.r("g")), rely(I.r("r")));
        Rel post = range_restrict(rtc(I.r("q")), I.p("p") & I.p("bf"));
        Command lhs = conj(GR, seq(assertion(I.p("p")), spec(post)));
        return obs(Obligation::refine("loop", lhs, while_loop(ctx.space, I.e("b"), I.c("c"))));
      });
  l.steer = [](Instance& I, const LawContext& ctx, std::mt19937_64& rng) { steer_loop(I, ctx, rng, true); };
  return l;
}

LawSpec rely_loop() {
  LawSpec l = make_law(
      "rely-loop", "loops",
      "under the loop provisos with ≻ transitive, if for all k guar g ⋓ rely r ⋓ {bt ∩ p ∩ ge(k,w)};"
      "spec(rtc(q) ▷ (p ∩ gt(k,w))) ⪰ c then guar g ⋓ rely r ⋓ {p};spec((dec(w) ∩ rtc(q)) ▷ (p ∩ bf)) ⪰ while b do c",
      loop_params(false), loop_provisos(false), [](const Instance& I, const LawContext& ctx) {
        Command GR = conj(guar(I.r("g")), rely(I.r("r")));
        Rel dec = dec_eq(I.e("w"), I.ord("order"), ctx.space);
        Rel post = range_restrict(dec & rtc(I.r("q")), I.p("p") & I.p("bf"));
        Command lhs = conj(GR, seq(assertion(I.p("p")), spec(post)));
        return obs(Obligation::refine("loop", lhs, while_loop(ctx.space, I.e("b"), I.c("c"))));
      });
  l.steer = [](Instance& I, const LawContext& ctx, std::mt19937_64& rng) { steer_loop(I, ctx, rng, false); };
  return l;
}

}  // namespace lawkit

namespace {

LawSpec without(const std::string& law, const std::string& proviso, const std::string& suffix) {
  const LawSpec* base = nullptr;
  for (const auto& l : law_registry())
    if (l.name == law) base = &l;
  if (!base) throw std::logic_error("negative control of unknown law " + law);
  LawSpec c = *base;
  auto it = std::find_if(c.provisos.begin(), c.provisos.end(), [&](const Proviso& p) { return p.name == proviso; });
  if (it == c.provisos.end()) throw std::logic_error("law " + law + " has no proviso " + proviso);
  c.provisos.erase(it);
  c.name = law + "-without-" + suffix;
  c.group = "negative-control";
  c.dropped = proviso;
  return c;
}

}  // namespace

const std::vector<LawSpec>& negative_controls() {
  static const std::vector<LawSpec> controls = {
      without("guar-opt", "g reflexive", "reflexivity"),
      without("rely-idle-stable", "p stable under r", "stability"),
      without("rely-conditional", "bt stable under p ◁ r", "bt-stability"),
      without("spec-seq-introduce", "p1 ◁ ((q1 ▷ p2) ⨾ q2) ⊆ q", "containment"),
      without("rely-loop-early", "≻ well founded", "well-foundedness"),
      without("guar-strengthen", "g0 ⊇ g1", "containment"),
      without("rely-weaken", "r0 ⊆ r1", "containment"),
      without("atomic-spec-strengthen-post", "p ◁ q2 ⊆ q1", "containment"),
      without("guar-idle", "g reflexive", "reflexivity"),
      without("tolerate-interference", "q tolerates r from p", "tolerance"),
  };
  return controls;
}

}  // namespace rgc
