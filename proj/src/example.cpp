#include "rgcalc/example.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "law_support.hpp"
#include "rgcalc/syntax.hpp"

namespace rgc {

Space rem_from_set_space(int bits) {
  if (bits < 1 || bits > 4) throw ConfigError("rem-from-set needs 1 to 4 bits");
  std::vector<Value> words, elems;
  for (Value v = 0; v < (Value{1} << bits); ++v) words.push_back(v);
  for (Value v = 0; v < bits; ++v) elems.push_back(v);
  std::size_t cap = words.size() * words.size() * words.size() * elems.size();
  return StateSpace::make({{"w", words}, {"pw", words}, {"nw", words}, {"i", elems}}, cap);
}

namespace {

bool sup(Value a, Value b) { return (a & b) == b; }
bool psup(Value a, Value b) { return a != b && sup(a, b); }
bool has(Value set, Value i) { return (set >> i) & 1; }
Value without(Value set, Value i) { return set & ~(Value{1} << i); }

/// Field access and predicate builders over the example space.
struct Word {
  Space sp;
  std::size_t vw, vpw, vnw, vi;
  Value top;
  std::vector<Value> words;

  explicit Word(int bits) : sp(rem_from_set_space(bits)) {
    vw = sp->var_index("w");
    vpw = sp->var_index("pw");
    vnw = sp->var_index("nw");
    vi = sp->var_index("i");
    top = (Value{1} << bits) - 1;
    for (Value v = 0; v <= top; ++v) words.push_back(v);
  }
  Value w(State s) const { return sp->value(s, vw); }
  Value pw(State s) const { return sp->value(s, vpw); }
  Value nw(State s) const { return sp->value(s, vnw); }
  Value i(State s) const { return sp->value(s, vi); }

  template <class F>
  StateSet set(F f) const {
    return StateSet::of(sp, f);
  }
  template <class F>
  Rel rel(F f) const {
    return Rel::of(sp, f);
  }
  Expr var(const std::string& n) const { return ExprNode::variable(sp, n); }
};

using Parts = std::vector<Obligation>;

Obligation holds(std::string label, bool ok, std::string witness = {}) {
  return Obligation::fact(std::move(label), ok, std::move(witness));
}

Obligation contained(std::string label, const Rel& lhs, const Rel& rhs) {
  return lawkit::containment(std::move(label), lhs, rhs);
}

Obligation contained(std::string label, const StateSet& lhs, const StateSet& rhs) {
  return lawkit::containment(std::move(label), lhs, rhs);
}

Command rg(const Rel& r, const Rel& g, const Command& c) { return cmd::conj(cmd::rely(r), cmd::conj(cmd::guar(g), c)); }
Command framed(const std::vector<std::string>& xs, const Rel& q) { return cmd::frame(xs, cmd::spec(q)); }
Command pre(const StateSet& p, const Command& c) { return cmd::seq(cmd::assertion(p), c); }

LawReport decide(const std::string& name, const Parts& parts, std::size_t K) {
  auto t0 = std::chrono::steady_clock::now();
  LawReport rep;
  rep.name = name;
  rep.group = "example";
  rep.strategy = "exhaustive";
  for (const auto& o : parts) {
    ++rep.instances;
    ++rep.proviso_met;
    Failure f;
    f.obligation = o.label;
    f.params["obligation"] = o.label;
    bool ok = o.holds;
    if (o.relational) {
      f.trace = o.witness;
    } else if (auto cex = find_counterexample(o.lhs, o.rhs, K)) {
      ok = false;
      f.trace = render(cex->behavior, *o.lhs->space());
      f.frontier = cex->frontier;
    }
    if (!ok) {
      ++rep.failure_count;
      if (rep.failures.size() < 5) rep.failures.push_back(std::move(f));
    }
  }
  rep.status = rep.failure_count == 0 ? LawStatus::Pass : LawStatus::Fail;
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::string at_k(const std::string& label, Value k) { return label + " [k=" + std::to_string(k) + "]"; }

}  // namespace

std::vector<LawReport> run_rem_from_set(const ExampleOptions& opts) {
  const Word W(opts.bits);
  const Space& sp = W.sp;
  const std::size_t K = opts.bound;
  const std::vector<std::string> all3 = {"nw", "pw", "w"};

  // Rely of the top-level spec command and its extension with the local variables.
  Rel r0 = W.rel([&](State a, State b) { return sup(W.w(a), W.w(b)) && W.i(a) == W.i(b); });
  Rel rl = W.rel([&](State a, State b) {
    return sup(W.w(a), W.w(b)) && W.i(a) == W.i(b) && W.nw(a) == W.nw(b) && W.pw(a) == W.pw(b);
  });
  Rel g = W.rel([&](State a, State b) {
    bool only_i = sup(Value{1} << W.i(a), W.w(a) & ~W.w(b));
    return opts.weaken_guarantee ? only_i : sup(W.w(a), W.w(b)) && only_i;
  });
  StateSet p = W.set([&](State s) { return sup(W.top, W.w(s)) && W.i(s) < static_cast<Value>(opts.bits); });
  Rel i_gone = W.rel([&](State, State b) { return !has(W.w(b), W.i(b)); });
  Rel body_post = W.rel([&](State a, State b) { return psup(W.w(a), W.w(b)) || !has(W.w(b), W.i(b)); });

  Expr ew = W.var("w"), epw = W.var("pw"), ei = W.var("i");
  Expr guard = ops::member(ei, ew);
  Expr removed = ops::remove_elem(epw, ei);
  ValueOrder superset = ValueOrder::strict_superset(opts.bits);

  std::vector<LawReport> out;

  // Two applications of spec-seq-introduce on the loop body.
  {
    Parts parts;
    Rel q = body_post;
    Rel read = W.rel([&](State a, State b) { return sup(W.w(a), W.pw(b)) && sup(W.pw(b), W.w(b)); });
    StateSet pw_ge_w = W.set([&](State s) { return sup(W.pw(s), W.w(s)); });
    Rel rem = W.rel([&](State a, State b) { return psup(W.pw(a), W.w(b)) || !has(W.w(b), W.i(b)); });
    parts.push_back(holds("read-w establishes pw ⊇ w", range_restrict(read, pw_ge_w) == read));
    parts.push_back(contained("Σ ◁ ((q1 ▷ p2) ⨾ q2) ⊆ q (first)", compose(range_restrict(read, pw_ge_w), rem), q));
    parts.push_back(Obligation::refine("first application", pre(StateSet::all(sp), framed(all3, q)),
                                       cmd::seq({cmd::assertion(StateSet::all(sp)),
                                                 framed(all3, range_restrict(read, pw_ge_w)),
                                                 cmd::assertion(pw_ge_w), framed(all3, rem)})));

    Rel assign_nw = W.rel([&](State a, State b) {
      return W.nw(b) == without(W.pw(a), W.i(a)) && W.pw(b) == W.pw(a) && sup(W.pw(b), W.w(b)) &&
             W.i(b) == W.i(a);
    });
    StateSet cas_pre = W.set([&](State s) { return sup(W.pw(s), W.w(s)) && W.nw(s) == without(W.pw(s), W.i(s)); });
    parts.push_back(holds("assign-nw establishes pw ⊇ w ∧ nw = pw − {i}",
                          range_restrict(dom_restrict(pw_ge_w, assign_nw), cas_pre) == dom_restrict(pw_ge_w, assign_nw)));
    parts.push_back(contained("p1 ◁ ((q1 ▷ p2) ⨾ q2) ⊆ q (second)",
                              dom_restrict(pw_ge_w, compose(range_restrict(assign_nw, cas_pre), rem)), rem));
    parts.push_back(Obligation::refine(
        "second application", pre(pw_ge_w, framed(all3, rem)),
        cmd::seq({cmd::assertion(pw_ge_w), framed(all3, range_restrict(assign_nw, cas_pre)), cmd::assertion(cas_pre),
                  framed(all3, rem)})));
    out.push_back(decide("spec-seq-introduce", parts, K));
  }

  // {pw ⊇ w} is stable under w ⊇ w' ∧ pw' = pw.
  {
    StateSet pw_ge_w = W.set([&](State s) { return sup(W.pw(s), W.w(s)); });
    Rel r = W.rel([&](State a, State b) { return sup(W.w(a), W.w(b)) && W.pw(a) == W.pw(b); });
    out.push_back(decide("stable-pred", {holds("{pw ⊇ w} stable under r", is_stable(pw_ge_w, r))}, K));
  }

  // Loop-body obligation of rely-loop-early via spec-strengthen-with-trading.
  Rel frame_w = identity_off(sp, {W.vw});
  Command body = rg(r0, g, pre(p, framed({"w"}, body_post)));
  {
    Parts parts;
    Rel traded = rtc(r0 | (g & frame_w));
    Rel shrink = W.rel([&](State a, State b) { return sup(W.w(a), W.w(b)) && W.i(a) == W.i(b); });
    parts.push_back(contained("(r ∪ (g ∩ id(w̄)))* ⊆ w ⊇ w' ∧ i' = i", traded, shrink));
    for (Value k : W.words) {
      StateSet pk = p & W.set([&](State s) { return sup(k, W.w(s)); });
      Rel q1 = W.rel([&](State, State b) {
        return sup(W.top, W.w(b)) && W.i(b) < static_cast<Value>(opts.bits) &&
               (psup(k, W.w(b)) || !has(W.w(b), W.i(b)));
      });
      parts.push_back(contained(at_k("p ◁ (w ⊇ w' ∧ i' = i ∩ q2) ⊆ q1", k), dom_restrict(pk, shrink & body_post), q1));
      parts.push_back(contained(at_k("p ◁ ((r ∪ (g ∩ id(w̄)))* ∩ q2) ⊆ q1", k), dom_restrict(pk, traded & body_post), q1));
      parts.push_back(Obligation::refine(at_k("loop-body refinement", k), rg(r0, g, pre(pk, framed({"w"}, q1))), body));
    }
    out.push_back(decide("loop-body", parts, K));
  }

  // Three applications of frame-restrict under the rely with locals.
  Rel read = W.rel([&](State a, State b) { return sup(W.w(a), W.pw(b)) && sup(W.pw(b), W.w(b)); });
  Rel nw_post = W.rel([&](State a, State b) { return W.nw(b) == without(W.pw(a), W.i(a)) && sup(W.pw(b), W.w(b)); });
  Rel cas_post = W.rel([&](State a, State b) { return psup(W.pw(a), W.w(b)) || !has(W.w(b), W.i(b)); });
  {
    Parts parts;
    struct Use {
      std::vector<std::string> Y, Z;
      Rel q;
    };
    std::vector<Use> uses = {{{}, {"pw"}, read}, {{"pw", "i"}, {"nw"}, nw_post}, {{}, {"w"}, cas_post}};
    for (std::size_t u = 0; u < uses.size(); ++u) {
      const Use& use = uses[u];
      std::string tag = " (" + std::to_string(u + 1) + ")";
      Rel idY = identity_on(sp, [&] {
        std::vector<std::size_t> ix;
        for (const auto& n : use.Y) ix.push_back(sp->var_index(n));
        return ix;
      }());
      bool z_in_x = true, y_out_z = true;
      for (const auto& z : use.Z) z_in_x = z_in_x && std::find(all3.begin(), all3.end(), z) != all3.end();
      for (const auto& y : use.Y) y_out_z = y_out_z && std::find(use.Z.begin(), use.Z.end(), y) == use.Z.end();
      parts.push_back(holds("Z ⊆ X" + tag, z_in_x));
      parts.push_back(holds("Y ⊆ Z̄" + tag, y_out_z));
      parts.push_back(contained("r ⊆ id(Y)" + tag, rl, idY));
      parts.push_back(Obligation::refine("frame-restrict" + tag, cmd::conj(cmd::rely(rl), framed(all3, idY & use.q)),
                                         cmd::conj(cmd::rely(rl), framed(use.Z, use.q))));
    }
    // The second use's post with id(pw, i) is the assign-nw post of the chain.
    Rel chain_post = W.rel([&](State a, State b) {
      return W.nw(b) == without(W.pw(a), W.i(a)) && W.pw(b) == W.pw(a) && sup(W.pw(b), W.w(b)) && W.i(b) == W.i(a);
    });
    parts.push_back(holds("id(pw,i) ∩ q matches the chain (2)",
                          (identity_on(sp, {W.vpw, W.vi}) & nw_post) == chain_post));
    out.push_back(decide("frame-restrict", parts, K));
  }

  // The CAS part's post tolerates the rely from its precondition.
  StateSet cas_pre = W.set([&](State s) { return sup(W.pw(s), W.w(s)) && W.nw(s) == without(W.pw(s), W.i(s)); });
  {
    Parts parts;
    parts.push_back(holds("p stable under r", is_stable(cas_pre, rl)));
    parts.push_back(contained("p ◁ (r ⨾ q) ⊆ q", dom_restrict(cas_pre, compose(rl, cas_post)), cas_post));
    parts.push_back(contained("p ◁ (q ⨾ r) ⊆ q", dom_restrict(cas_pre, compose(cas_post, rl)), cas_post));
    parts.push_back(holds("q tolerates r from p", tolerates(cas_post, rl, cas_pre)));
    out.push_back(decide("tolerates", parts, K));
  }

  // CAS introduction from the third component.
  Rel cas_rel = W.rel([&](State a, State b) {
    return W.w(a) == W.pw(a) ? W.w(b) == W.nw(a) : W.w(b) == W.w(a);
  });
  Rel cas_rely = W.rel([&](State a, State b) { return W.nw(a) == W.nw(b) && W.pw(a) == W.pw(b); });
  Command cas = cmd::conj(cmd::rely(cas_rely), cmd::frame({"w"}, cmd::atomic(StateSet::all(sp), cas_rel)));
  {
    Parts parts;
    Rel q_traded = W.rel([&](State a, State b) { return psup(W.pw(a), W.w(b)) || !has(W.w(b), W.i(a)); });
    Rel wx = rtc(rl | (g & frame_w));
    parts.push_back(contained("p ◁ ((r ∪ (g ∩ id(w̄)))* ∩ q2) ⊆ q1", dom_restrict(cas_pre, wx & q_traded), cas_post));
    parts.push_back(holds("g reflexive", g.is_reflexive()));
    parts.push_back(holds("p stable under r", is_stable(cas_pre, rl)));
    parts.push_back(holds("q tolerates r from p", tolerates(q_traded, rl, cas_pre)));
    parts.push_back(contained("p ◁ cas ⊆ g ∩ q", dom_restrict(cas_pre, cas_rel), g & q_traded));
    parts.push_back(contained("p ⊆ Σ", cas_pre, StateSet::all(sp)));
    parts.push_back(contained("r ⊆ cas rely", rl, cas_rely));
    Command lhs = rg(rl, g, pre(cas_pre, framed({"w"}, cas_post)));
    Command traded = rg(rl, g, pre(cas_pre, framed({"w"}, q_traded)));
    Command atomic = cmd::conj(cmd::rely(rl), cmd::frame({"w"}, cmd::atomic(cas_pre, g & q_traded)));
    parts.push_back(Obligation::refine("strengthen with trading", lhs, traded));
    parts.push_back(Obligation::refine("atomic-spec-introduce", traded, atomic));
    parts.push_back(Obligation::refine("to CAS", atomic, cas));
    parts.push_back(Obligation::refine("component refines CAS", lhs, cas));
    out.push_back(decide("intro-CAS", parts, K));
  }

  // nw := pw − {i} by local-expr-assign.
  {
    Parts parts;
    StateSet pw_ge_w = W.set([&](State s) { return sup(W.pw(s), W.w(s)); });
    Rel not_nw = identity_off(sp, {W.vnw});
    parts.push_back(holds("e single reference under r", is_single_reference(removed, rl)));
    parts.push_back(holds("e invariant under r", is_invariant_under(removed, rl)));
    parts.push_back(holds("g reflexive", g.is_reflexive()));
    parts.push_back(holds("q tolerates r from p", tolerates(nw_post, rl, pw_ge_w)));
    for (Value k : removed->range()) {
      Rel step = restrict(pw_ge_w & eq_val(k, removed, sp), not_nw, eq_val(k, W.var("nw"), sp));
      parts.push_back(contained(at_k("(p ∩ eq(k,e)) ◁ id(n̄w̄) ▷ eq(k,nw) ⊆ g ∩ q", k), step, g & nw_post));
    }
    parts.push_back(Obligation::refine("assign-nw refinement", rg(rl, g, pre(pw_ge_w, framed({"nw"}, nw_post))),
                                       cmd::assign(sp, "nw", removed)));
    out.push_back(decide("assign-nw", parts, K));
  }

  // pw := w by rely-assign-monotonic with ⊇.
  {
    Parts parts;
    Rel r = W.rel([&](State a, State b) { return sup(W.w(a), W.w(b)) && W.pw(a) == W.pw(b); });
    StateSet all = StateSet::all(sp);
    Rel not_pw = identity_off(sp, {W.vpw});
    Expr epw_var = W.var("pw");
    parts.push_back(holds("g reflexive", g.is_reflexive()));
    parts.push_back(holds("p stable under r", is_stable(all, r)));
    parts.push_back(holds("pw invariant under r", is_invariant_under(epw_var, r)));
    parts.push_back(holds("w single reference under r", is_single_reference(ew, r)));
    bool preorder = true;
    for (Value a : W.words)
      for (Value b : W.words)
        for (Value c : W.words)
          if (sup(a, b) && sup(b, c) && !sup(a, c)) preorder = false;
    parts.push_back(holds("⊇ reflexive and transitive", preorder));
    for (Value k : W.words) {
      StateSet ge = W.set([&](State s) { return sup(k, W.w(s)); });
      parts.push_back(contained(at_k("(p ∩ ge(k,w)) ◁ id(p̄w̄) ▷ eq(k,pw) ⊆ g", k),
                                restrict(all & ge, not_pw, eq_val(k, epw_var, sp)), g));
    }
    Rel decreasing = W.rel([&](State a, State b) { return sup(W.w(a), W.w(b)); });
    parts.push_back(contained("(p ◁ id(p̄w̄)) ∪ r ⊆ w ⊇ w'", not_pw | r, decreasing));
    parts.push_back(Obligation::refine("assign-pw refinement", rg(r, g, framed({"pw"}, read)), cmd::assign(sp, "pw", ew)));
    out.push_back(decide("assign-pw", parts, K));
  }

  // The loop by rely-loop-early: b = i ∈ w, bt = true, bf = bx = i ∉ w, q = true.
  Command spec5 = rg(r0, g, pre(p, framed({"w"}, i_gone)));
  {
    Parts parts;
    StateSet in_w = eq_val(1, guard, sp);
    StateSet bt = StateSet::all(sp), bf = ~in_w, bx = ~in_w;
    Rel q = Rel::univ(sp);
    Rel pr = dom_restrict(p, r0);
    parts.push_back(holds("b single reference under r", is_single_reference(guard, r0)));
    parts.push_back(contained("p ⊆ type(b) = 𝔹", p, type_of(guard, BoolEncoding{}.booleans(), sp)));
    parts.push_back(holds("q* ▷ p tolerates r from p", tolerates(range_restrict(rtc(q), p), r0, p)));
    parts.push_back(holds("bt stable under p ◁ r", is_stable(bt, pr)));
    parts.push_back(holds("bf stable under p ◁ r", is_stable(bf, pr)));
    parts.push_back(holds("bx stable under p ◁ r", is_stable(bx, pr)));
    parts.push_back(contained("p ◁ r ⊆ dec(w)", pr, dec_eq(ew, superset, sp)));
    parts.push_back(contained("p ∩ b ⊆ bt", p & in_w, bt));
    parts.push_back(contained("p ∩ ¬b ⊆ bf", p - in_w, bf));
    parts.push_back(contained("p ∩ bx ⊆ ¬b", p & bx, ~in_w));
    parts.push_back(holds("⊃ well founded", is_well_founded(superset)));
    for (Value k : W.words) {
      StateSet ge = W.set([&](State s) { return sup(k, W.w(s)); });
      StateSet gt = W.set([&](State s) { return psup(k, W.w(s)); });
      Command assumption = rg(r0, g, pre(bt & p & ge, framed({"w"}, range_restrict(rtc(q), p & (gt | bx)))));
      parts.push_back(Obligation::refine(at_k("loop assumption", k), assumption, body));
    }
    parts.push_back(Obligation::refine("loop introduction", spec5, cmd::while_loop(sp, guard, body)));
    out.push_back(decide("while-loop", parts, K));
  }

  // End to end: the top-level spec command with pw and nw as locals (in the frame and
  // unchanged by the environment) against the CAS loop.
  {
    Command spec = rg(rl, g, pre(p, framed(all3, i_gone)));
    Command loop = cmd::while_loop(
        sp, guard, cmd::seq({cmd::assign(sp, "pw", ew), cmd::assign(sp, "nw", removed), cas}));
    out.push_back(decide("final-refinement", {Obligation::refine("spec ⪰ CAS loop", spec, loop)}, K));
  }
  return out;
}

std::vector<LawReport> rem_from_set_scenario(std::size_t bound) {
  std::vector<LawReport> out;
  auto add = [&](const std::string& prefix, int bits) {
    for (auto& r : run_rem_from_set({bits, bound, false})) {
      r.name = prefix + r.name;
      out.push_back(std::move(r));
    }
  };
  add("rem-from-set/", 2);
  add("rem-from-set-n1/", 1);
  for (auto& r : run_rem_from_set({2, bound, true}))
    if (r.name == "loop-body") {
      r.name = "rem-from-set-weak-guarantee/loop-body";
      r.group = "negative-control";
      out.push_back(std::move(r));
    }
  return out;
}

}  // namespace rgc
