// Helpers shared by the law, axiom and negative-control registries.
#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rgcalc/laws.hpp"
#include "rgcalc/syntax.hpp"

namespace rgc::lawkit {

using Conclude = std::function<std::vector<Obligation>(const Instance&, const LawContext&)>;

inline LawSpec make_law(std::string name, std::string group, std::string statement, std::vector<ParamDecl> params,
                        std::vector<Proviso> provisos, Conclude conclude) {
  LawSpec l;
  l.name = std::move(name);
  l.group = std::move(group);
  l.statement = std::move(statement);
  l.params = std::move(params);
  l.provisos = std::move(provisos);
  l.conclude = std::move(conclude);
  return l;
}

template <class... Obs>
std::vector<Obligation> obs(Obs... o) {
  return {std::move(o)...};
}

inline bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <class T>
const T& pick_one(const std::vector<T>& v, std::mt19937_64& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

/// First excess pair and how many there are.
inline std::string excess_witness(const Rel& extra) {
  const Space& sp = extra.space();
  for (State a : enumerate_states(*sp))
    for (State b : extra.row(a))
      return "excess pair (" + sp->render(a) + ", " + sp->render(b) + ") of " + std::to_string(extra.count());
  return "";
}

inline std::string excess_witness(const StateSet& extra) {
  auto ms = extra.members();
  return ms.empty() ? "" : "excess state " + extra.space()->render(ms.front()) + " of " + std::to_string(ms.size());
}

/// Relational containment as a decided fact, witnessed by the excess pairs.
inline Obligation containment(std::string label, const Rel& lhs, const Rel& rhs) {
  Rel extra = lhs - rhs;
  return Obligation::fact(std::move(label), extra.empty_rel(), excess_witness(extra));
}

inline Obligation containment(std::string label, const StateSet& lhs, const StateSet& rhs) {
  StateSet extra = lhs - rhs;
  return Obligation::fact(std::move(label), extra.empty(), excess_witness(extra));
}

inline std::vector<std::size_t> var_indices(const Space& sp, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& n : names) out.push_back(sp->var_index(n));
  return out;
}

/// id(X): pairs agreeing on X.
inline Rel id_on(const Space& sp, const std::vector<std::string>& names) { return identity_on(sp, var_indices(sp, names)); }
/// id(X̄): pairs agreeing outside X.
inline Rel frame_rel(const Space& sp, const std::vector<std::string>& names) {
  return identity_off(sp, var_indices(sp, names));
}

inline bool names_subset(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  for (const auto& n : a)
    if (std::find(b.begin(), b.end(), n) == b.end()) return false;
  return true;
}

inline bool names_disjoint(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  for (const auto& n : a)
    if (std::find(b.begin(), b.end(), n) != b.end()) return false;
  return true;
}

/// ∨σ τ{σ};f(σ);τ(q(|σ|)).
template <class F>
Command per_state(const Space& sp, const Rel& q, F f) {
  std::vector<Command> alts;
  for (State s : enumerate_states(*sp)) {
    StateSet one = StateSet::singleton(sp, s);
    alts.push_back(cmd::seq({cmd::test(one), f(s), cmd::test(image(q, one))}));
  }
  return cmd::nondet(sp, std::move(alts));
}

/// Values k quantified over: everything in the context plus the range of e.
inline std::vector<Value> values_for(const LawContext& ctx, const Expr& e) {
  std::vector<Value> vs = ctx.values;
  for (Value v : e->range())
    if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
  return vs;
}

template <class P>
bool for_all_values(const LawContext& ctx, const Expr& e, P pred) {
  for (Value k : values_for(ctx, e))
    if (!pred(k)) return false;
  return true;
}

/// Transitivity of ≻ over the listed values.
inline bool order_transitive(const ValueOrder& o, const std::vector<Value>& vs) {
  for (Value a : vs)
    for (Value b : vs)
      for (Value c : vs)
        if (o.greater(a, b) && o.greater(b, c) && !o.greater(a, c)) return false;
  return true;
}

/// Transitivity of the reflexive closure ⪰ over the listed values.
inline bool preorder_transitive(const ValueOrder& o, const std::vector<Value>& vs) {
  for (Value a : vs)
    for (Value b : vs)
      for (Value c : vs)
        if (o.greater_eq(a, b) && o.greater_eq(b, c) && !o.greater_eq(a, c)) return false;
  return true;
}

/// The stable precondition used for one k by rely-guar-assign-stable-pre:
/// rtc(r)(|eq(k,e) ∪ s|), the least set containing eq(k,e) ∪ s stable under r.
inline StateSet stable_pre_p1(const Instance& I, const LawContext& ctx, Value k) {
  return image(rtc(I.r("r")), eq_val(k, I.e("e"), ctx.space) | I.p("s"));
}

// Laws with bespoke sampling, defined in law_complex.cpp.
LawSpec spec_seq_introduce();
LawSpec spec_strengthen_with_trading();
LawSpec guar_opt();
LawSpec guar_idle();
LawSpec rely_idle_stable();
LawSpec tolerate_interference();
LawSpec atomic_spec_strengthen_post();
LawSpec rely_conditional();
LawSpec well_founded_recursion();
LawSpec rely_loop_early();
LawSpec rely_loop();

}  // namespace rgc::lawkit
