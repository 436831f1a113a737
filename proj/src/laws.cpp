#include "rgcalc/laws.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "rgcalc/syntax.hpp"

namespace rgc {

const char* param_type_name(ParamType t) {
  switch (t) {
    case ParamType::Rel: return "rel";
    case ParamType::Set: return "set";
    case ParamType::Cmd: return "cmd";
    case ParamType::AbortCmd: return "cmd";
    case ParamType::Atom: return "atomic";
    case ParamType::Expr: return "expr";
    case ParamType::Value: return "value";
    case ParamType::Var: return "var";
    case ParamType::VarSet: return "varset";
    case ParamType::Order: return "order";
    case ParamType::Op: return "op";
  }
  return "?";
}

const char* law_status_name(LawStatus s) {
  switch (s) {
    case LawStatus::Pass: return "PASS";
    case LawStatus::Fail: return "FAIL";
    case LawStatus::Vacuous: return "VACUOUS";
  }
  return "?";
}

Command sync_op(int op, const Command& c, const Command& d) {
  return op == 0 ? cmd::par(c, d) : cmd::conj(c, d);
}

namespace {

// Largest relation lattice enumerated in a context (2^(n*n) elements).
constexpr std::size_t kMaxRelLattice = 512;
constexpr std::size_t kMaxSetStates = 12;
constexpr std::size_t kMaxReportedFailures = 5;

std::uint64_t fnv(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::vector<std::vector<std::string>> var_subsets(const StateSpace& sp) {
  std::vector<std::vector<std::string>> out;
  std::size_t v = sp.var_count();
  for (std::size_t mask = 0; mask < (std::size_t{1} << v); ++mask) {
    std::vector<std::string> xs;
    for (std::size_t i = 0; i < v; ++i)
      if (mask >> i & 1) xs.push_back(sp.var(i).name);
    out.push_back(xs);
  }
  return out;
}

std::vector<Command> build_pool(const Space& sp, bool with_abort) {
  const Rel id = Rel::id(sp), univ = Rel::univ(sp), change = ~id;
  State s0 = 0;
  const StateSet first = StateSet::singleton(sp, s0), rest = ~first;
  const Rel to_first = Rel::product(StateSet::all(sp), first);
  using namespace cmd;
  std::vector<Command> p = {
      nil(sp),
      magic(sp),
      skip(sp),
      chaos(sp),
      term(sp),
      idle(sp),
      pgm(univ),
      pgm(id),
      pgm(change),
      pgm(to_first),
      env(univ),
      env(change),
      test(first),
      test(rest),
      seq(pgm(change), env(id)),
      seq(env(change), pgm(to_first)),
      seq(test(first), pgm(change)),
      choice(nil(sp), pgm(to_first)),
      choice(pgm(change), env(change)),
      om(pgm(change)),
      fin(env(change)),
      par(pgm(change), env(univ)),
      conj(skip(sp), pgm(univ)),
      seq(idle(sp), test(rest)),
  };
  if (with_abort) {
    p.push_back(abort(sp));
    p.push_back(seq(pgm(change), abort(sp)));
    p.push_back(choice(nil(sp), seq(test(first), abort(sp))));
    p.push_back(assertion(rest));
    p.push_back(seq(env(change), abort(sp)));
  }
  return p;
}

std::vector<Expr> build_exprs(const Space& sp) {
  std::vector<Expr> out = {ExprNode::constant(0), ExprNode::constant(1)};
  auto is_boolean = [](const std::vector<Value>& d) {
    return std::all_of(d.begin(), d.end(), [](Value v) { return v == 0 || v == 1; });
  };
  for (std::size_t v = 0; v < sp->var_count(); ++v) {
    Expr x = ExprNode::variable(sp, sp->var(v).name);
    out.push_back(x);
    out.push_back(ops::add(x, x));
    out.push_back(ops::mul(ExprNode::constant(2), x));
    out.push_back(ops::sub(x, x));
    out.push_back(ops::add(x, ExprNode::constant(1)));
    if (is_boolean(sp->var(v).domain)) out.push_back(ops::logical_not(x));
    out.push_back(ops::eq(x, ExprNode::constant(1)));
  }
  if (sp->var_count() >= 2) {
    Expr x = ExprNode::variable(sp, sp->var(0).name), y = ExprNode::variable(sp, sp->var(1).name);
    out.push_back(ops::add(x, y));
    out.push_back(ops::eq(x, y));
  }
  return out;
}

std::vector<NamedOrder> build_orders(const std::vector<Value>& values) {
  NamedOrder gt{">", ValueOrder::greater_than(values)};
  NamedOrder lt{"<", {}};
  for (auto [a, b] : gt.order.gt) lt.order.gt.insert({b, a});
  NamedOrder cyc{"cyclic", {}};
  for (std::size_t i = 0; i < values.size() && values.size() > 1; ++i)
    cyc.order.gt.insert({values[i], values[(i + 1) % values.size()]});
  NamedOrder ge{">=", gt.order};
  for (Value v : values) ge.order.gt.insert({v, v});
  return {gt, lt, cyc, ge, NamedOrder{"empty", {}}};
}

std::size_t domain_size(ParamType t, const LawContext& ctx, bool& enumerable) {
  switch (t) {
    case ParamType::Rel:
      enumerable = enumerable && !ctx.rels.empty();
      return ctx.rels.size();
    case ParamType::Set:
      enumerable = enumerable && !ctx.sets.empty();
      return ctx.sets.size();
    case ParamType::Cmd: return ctx.pool.size();
    case ParamType::AbortCmd: return ctx.abort_pool.size();
    case ParamType::Atom: return ctx.atoms.size();
    case ParamType::Expr: return ctx.exprs.size();
    case ParamType::Value: return ctx.values.size();
    case ParamType::Var: return ctx.space->var_count();
    case ParamType::VarSet: return std::size_t{1} << ctx.space->var_count();
    case ParamType::Order: return ctx.orders.size();
    case ParamType::Op: return 2;
  }
  return 0;
}

void assign_indexed(Instance& inst, const ParamDecl& d, std::size_t i, const LawContext& ctx) {
  const auto& sp = *ctx.space;
  switch (d.type) {
    case ParamType::Rel: inst.rels[d.name] = ctx.rels[i]; break;
    case ParamType::Set: inst.sets[d.name] = ctx.sets[i]; break;
    case ParamType::Cmd: inst.cmds[d.name] = ctx.pool[i]; break;
    case ParamType::AbortCmd: inst.cmds[d.name] = ctx.abort_pool[i]; break;
    case ParamType::Atom: inst.cmds[d.name] = ctx.atoms[i]; break;
    case ParamType::Expr: inst.exprs[d.name] = ctx.exprs[i]; break;
    case ParamType::Value: inst.values[d.name] = ctx.values[i]; break;
    case ParamType::Var: inst.vars[d.name] = sp.var(i).name; break;
    case ParamType::VarSet: inst.varsets[d.name] = var_subsets(sp)[i]; break;
    case ParamType::Order: inst.orders[d.name] = ctx.orders[i]; break;
    case ParamType::Op: inst.ops[d.name] = static_cast<int>(i); break;
  }
}

template <class T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

void assign_random(Instance& inst, const ParamDecl& d, const LawContext& ctx, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  switch (d.type) {
    case ParamType::Rel: inst.rels[d.name] = random_rel(ctx.space, rng); break;
    case ParamType::Set: inst.sets[d.name] = random_set(ctx.space, rng); break;
    case ParamType::Cmd:
      inst.cmds[d.name] = coin(rng) ? pick(ctx.pool, rng) : random_command(ctx, rng, 2, false);
      break;
    case ParamType::AbortCmd:
      inst.cmds[d.name] = coin(rng) ? pick(ctx.abort_pool, rng) : random_command(ctx, rng, 2, true);
      break;
    case ParamType::Atom:
      inst.cmds[d.name] = cmd::choice(cmd::pgm(random_rel(ctx.space, rng)), cmd::env(random_rel(ctx.space, rng)));
      break;
    default: {
      bool enumerable = true;
      std::size_t n = domain_size(d.type, ctx, enumerable);
      assign_indexed(inst, d, std::uniform_int_distribution<std::size_t>(0, n - 1)(rng), ctx);
    }
  }
}

std::string render_trace(const Counterexample& cx, const StateSpace& sp) {
  return render(cx.behavior, sp);
}

}  // namespace

Rel random_rel(const Space& space, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 99);
  std::bernoulli_distribution coin(0.5);
  int k = kind(rng);
  Rel id = Rel::id(space);
  if (k < 10) return Rel::univ(space);
  if (k < 20) return id;
  Rel r = Rel::of(space, [&](State, State) { return coin(rng); });
  if (k < 45) return r & id;
  if (k < 55) return r | id;
  return r;
}

StateSet random_set(const Space& space, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  return StateSet::of(space, [&](State) { return coin(rng); });
}

Command random_command(const LawContext& ctx, std::mt19937_64& rng, std::size_t depth, bool with_abort) {
  const Space& sp = ctx.space;
  std::uniform_int_distribution<int> leaf(0, with_abort ? 10 : 8);
  std::uniform_int_distribution<int> op(0, 5);
  if (depth == 0 || std::bernoulli_distribution(0.4)(rng)) {
    switch (leaf(rng)) {
      case 0: return cmd::pgm(random_rel(sp, rng));
      case 1: return cmd::env(random_rel(sp, rng));
      case 2: return cmd::test(random_set(sp, rng));
      case 3: return cmd::nil(sp);
      case 4: return cmd::skip(sp);
      case 5: return cmd::idle(sp);
      case 6: return cmd::chaos(sp);
      case 7: return cmd::term(sp);
      case 8: return cmd::magic(sp);
      case 9: return cmd::abort(sp);
      default: return cmd::assertion(random_set(sp, rng));
    }
  }
  Command a = random_command(ctx, rng, depth - 1, with_abort);
  switch (op(rng)) {
    case 0: return cmd::seq(a, random_command(ctx, rng, depth - 1, with_abort));
    case 1: return cmd::choice(a, random_command(ctx, rng, depth - 1, with_abort));
    case 2: return cmd::par(a, random_command(ctx, rng, depth - 1, with_abort));
    case 3: return cmd::conj(a, random_command(ctx, rng, depth - 1, with_abort));
    case 4: return cmd::om(a);
    default: return cmd::fin(a);
  }
}

LawContext LawContext::make(const Space& space, std::size_t bound) {
  LawContext ctx;
  ctx.space = space;
  ctx.bound = bound;
  std::size_t n = space->size();
  if (n * n < 63 && (std::size_t{1} << (n * n)) <= kMaxRelLattice) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n * n)); ++mask) {
      Rel r(space);
      for (std::size_t i = 0; i < n * n; ++i)
        if (mask >> i & 1) r.insert(static_cast<State>(i / n), static_cast<State>(i % n));
      ctx.rels.push_back(r);
    }
  }
  if (n <= kMaxSetStates) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask)
      ctx.sets.push_back(StateSet::of(space, [&](State s) { return (mask >> s & 1) != 0; }));
  }
  ctx.pool = build_pool(space, false);
  ctx.abort_pool = build_pool(space, true);
  if (!ctx.rels.empty() && ctx.rels.size() <= 16) {
    for (const auto& r1 : ctx.rels)
      for (const auto& r2 : ctx.rels) ctx.atoms.push_back(cmd::choice(cmd::pgm(r1), cmd::env(r2)));
  } else {
    std::mt19937_64 rng(0xA70A1C);
    for (int i = 0; i < 64; ++i)
      ctx.atoms.push_back(cmd::choice(cmd::pgm(random_rel(space, rng)), cmd::env(random_rel(space, rng))));
  }
  ctx.exprs = build_exprs(space);
  std::set<Value> vals;
  for (const auto& v : space->vars()) vals.insert(v.domain.begin(), v.domain.end());
  for (const auto& e : ctx.exprs) vals.insert(e->range().begin(), e->range().end());
  ctx.values.assign(vals.begin(), vals.end());
  ctx.orders = build_orders(ctx.values);
  return ctx;
}

std::map<std::string, std::string> Instance::describe(const std::vector<ParamDecl>& decls) const {
  std::map<std::string, std::string> out;
  for (const auto& d : decls) {
    const std::string& n = d.name;
    switch (d.type) {
      case ParamType::Rel: out[n] = print_rel(rels.at(n)); break;
      case ParamType::Set: out[n] = print_set(sets.at(n)); break;
      case ParamType::Cmd:
      case ParamType::AbortCmd:
      case ParamType::Atom: out[n] = print_command(cmds.at(n)); break;
      case ParamType::Expr: out[n] = print_expr(exprs.at(n)); break;
      case ParamType::Value: out[n] = std::to_string(values.at(n)); break;
      case ParamType::Var: out[n] = vars.at(n); break;
      case ParamType::VarSet: {
        std::string s = "{";
        for (std::size_t i = 0; i < varsets.at(n).size(); ++i) s += (i ? "," : "") + varsets.at(n)[i];
        out[n] = s + "}";
        break;
      }
      case ParamType::Order: out[n] = orders.at(n).name; break;
      case ParamType::Op: out[n] = ops.at(n) == 0 ? "||" : "/\\"; break;
    }
  }
  return out;
}

InstanceResult check_instance(const LawSpec& law, const Instance& inst, const LawContext& ctx) {
  InstanceResult res;
  for (const auto& pv : law.provisos)
    if (!pv.holds(inst, ctx)) return res;
  for (const auto& ob : law.conclude(inst, ctx)) {
    if (ob.relational) {
      if (!ob.holds) {
        res.verdict = Verdict::Fail;
        res.obligation = ob.label;
        res.trace = ob.witness;
        return res;
      }
      continue;
    }
    BehaviorSet l = denote(ob.lhs, ctx.bound), r = denote(ob.rhs, ctx.bound);
    if (auto cx = find_counterexample(l, r)) {
      res.verdict = Verdict::Fail;
      res.obligation = ob.label + (ob.equals ? " (rhs behavior missing from lhs)" : "");
      res.trace = render_trace(*cx, *ctx.space);
      res.frontier = cx->frontier;
      return res;
    }
    if (ob.equals) {
      if (auto cx = find_counterexample(r, l)) {
        res.verdict = Verdict::Fail;
        res.obligation = ob.label + " (lhs behavior missing from rhs)";
        res.trace = render_trace(*cx, *ctx.space);
        res.frontier = cx->frontier;
        return res;
      }
    }
  }
  res.verdict = Verdict::Pass;
  return res;
}

std::optional<std::size_t> lattice_size(const LawSpec& law, const LawContext& ctx) {
  bool enumerable = true;
  std::size_t total = 1;
  const std::size_t limit = std::size_t{1} << 40;
  for (const auto& d : law.params) {
    std::size_t n = domain_size(d.type, ctx, enumerable);
    if (!enumerable || n == 0) return std::nullopt;
    total = total > limit / n ? limit : total * n;
  }
  return total;
}

LawReport check_law(const LawSpec& law, const LawContext& ctx, const Strategy& strategy) {
  auto t0 = std::chrono::steady_clock::now();
  LawReport rep;
  rep.name = law.name;
  rep.group = law.group;
  auto size = lattice_size(law, ctx);
  bool exhaustive = !strategy.force_random && size && *size <= strategy.exhaustive_cap;

  auto record = [&](const Instance& inst) {
    ++rep.instances;
    InstanceResult r = check_instance(law, inst, ctx);
    if (r.verdict == Verdict::ProvisoUnmet) return;
    ++rep.proviso_met;
    if (r.verdict == Verdict::Fail) {
      ++rep.failure_count;
      if (rep.failures.size() < kMaxReportedFailures)
        rep.failures.push_back({inst.describe(law.params), r.obligation, r.trace, r.frontier});
    }
  };

  if (exhaustive) {
    rep.strategy = "exhaustive";
    std::vector<std::size_t> radix;
    bool enumerable = true;
    for (const auto& d : law.params) radix.push_back(domain_size(d.type, ctx, enumerable));
    std::vector<std::size_t> idx(radix.size(), 0);
    for (;;) {
      Instance inst;
      for (std::size_t i = 0; i < radix.size(); ++i) assign_indexed(inst, law.params[i], idx[i], ctx);
      record(inst);
      std::size_t i = 0;
      while (i < radix.size() && ++idx[i] == radix[i]) idx[i++] = 0;
      if (i == radix.size()) break;
    }
  } else {
    rep.strategy = "random";
    rep.seed = strategy.seed;
    std::mt19937_64 rng(strategy.seed ^ fnv(law.name));
    for (std::size_t n = 0; n < strategy.samples; ++n) {
      Instance inst;
      for (const auto& d : law.params) assign_random(inst, d, ctx, rng);
      if (law.steer) law.steer(inst, ctx, rng);
      record(inst);
    }
  }
  rep.status = rep.failure_count ? LawStatus::Fail : rep.proviso_met ? LawStatus::Pass : LawStatus::Vacuous;
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

const LawSpec* find_law(const std::string& name) {
  for (const auto* reg : {&law_registry(), &axiom_registry(), &negative_controls()})
    for (const auto& l : *reg)
      if (l.name == name) return &l;
  return nullptr;
}

}  // namespace rgc
