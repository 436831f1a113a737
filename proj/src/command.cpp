#include "rgcalc/command.hpp"

#include <algorithm>
#include <sstream>

namespace rgc {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdull;
}

std::uint64_t hash_str(const std::string& s) {
  // FNV-1a so hashes do not depend on the standard library implementation.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) h = (h ^ ch) * 0x100000001b3ull;
  return h;
}

bool kind_has_rel(const CmdNode& c) {
  if (c.kind() == Kind::Pgm || c.kind() == Kind::Env) return true;
  if (c.kind() != Kind::Derived) return false;
  switch (c.tag()) {
    case Tag::Guar: case Tag::Rely: case Tag::PSpec: case Tag::Spec: case Tag::Opt: case Tag::Atomic:
      return true;
    default:
      return false;
  }
}

bool kind_has_set(const CmdNode& c) {
  if (c.kind() == Kind::Test) return true;
  return c.kind() == Kind::Derived && (c.tag() == Tag::Assert || c.tag() == Tag::Atomic);
}

}  // namespace

const char* tag_name(Tag t) {
  switch (t) {
    case Tag::Assert: return "assert";
    case Tag::Magic: return "magic";
    case Tag::Nil: return "nil";
    case Tag::Skip: return "skip";
    case Tag::Chaos: return "chaos";
    case Tag::Term: return "term";
    case Tag::Idle: return "idle";
    case Tag::Guar: return "guar";
    case Tag::Rely: return "rely";
    case Tag::Frame: return "frame";
    case Tag::PSpec: return "pspec";
    case Tag::Spec: return "spec";
    case Tag::Opt: return "opt";
    case Tag::Atomic: return "atomic";
    case Tag::Assign: return "assign";
    case Tag::Cond: return "cond";
    case Tag::While: return "while";
    case Tag::Eval: return "eval";
  }
  return "?";
}

Command CmdNode::make(Parts p) {
  if (!p.space) throw CommandError("command built without a state space");
  for (const auto& k : p.kids) {
    if (!k) throw CommandError("null sub-command");
    require_same(p.space, k->space());
  }
  auto n = std::make_shared<CmdNode>();
  n->kind_ = p.kind;
  n->tag_ = p.tag;
  n->space_ = std::move(p.space);
  n->rel_ = std::move(p.rel);
  n->set_ = std::move(p.set);
  n->kids_ = std::move(p.kids);
  n->name_ = std::move(p.name);
  n->vars_ = std::move(p.vars);
  n->expr_ = std::move(p.expr);
  n->value_ = p.value;
  n->enc_ = p.enc;
  if (kind_has_rel(*n)) require_same(n->space_, n->rel_.space());
  if (kind_has_set(*n)) require_same(n->space_, n->set_.space());

  std::uint64_t h = mix(static_cast<std::uint64_t>(n->kind_) + 1, static_cast<std::uint64_t>(n->tag_));
  if (kind_has_rel(*n)) h = mix(h, n->rel_.hash());
  if (kind_has_set(*n)) h = mix(h, n->set_.hash());
  for (const auto& k : n->kids_) h = mix(h, k->hash());
  h = mix(h, hash_str(n->name_));
  for (auto v : n->vars_) h = mix(h, v);
  if (n->expr_) h = mix(h, n->expr_->hash());
  h = mix(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(n->value_)));
  if (n->kind_ == Kind::Derived && (n->tag_ == Tag::Cond || n->tag_ == Tag::While)) {
    h = mix(h, static_cast<std::uint64_t>(n->enc_.true_value));
    h = mix(h, static_cast<std::uint64_t>(n->enc_.false_value));
  }
  n->hash_ = h;

  if (n->kind_ == Kind::FixVar) {
    n->free_.insert(n->name_);
  } else {
    for (const auto& k : n->kids_) n->free_.insert(k->free_vars().begin(), k->free_vars().end());
    if (n->kind_ == Kind::Mu || n->kind_ == Kind::Nu) n->free_.erase(n->name_);
  }
  return n;
}

bool same_cmd(const Command& a, const Command& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->hash() != b->hash() || a->kind() != b->kind() || a->tag() != b->tag()) return false;
  if (kind_has_rel(*a) && !(a->rel() == b->rel())) return false;
  if (kind_has_set(*a) && !(a->set() == b->set())) return false;
  if (a->name() != b->name() || a->vars() != b->vars() || a->value() != b->value()) return false;
  if (static_cast<bool>(a->expr()) != static_cast<bool>(b->expr())) return false;
  if (a->expr() && !same_expr(a->expr(), b->expr())) return false;
  if (a->encoding().true_value != b->encoding().true_value ||
      a->encoding().false_value != b->encoding().false_value)
    return false;
  if (a->kids().size() != b->kids().size()) return false;
  for (std::size_t i = 0; i < a->kids().size(); ++i)
    if (!same_cmd(a->kids()[i], b->kids()[i])) return false;
  return true;
}

std::set<std::string> free_fixvars(const Command& c) { return c->free_vars(); }

std::size_t cmd_size(const Command& c) {
  std::size_t n = 1;
  for (const auto& k : c->kids()) n += cmd_size(k);
  return n;
}

namespace {

std::string rel_tag(const Rel& r) {
  std::ostringstream os;
  os << "{" << r.count() << " pairs #" << std::hex << (r.hash() & 0xffff) << "}";
  return os.str();
}

std::string set_tag(const StateSet& p) {
  std::ostringstream os;
  os << "{" << p.count() << " states #" << std::hex << (p.hash() & 0xffff) << "}";
  return os.str();
}

}  // namespace

std::string render(const Command& c) {
  auto bin = [&](const char* op) {
    return "(" + render(c->kid(0)) + " " + op + " " + render(c->kid(1)) + ")";
  };
  switch (c->kind()) {
    case Kind::Pgm: return "pgm" + rel_tag(c->rel());
    case Kind::Env: return "env" + rel_tag(c->rel());
    case Kind::Test: return "test" + set_tag(c->set());
    case Kind::Abort: return "abort";
    case Kind::Nondet: {
      if (c->kids().empty()) return "nondet()";
      std::string s = "(";
      for (std::size_t i = 0; i < c->kids().size(); ++i) s += (i ? " \\/ " : "") + render(c->kids()[i]);
      return s + ")";
    }
    case Kind::Seq: return bin(";");
    case Kind::Par: return bin("||");
    case Kind::Conj: return bin("/\\");
    case Kind::Fin: return "fin(" + render(c->kid(0)) + ")";
    case Kind::Om: return "om(" + render(c->kid(0)) + ")";
    case Kind::Inf: return "inf(" + render(c->kid(0)) + ")";
    case Kind::Mu: return "mu " + c->name() + ". " + render(c->kid(0));
    case Kind::Nu: return "nu " + c->name() + ". " + render(c->kid(0));
    case Kind::FixVar: return c->name();
    case Kind::Derived: break;
  }
  std::string t = tag_name(c->tag());
  switch (c->tag()) {
    case Tag::Assert: return t + set_tag(c->set());
    case Tag::Guar: case Tag::Rely: case Tag::PSpec: case Tag::Spec: case Tag::Opt:
      return t + rel_tag(c->rel());
    case Tag::Atomic: return t + "(" + set_tag(c->set()) + "," + rel_tag(c->rel()) + ")";
    case Tag::Frame: {
      std::string s = "frame{";
      for (std::size_t i = 0; i < c->vars().size(); ++i)
        s += (i ? "," : "") + c->space()->var(c->vars()[i]).name;
      return s + "}:" + render(c->kid(0));
    }
    case Tag::Assign: return c->name() + " := " + rgc::render(c->expr());
    case Tag::Cond:
      return "(if " + rgc::render(c->expr()) + " then " + render(c->kid(0)) + " else " +
             render(c->kid(1)) + ")";
    case Tag::While: return "(while " + rgc::render(c->expr()) + " do " + render(c->kid(0)) + ")";
    case Tag::Eval: return "[" + rgc::render(c->expr()) + "]_" + std::to_string(c->value());
    default: return t;
  }
}

namespace cmd {

namespace {

Command leaf(Kind k, const Space& sp) {
  CmdNode::Parts p;
  p.kind = k;
  p.space = sp;
  return CmdNode::make(std::move(p));
}

Command unary(Kind k, const Command& c) {
  CmdNode::Parts p;
  p.kind = k;
  p.space = c->space();
  p.kids = {c};
  return CmdNode::make(std::move(p));
}

Command binary(Kind k, const Command& c, const Command& d) {
  CmdNode::Parts p;
  p.kind = k;
  p.space = c->space();
  p.kids = {c, d};
  return CmdNode::make(std::move(p));
}

Command derived(Tag t, const Space& sp) {
  CmdNode::Parts p;
  p.kind = Kind::Derived;
  p.tag = t;
  p.space = sp;
  return CmdNode::make(std::move(p));
}

Command derived_rel(Tag t, const Rel& r) {
  CmdNode::Parts p;
  p.kind = Kind::Derived;
  p.tag = t;
  p.space = r.space();
  p.rel = r;
  return CmdNode::make(std::move(p));
}

}  // namespace

Command pgm(const Rel& r) {
  CmdNode::Parts p;
  p.kind = Kind::Pgm;
  p.space = r.space();
  p.rel = r;
  return CmdNode::make(std::move(p));
}

Command env(const Rel& r) {
  CmdNode::Parts p;
  p.kind = Kind::Env;
  p.space = r.space();
  p.rel = r;
  return CmdNode::make(std::move(p));
}

Command test(const StateSet& s) {
  CmdNode::Parts p;
  p.kind = Kind::Test;
  p.space = s.space();
  p.set = s;
  return CmdNode::make(std::move(p));
}

Command abort(const Space& space) { return leaf(Kind::Abort, space); }

Command nondet(const Space& space, std::vector<Command> cs) {
  CmdNode::Parts p;
  p.kind = Kind::Nondet;
  p.space = space;
  p.kids = std::move(cs);
  return CmdNode::make(std::move(p));
}

Command choice(const Command& c, const Command& d) { return nondet(c->space(), {c, d}); }
Command seq(const Command& c, const Command& d) { return binary(Kind::Seq, c, d); }

Command seq(const std::vector<Command>& cs) {
  if (cs.empty()) throw CommandError("empty sequence");
  Command r = cs.front();
  for (std::size_t i = 1; i < cs.size(); ++i) r = seq(r, cs[i]);
  return r;
}

Command par(const Command& c, const Command& d) { return binary(Kind::Par, c, d); }
Command conj(const Command& c, const Command& d) { return binary(Kind::Conj, c, d); }
Command fin(const Command& c) { return unary(Kind::Fin, c); }
Command om(const Command& c) { return unary(Kind::Om, c); }
Command inf(const Command& c) { return unary(Kind::Inf, c); }

Command mu(const std::string& x, const Command& body) {
  CmdNode::Parts p;
  p.kind = Kind::Mu;
  p.space = body->space();
  p.kids = {body};
  p.name = x;
  return CmdNode::make(std::move(p));
}

Command nu(const std::string& x, const Command& body) {
  CmdNode::Parts p;
  p.kind = Kind::Nu;
  p.space = body->space();
  p.kids = {body};
  p.name = x;
  return CmdNode::make(std::move(p));
}

Command fixvar(const Space& space, const std::string& x) {
  CmdNode::Parts p;
  p.kind = Kind::FixVar;
  p.space = space;
  p.name = x;
  return CmdNode::make(std::move(p));
}

Command assertion(const StateSet& s) {
  CmdNode::Parts p;
  p.kind = Kind::Derived;
  p.tag = Tag::Assert;
  p.space = s.space();
  p.set = s;
  return CmdNode::make(std::move(p));
}

Command magic(const Space& space) { return derived(Tag::Magic, space); }
Command nil(const Space& space) { return derived(Tag::Nil, space); }
Command skip(const Space& space) { return derived(Tag::Skip, space); }
Command chaos(const Space& space) { return derived(Tag::Chaos, space); }
Command term(const Space& space) { return derived(Tag::Term, space); }
Command idle(const Space& space) { return derived(Tag::Idle, space); }
Command guar(const Rel& g) { return derived_rel(Tag::Guar, g); }
Command rely(const Rel& r) { return derived_rel(Tag::Rely, r); }
Command pspec(const Rel& q) { return derived_rel(Tag::PSpec, q); }
Command spec(const Rel& q) { return derived_rel(Tag::Spec, q); }
Command opt(const Rel& q) { return derived_rel(Tag::Opt, q); }

Command frame(const std::vector<std::string>& xs, const Command& c) {
  CmdNode::Parts p;
  p.kind = Kind::Derived;
  p.tag = Tag::Frame;
  p.space = c->space();
  p.kids = {c};
  for (const auto& x : xs) p.vars.push_back(c->space()->var_index(x));
  std::sort(p.vars.begin(), p.vars.end());
  p.vars.erase(std::unique(p.vars.begin(), p.vars.end()), p.vars.end());
  return CmdNode::make(std::move(p));
}

Command atomic(const StateSet& s, const Rel& q) {
  CmdNode::Parts p;
  p.kind = Kind::Derived;
  p.tag = Tag::Atomic;
  p.space = q.space();
  p.set = s;
  p.rel = q;
  require_same(s.space(), q.space());
  return CmdNode::make(std::move(p));
}

Command assign(const Space& space, const std::string& x, const Expr& e) {
  space->var_index(x);
  CmdNode::Parts p;
  p.kind = Kind::Derived;
  p.tag = Tag::Assign;
  p.space = space;
  p.name = x;
  p.expr = e;
  return CmdNode::make(std::move(p));
}

Command cond(const Space& space, const Expr& b, const Command& c, const Command& d, BoolEncoding enc) {
  CmdNode::Parts p;
  p.kind = Kind::Derived;
  p.tag = Tag::Cond;
  p.space = space;
  p.expr = b;
  p.kids = {c, d};
  p.enc = enc;
  return CmdNode::make(std::move(p));
}

Command while_loop(const Space& space, const Expr& b, const Command& c, BoolEncoding enc) {
  CmdNode::Parts p;
  p.kind = Kind::Derived;
  p.tag = Tag::While;
  p.space = space;
  p.expr = b;
  p.kids = {c};
  p.enc = enc;
  return CmdNode::make(std::move(p));
}

Command eval(const Space& space, const Expr& e, Value k) {
  CmdNode::Parts p;
  p.kind = Kind::Derived;
  p.tag = Tag::Eval;
  p.space = space;
  p.expr = e;
  p.value = k;
  return CmdNode::make(std::move(p));
}

Command cand_eval(const Space& space, const Expr& b1, const Expr& b2, Value k, BoolEncoding enc) {
  return cond(space, b1, eval(space, b2, k), eval(space, ExprNode::constant(enc.false_value), k), enc);
}

}  // namespace cmd

namespace {

// Reserved name of the recursion variable of a while loop. Inner loops shadow
// it, which is exactly the scoping the definition needs.
const std::string kWhileVar = "%while";

Command expand_eval(const Space& sp, const Expr& e, Value k) {
  switch (e->kind()) {
    case ExprNode::Kind::Constant:
    case ExprNode::Kind::Variable:
      return cmd::seq({cmd::idle(sp), cmd::test(eq_val(k, e, sp)), cmd::idle(sp)});
    case ExprNode::Kind::Unary: {
      std::vector<Command> alts;
      for (const auto& [k1, v] : e->unary_table())
        if (v == k) alts.push_back(cmd::eval(sp, e->left(), k1));
      return cmd::nondet(sp, std::move(alts));
    }
    case ExprNode::Kind::Binary: {
      std::vector<Command> alts;
      for (const auto& [kk, v] : e->binary_table())
        if (v == k) alts.push_back(cmd::par(cmd::eval(sp, e->left(), kk.first), cmd::eval(sp, e->right(), kk.second)));
      return cmd::nondet(sp, std::move(alts));
    }
  }
  throw CommandError("malformed expression");
}

Command expand_cond(const Space& sp, const Expr& b, const Command& c, const Command& d, BoolEncoding enc) {
  std::vector<Command> alts{cmd::seq(cmd::eval(sp, b, enc.true_value), c),
                            cmd::seq(cmd::eval(sp, b, enc.false_value), d)};
  for (Value k : b->range())
    if (k != enc.true_value && k != enc.false_value)
      alts.push_back(cmd::seq(cmd::eval(sp, b, k), cmd::abort(sp)));
  return cmd::seq(cmd::nondet(sp, std::move(alts)), cmd::idle(sp));
}

}  // namespace

Command expand(const Command& c) {
  if (c->kind() != Kind::Derived) return c;
  const Space& sp = c->space();
  switch (c->tag()) {
    case Tag::Assert:
      return cmd::choice(cmd::test(StateSet::all(sp)), cmd::seq(cmd::test(~c->set()), cmd::abort(sp)));
    case Tag::Magic:
      return cmd::test(StateSet::none(sp));
    case Tag::Nil:
      return cmd::test(StateSet::all(sp));
    case Tag::Skip:
      return cmd::om(cmd::env(Rel::univ(sp)));
    case Tag::Chaos:
      return cmd::om(cmd::choice(cmd::pgm(Rel::univ(sp)), cmd::env(Rel::univ(sp))));
    case Tag::Term:
      return cmd::seq(cmd::fin(cmd::choice(cmd::pgm(Rel::univ(sp)), cmd::env(Rel::univ(sp)))),
                      cmd::om(cmd::env(Rel::univ(sp))));
    case Tag::Idle:
      return cmd::conj(cmd::guar(Rel::id(sp)), cmd::term(sp));
    case Tag::Guar:
      return cmd::om(cmd::choice(cmd::pgm(c->rel()), cmd::env(Rel::univ(sp))));
    case Tag::Rely:
      return cmd::om(cmd::nondet(sp, {cmd::pgm(Rel::univ(sp)), cmd::env(Rel::univ(sp)),
                                      cmd::seq(cmd::env(~c->rel()), cmd::abort(sp))}));
    case Tag::Frame:
      return cmd::conj(c->kid(0), cmd::guar(identity_off(sp, c->vars())));
    case Tag::PSpec: {
      std::vector<Command> alts;
      for (State s0 : enumerate_states(*sp)) {
        StateSet one = StateSet::singleton(sp, s0);
        alts.push_back(cmd::seq(cmd::test(one), cmd::seq(cmd::chaos(sp), cmd::test(image(c->rel(), one)))));
      }
      return cmd::nondet(sp, std::move(alts));
    }
    case Tag::Spec:
      return cmd::conj(cmd::pspec(c->rel()), cmd::term(sp));
    case Tag::Opt:
      return cmd::choice(cmd::pgm(c->rel()), cmd::test(domain(c->rel() & Rel::id(sp))));
    case Tag::Atomic:
      return cmd::seq({cmd::idle(sp), cmd::assertion(c->set()), cmd::opt(c->rel()), cmd::idle(sp)});
    case Tag::Assign: {
      std::size_t x = sp->var_index(c->name());
      Rel frame_x = identity_off(sp, {x});
      std::vector<Command> alts;
      for (Value k : sp->var(x).domain) {
        StateSet xk = eq_val(k, ExprNode::variable(sp, c->name()), sp);
        alts.push_back(cmd::seq({cmd::eval(sp, c->expr(), k), cmd::opt(range_restrict(frame_x, xk)), cmd::idle(sp)}));
      }
      return cmd::nondet(sp, std::move(alts));
    }
    case Tag::Cond:
      return expand_cond(sp, c->expr(), c->kid(0), c->kid(1), c->encoding());
    case Tag::While:
      return cmd::nu(kWhileVar, expand_cond(sp, c->expr(), cmd::seq(c->kid(0), cmd::fixvar(sp, kWhileVar)),
                                            cmd::nil(sp), c->encoding()));
    case Tag::Eval:
      return expand_eval(sp, c->expr(), c->value());
  }
  throw CommandError("unknown derived command");
}

bool is_core(const Command& c) {
  if (c->kind() == Kind::Derived) return false;
  return std::all_of(c->kids().begin(), c->kids().end(), [](const Command& k) { return is_core(k); });
}

Command desugar(const Command& c) {
  if (c->kind() == Kind::Derived) return desugar(expand(c));
  if (c->kids().empty()) return c;
  CmdNode::Parts p;
  p.kind = c->kind();
  p.tag = c->tag();
  p.space = c->space();
  p.name = c->name();
  bool changed = false;
  for (const auto& k : c->kids()) {
    p.kids.push_back(desugar(k));
    changed = changed || p.kids.back() != k;
  }
  return changed ? CmdNode::make(std::move(p)) : c;
}

}  // namespace rgc
