#include "rgcalc/syntax.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace rgc {

namespace {

enum class Tok { Ident, Int, Sym, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Value value = 0;
  std::size_t pos = 0;
};

// Longest symbols first so that "||" wins over "|".
const char* const kSymbols[] = {":=", "..", "\\/", "/\\", "||", "&&", "=>", "!=", "<=", ">=", "(", ")", "{",
                                "}", ",", ";", ":", "'", "=", "<", ">", "+", "-", "*", "&", "|", "~", "!", "."};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    Token t;
    t.pos = i;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_' || ch == '%') {
      std::size_t j = i + 1;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Tok::Ident;
      t.text = src.substr(i, j - i);
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Int;
      t.text = src.substr(i, j - i);
      try {
        t.value = std::stoi(t.text);
      } catch (const std::out_of_range&) {
        throw ParseError("integer literal out of range", i);
      }
      i = j;
    } else {
      bool found = false;
      for (const char* s : kSymbols) {
        std::string sym(s);
        if (src.compare(i, sym.size(), sym) == 0) {
          t.kind = Tok::Sym;
          t.text = sym;
          i += sym.size();
          found = true;
          break;
        }
      }
      if (!found) throw ParseError(std::string("unexpected character '") + ch + "'", i);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.pos = src.size();
  out.push_back(end);
  return out;
}

class Cursor {
 public:
  explicit Cursor(const std::string& src) : toks_(tokenize(src)) {}

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(i_ + ahead, toks_.size() - 1)]; }
  Token next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is_sym(const std::string& s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Sym && peek(ahead).text == s;
  }
  bool is_word(const std::string& s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Ident && peek(ahead).text == s;
  }
  bool accept_sym(const std::string& s) {
    if (!is_sym(s)) return false;
    ++i_;
    return true;
  }
  bool accept_word(const std::string& s) {
    if (!is_word(s)) return false;
    ++i_;
    return true;
  }
  void expect_sym(const std::string& s) {
    if (!accept_sym(s)) fail("expected '" + s + "'");
  }
  void expect_word(const std::string& s) {
    if (!accept_word(s)) fail("expected '" + s + "'");
  }
  std::string expect_ident() {
    if (peek().kind != Tok::Ident) fail("expected identifier");
    return next().text;
  }
  Value expect_int() {
    bool negative = accept_sym("-");
    if (peek().kind != Tok::Int) fail("expected integer");
    Value v = next().value;
    return negative ? -v : v;
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(msg + (t.kind == Tok::End ? " (end of input)" : " near '" + t.text + "'"), t.pos);
  }

 private:
  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

// Untyped predicate/expression tree shared by predicates and expressions.
struct PNode {
  enum class K { Const, Var, Unop, Binop } k = K::Const;
  Value value = 0;
  std::size_t var = 0;
  bool primed = false;
  std::string op;
  std::shared_ptr<PNode> a, b;
};
using PTree = std::shared_ptr<PNode>;

PTree mk_const(Value v) {
  auto n = std::make_shared<PNode>();
  n->value = v;
  return n;
}
PTree mk_un(const std::string& op, PTree a) {
  auto n = std::make_shared<PNode>();
  n->k = PNode::K::Unop;
  n->op = op;
  n->a = std::move(a);
  return n;
}
PTree mk_bin(const std::string& op, PTree a, PTree b) {
  auto n = std::make_shared<PNode>();
  n->k = PNode::K::Binop;
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

const std::set<std::string> kKeywords = {
    "pgm", "env", "test", "abort", "magic", "nil", "skip", "chaos", "term", "idle", "assert", "guar",
    "rely", "pspec", "spec", "opt", "atomic", "fin", "om", "inf", "mu", "nu", "frame", "if", "then",
    "else", "while", "do", "eval", "choice", "true", "false", "in", "mod", "subseteq", "subset", "var",
    "abs", "single", "remove", "neg"};

class ExprParser {
 public:
  ExprParser(Cursor& cur, const StateSpace& space) : cur_(cur), space_(space) {}

  PTree implication() {
    PTree l = disj();
    if (cur_.accept_sym("=>")) return mk_bin("=>", l, implication());
    return l;
  }
  PTree disj() {
    PTree l = conj();
    while (cur_.accept_sym("||")) l = mk_bin("||", l, conj());
    return l;
  }
  PTree conj() {
    PTree l = negation();
    while (cur_.accept_sym("&&")) l = mk_bin("&&", l, negation());
    return l;
  }
  PTree negation() {
    if (cur_.accept_sym("!")) return mk_un("!", negation());
    return comparison();
  }
  PTree comparison() {
    PTree l = additive();
    static const char* const cmps[] = {"=", "!=", "<=", ">=", "<", ">"};
    for (const char* c : cmps)
      if (cur_.accept_sym(c)) return mk_bin(c, l, additive());
    for (const char* w : {"in", "subseteq", "subset"})
      if (cur_.accept_word(w)) return mk_bin(w, l, additive());
    return l;
  }
  PTree additive() {
    PTree l = multiplicative();
    for (;;) {
      if (cur_.accept_sym("+")) l = mk_bin("+", l, multiplicative());
      else if (cur_.accept_sym("-")) l = mk_bin("-", l, multiplicative());
      else if (cur_.accept_sym("|")) l = mk_bin("|", l, multiplicative());
      else return l;
    }
  }
  PTree multiplicative() {
    PTree l = prefix();
    for (;;) {
      if (cur_.accept_sym("*")) l = mk_bin("*", l, prefix());
      else if (cur_.accept_word("mod")) l = mk_bin("mod", l, prefix());
      else if (cur_.accept_sym("&")) l = mk_bin("&", l, prefix());
      else return l;
    }
  }
  PTree prefix() {
    if (cur_.accept_sym("-")) {
      if (cur_.peek().kind == Tok::Int) return mk_const(-cur_.next().value);
      return mk_un("neg", prefix());
    }
    if (cur_.accept_sym("~")) return mk_un("~", prefix());
    return atom();
  }
  PTree atom() {
    if (cur_.peek().kind == Tok::Int) return mk_const(cur_.next().value);
    if (cur_.accept_word("true")) return mk_const(1);
    if (cur_.accept_word("false")) return mk_const(0);
    if (cur_.accept_sym("(")) {
      PTree t = implication();
      cur_.expect_sym(")");
      return t;
    }
    if (cur_.accept_sym("{")) {
      PTree t = additive();
      cur_.expect_sym("}");
      return mk_un("single", t);
    }
    if (cur_.accept_word("abs")) {
      cur_.expect_sym("(");
      PTree t = additive();
      cur_.expect_sym(")");
      return mk_un("abs", t);
    }
    if (cur_.accept_word("neg")) {
      cur_.expect_sym("(");
      PTree t = additive();
      cur_.expect_sym(")");
      return mk_un("neg", t);
    }
    if (cur_.accept_word("single")) {
      cur_.expect_sym("(");
      PTree t = additive();
      cur_.expect_sym(")");
      return mk_un("single", t);
    }
    if (cur_.accept_word("remove")) {
      cur_.expect_sym("(");
      PTree a = additive();
      cur_.expect_sym(",");
      PTree b = additive();
      cur_.expect_sym(")");
      return mk_bin("remove", a, b);
    }
    if (cur_.peek().kind == Tok::Ident && !kKeywords.count(cur_.peek().text)) {
      std::string name = cur_.peek().text;
      if (!space_.has_var(name)) cur_.fail("unknown variable '" + name + "'");
      cur_.next();
      auto n = std::make_shared<PNode>();
      n->k = PNode::K::Var;
      n->var = space_.var_index(name);
      n->primed = cur_.accept_sym("'");
      return n;
    }
    cur_.fail("expected expression");
  }

 private:
  Cursor& cur_;
  const StateSpace& space_;
};

bool truthy(Value v) { return v != 0; }

Value eval_p(const PTree& t, const StateSpace& sp, State s, State s2) {
  switch (t->k) {
    case PNode::K::Const:
      return t->value;
    case PNode::K::Var:
      return sp.value(t->primed ? s2 : s, t->var);
    case PNode::K::Unop: {
      Value a = eval_p(t->a, sp, s, s2);
      if (t->op == "!") return !truthy(a);
      if (t->op == "neg") return -a;
      if (t->op == "~") return ~a;
      if (t->op == "abs") return a < 0 ? -a : a;
      if (t->op == "single") return (a >= 0 && a <= 30) ? (Value{1} << a) : 0;
      break;
    }
    case PNode::K::Binop: {
      const std::string& op = t->op;
      if (op == "&&") return truthy(eval_p(t->a, sp, s, s2)) && truthy(eval_p(t->b, sp, s, s2));
      if (op == "||") return truthy(eval_p(t->a, sp, s, s2)) || truthy(eval_p(t->b, sp, s, s2));
      if (op == "=>") return !truthy(eval_p(t->a, sp, s, s2)) || truthy(eval_p(t->b, sp, s, s2));
      Value a = eval_p(t->a, sp, s, s2), b = eval_p(t->b, sp, s, s2);
      if (op == "=") return a == b;
      if (op == "!=") return a != b;
      if (op == "<") return a < b;
      if (op == "<=") return a <= b;
      if (op == ">") return a > b;
      if (op == ">=") return a >= b;
      if (op == "in") return b >= 0 && a >= 0 && a <= 30 && ((b >> a) & 1);
      if (op == "subseteq") return (a & ~b) == 0;
      if (op == "subset") return (a & ~b) == 0 && a != b;
      if (op == "+") return a + b;
      if (op == "-") return a - b;
      if (op == "*") return a * b;
      if (op == "mod") return b == 0 ? 0 : ((a % b) + b) % b;
      if (op == "&") return a & b;
      if (op == "|") return a | b;
      if (op == "remove") return (b >= 0 && b <= 30) ? (a & ~(Value{1} << b)) : a;
      break;
    }
  }
  throw ParseError("unsupported operator " + t->op, 0);
}

bool mentions_primed(const PTree& t) {
  if (!t) return false;
  if (t->k == PNode::K::Var) return t->primed;
  return mentions_primed(t->a) || mentions_primed(t->b);
}

Expr to_expr(const PTree& t, const Space& sp, BoolEncoding enc) {
  switch (t->k) {
    case PNode::K::Const:
      return ExprNode::constant(t->value);
    case PNode::K::Var:
      if (t->primed) throw ParseError("primed variable in expression", 0);
      return ExprNode::variable(sp, sp->var(t->var).name);
    case PNode::K::Unop: {
      Expr a = to_expr(t->a, sp, enc);
      if (t->op == "!") return ops::logical_not(a, enc);
      if (t->op == "neg") return ops::neg(a);
      if (t->op == "~") return ops::bit_not(a);
      if (t->op == "abs") return ops::abs(a);
      if (t->op == "single") return ops::singleton(a);
      break;
    }
    case PNode::K::Binop: {
      const std::string& op = t->op;
      if (op == "&&" || op == "||" || op == "=>")
        throw ParseError("short-circuit operator '" + op + "' is not an expression; use a conditional", 0);
      Expr a = to_expr(t->a, sp, enc), b = to_expr(t->b, sp, enc);
      if (op == "=") return ops::eq(a, b, enc);
      if (op == "!=") return ops::ne(a, b, enc);
      if (op == "<") return ops::lt(a, b, enc);
      if (op == "<=") return ops::le(a, b, enc);
      if (op == ">") return ops::lt(b, a, enc);
      if (op == ">=") return ops::le(b, a, enc);
      if (op == "in") return ops::member(a, b, enc);
      if (op == "subseteq") return ops::eq(ops::bit_and(a, ops::bit_not(b)), ExprNode::constant(0), enc);
      if (op == "subset")
        throw ParseError("'subset' is only available in predicates", 0);
      if (op == "+") return ops::add(a, b);
      if (op == "-") return ops::sub(a, b);
      if (op == "*") return ops::mul(a, b);
      if (op == "mod") return ops::mod(a, b);
      if (op == "&") return ops::bit_and(a, b);
      if (op == "|") return ops::bit_or(a, b);
      if (op == "remove") return ops::remove_elem(a, b);
      break;
    }
  }
  throw ParseError("unsupported operator " + t->op, 0);
}

StateSet compile_set(const PTree& t, const Space& sp) {
  if (mentions_primed(t)) throw ParseError("primed variable in a state predicate", 0);
  return StateSet::of(sp, [&](State s) { return truthy(eval_p(t, *sp, s, s)); });
}

Rel compile_rel(const PTree& t, const Space& sp) {
  return Rel::of(sp, [&](State a, State b) { return truthy(eval_p(t, *sp, a, b)); });
}

class CommandParser {
 public:
  CommandParser(Cursor& cur, const Space& sp) : cur_(cur), sp_(sp), ep_(cur, *sp) {}

  Command choice() {
    std::vector<Command> alts{conj()};
    while (cur_.accept_sym("\\/")) alts.push_back(conj());
    return alts.size() == 1 ? alts[0] : cmd::nondet(sp_, std::move(alts));
  }
  Command conj() {
    Command l = par();
    while (cur_.accept_sym("/\\")) l = cmd::conj(l, par());
    return l;
  }
  Command par() {
    Command l = seq();
    while (cur_.accept_sym("||")) l = cmd::par(l, seq());
    return l;
  }
  Command seq() {
    Command l = unary();
    while (cur_.accept_sym(";")) l = cmd::seq(l, unary());
    return l;
  }

  Command unary() {
    if (cur_.accept_sym("(")) {
      Command c = choice();
      cur_.expect_sym(")");
      return c;
    }
    if (cur_.peek().kind != Tok::Ident) cur_.fail("expected command");
    std::string w = cur_.peek().text;
    if (!kKeywords.count(w)) {
      cur_.next();
      if (cur_.accept_sym(":=")) {
        if (!sp_->has_var(w)) cur_.fail("unknown variable '" + w + "'");
        return cmd::assign(sp_, w, to_expr(ep_.negation(), sp_, {}));
      }
      return cmd::fixvar(sp_, w);
    }
    cur_.next();
    if (w == "abort") return cmd::abort(sp_);
    if (w == "magic") return cmd::magic(sp_);
    if (w == "nil") return cmd::nil(sp_);
    if (w == "skip") return cmd::skip(sp_);
    if (w == "chaos") return cmd::chaos(sp_);
    if (w == "term") return cmd::term(sp_);
    if (w == "idle") return cmd::idle(sp_);
    if (w == "pgm") return cmd::pgm(rel_arg());
    if (w == "env") return cmd::env(rel_arg());
    if (w == "guar") return cmd::guar(rel_arg());
    if (w == "rely") return cmd::rely(rel_arg());
    if (w == "pspec") return cmd::pspec(rel_arg());
    if (w == "spec") return cmd::spec(rel_arg());
    if (w == "opt") return cmd::opt(rel_arg());
    if (w == "test") return cmd::test(set_arg());
    if (w == "assert") return cmd::assertion(set_arg());
    if (w == "atomic") {
      cur_.expect_sym("(");
      PTree first = ep_.implication();
      if (cur_.accept_sym(",")) {
        PTree second = ep_.implication();
        cur_.expect_sym(")");
        return cmd::atomic(compile_set(first, sp_), compile_rel(second, sp_));
      }
      cur_.expect_sym(")");
      return cmd::atomic(StateSet::all(sp_), compile_rel(first, sp_));
    }
    if (w == "fin" || w == "om" || w == "inf") {
      cur_.expect_sym("(");
      Command c = choice();
      cur_.expect_sym(")");
      return w == "fin" ? cmd::fin(c) : w == "om" ? cmd::om(c) : cmd::inf(c);
    }
    if (w == "choice") {
      cur_.expect_sym("(");
      std::vector<Command> alts;
      if (!cur_.is_sym(")")) {
        alts.push_back(choice());
        while (cur_.accept_sym(",")) alts.push_back(choice());
      }
      cur_.expect_sym(")");
      return cmd::nondet(sp_, std::move(alts));
    }
    if (w == "mu" || w == "nu") {
      std::string x = cur_.expect_ident();
      cur_.expect_sym(".");
      Command body = unary();
      return w == "mu" ? cmd::mu(x, body) : cmd::nu(x, body);
    }
    if (w == "frame") {
      cur_.expect_sym("{");
      std::vector<std::string> xs;
      if (!cur_.is_sym("}")) {
        xs.push_back(var_name());
        while (cur_.accept_sym(",")) xs.push_back(var_name());
      }
      cur_.expect_sym("}");
      cur_.accept_sym(":");
      return cmd::frame(xs, unary());
    }
    if (w == "if") {
      Expr b = to_expr(ep_.implication(), sp_, {});
      cur_.expect_word("then");
      Command c = unary();
      cur_.expect_word("else");
      Command d = unary();
      return cmd::cond(sp_, b, c, d);
    }
    if (w == "while") {
      Expr b = to_expr(ep_.implication(), sp_, {});
      cur_.expect_word("do");
      return cmd::while_loop(sp_, b, unary());
    }
    if (w == "eval") {
      cur_.expect_sym("(");
      Expr e = to_expr(ep_.implication(), sp_, {});
      cur_.expect_sym(",");
      Value k = cur_.expect_int();
      cur_.expect_sym(")");
      return cmd::eval(sp_, e, k);
    }
    cur_.fail("unexpected keyword '" + w + "'");
  }

 private:
  std::string var_name() {
    std::string x = cur_.expect_ident();
    if (!sp_->has_var(x)) cur_.fail("unknown variable '" + x + "'");
    return x;
  }
  Rel rel_arg() {
    cur_.expect_sym("(");
    PTree t = ep_.implication();
    cur_.expect_sym(")");
    return compile_rel(t, sp_);
  }
  StateSet set_arg() {
    cur_.expect_sym("(");
    PTree t = ep_.implication();
    cur_.expect_sym(")");
    return compile_set(t, sp_);
  }

  Cursor& cur_;
  Space sp_;
  ExprParser ep_;
};

std::string state_conj(const StateSpace& sp, State s, bool primed) {
  std::string out;
  for (std::size_t v = 0; v < sp.var_count(); ++v) {
    if (!out.empty()) out += " && ";
    out += sp.var(v).name + (primed ? "'" : "") + "=" + std::to_string(sp.value(s, v));
  }
  return out;
}

std::string join_dnf(const std::vector<std::string>& terms, bool wrap) {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " || ";
    out += wrap ? "(" + t + ")" : t;
  }
  return out;
}

}  // namespace

Space parse_space(const std::string& text, std::size_t cap) {
  Cursor cur(text);
  std::vector<StateSpace::Variable> vars;
  while (!cur.at_end()) {
    cur.expect_word("var");
    StateSpace::Variable v;
    v.name = cur.expect_ident();
    if (kKeywords.count(v.name)) cur.fail("reserved word used as variable name");
    cur.expect_sym(":");
    if (cur.accept_sym("{")) {
      if (!cur.is_sym("}")) {
        v.domain.push_back(cur.expect_int());
        while (cur.accept_sym(",")) v.domain.push_back(cur.expect_int());
      }
      cur.expect_sym("}");
    } else {
      Value lo = cur.expect_int();
      cur.expect_sym("..");
      Value hi = cur.expect_int();
      if (hi < lo) cur.fail("empty range");
      if (static_cast<long long>(hi) - lo >= static_cast<long long>(cap))
        throw ConfigError("domain of " + v.name + " exceeds the state cap");
      for (Value k = lo; k <= hi; ++k) v.domain.push_back(k);
    }
    vars.push_back(std::move(v));
  }
  if (vars.empty()) throw ConfigError("space declares no variables");
  return StateSpace::make(std::move(vars), cap);
}

std::string print_space(const StateSpace& space) {
  std::string out;
  for (const auto& v : space.vars()) {
    out += "var " + v.name + " : {";
    for (std::size_t i = 0; i < v.domain.size(); ++i) out += (i ? ", " : "") + std::to_string(v.domain[i]);
    out += "}\n";
  }
  return out;
}

StateSet parse_set(const std::string& src, const Space& space) {
  Cursor cur(src);
  ExprParser ep(cur, *space);
  PTree t = ep.implication();
  cur.expect_end();
  return compile_set(t, space);
}

Rel parse_rel(const std::string& src, const Space& space) {
  Cursor cur(src);
  ExprParser ep(cur, *space);
  PTree t = ep.implication();
  cur.expect_end();
  return compile_rel(t, space);
}

Expr parse_expr(const std::string& src, const Space& space, BoolEncoding enc) {
  Cursor cur(src);
  ExprParser ep(cur, *space);
  PTree t = ep.implication();
  cur.expect_end();
  return to_expr(t, space, enc);
}

Command parse_command(const std::string& src, const Space& space) {
  Cursor cur(src);
  CommandParser cp(cur, space);
  Command c = cp.choice();
  cur.expect_end();
  return c;
}

std::string print_set(const StateSet& p) {
  const StateSpace& sp = *p.space();
  if (p.count() == sp.size()) return "true";
  if (p.empty()) return "false";
  bool negate = p.count() * 2 > sp.size();
  std::vector<std::string> terms;
  for (State s : (negate ? ~p : p).members()) terms.push_back(state_conj(sp, s, false));
  std::string body = join_dnf(terms, sp.var_count() > 1);
  return negate ? "!(" + body + ")" : body;
}

std::string print_rel(const Rel& r) {
  const Space& sp = r.space();
  std::size_t n = sp->size();
  if (r.count() == n * n) return "true";
  if (r.empty_rel()) return "false";
  if (r == Rel::id(sp)) {
    std::string out;
    for (std::size_t v = 0; v < sp->var_count(); ++v)
      out += (v ? " && " : "") + sp->var(v).name + "'=" + sp->var(v).name;
    return out;
  }
  bool negate = r.count() * 2 > n * n;
  std::vector<std::string> terms;
  for (auto [a, b] : (negate ? ~r : r).pairs())
    terms.push_back(state_conj(*sp, a, false) + " && " + state_conj(*sp, b, true));
  std::string body = join_dnf(terms, true);
  return negate ? "!(" + body + ")" : body;
}

std::string print_expr(const Expr& e) {
  switch (e->kind()) {
    case ExprNode::Kind::Constant:
      return e->constant() < 0 ? "(" + std::to_string(e->constant()) + ")" : std::to_string(e->constant());
    case ExprNode::Kind::Variable:
      return e->name();
    case ExprNode::Kind::Unary: {
      const std::string& op = e->name();
      std::string a = print_expr(e->left());
      if (op == "~" || op == "!") return "(" + op + a + ")";
      if (op == "single") return "{" + a + "}";
      return op + "(" + a + ")";
    }
    case ExprNode::Kind::Binary: {
      const std::string& op = e->name();
      std::string a = print_expr(e->left()), b = print_expr(e->right());
      if (op == "remove") return "remove(" + a + ", " + b + ")";
      return "(" + a + " " + op + " " + b + ")";
    }
  }
  return "?";
}

namespace {

// Binding strength: choice < conj < par < seq < atoms.
int prec(const Command& c) {
  switch (c->kind()) {
    case Kind::Nondet:
      return c->kids().size() >= 2 ? 0 : 4;
    case Kind::Conj:
      return 1;
    case Kind::Par:
      return 2;
    case Kind::Seq:
      return 3;
    default:
      return 4;
  }
}

std::string frame_vars(const Command& c) {
  std::string out;
  for (std::size_t i = 0; i < c->vars().size(); ++i)
    out += (i ? ", " : "") + c->space()->var(c->vars()[i]).name;
  return out;
}

std::string paren(const std::string& s) { return "(" + s + ")"; }

}  // namespace

std::string print_command(const Command& c) {
  auto sub = [](const Command& k, bool wrap) { return wrap ? paren(print_command(k)) : print_command(k); };
  switch (c->kind()) {
    case Kind::Pgm:
      return "pgm(" + print_rel(c->rel()) + ")";
    case Kind::Env:
      return "env(" + print_rel(c->rel()) + ")";
    case Kind::Test:
      return "test(" + print_set(c->set()) + ")";
    case Kind::Abort:
      return "abort";
    case Kind::Nondet: {
      if (c->kids().size() < 2) {
        std::string out = "choice(";
        for (const auto& k : c->kids()) out += print_command(k);
        return out + ")";
      }
      std::string out;
      for (std::size_t i = 0; i < c->kids().size(); ++i)
        out += (i ? " \\/ " : "") + sub(c->kid(i), prec(c->kid(i)) == 0);
      return out;
    }
    case Kind::Seq:
    case Kind::Par:
    case Kind::Conj: {
      int p = prec(c);
      const char* op = c->kind() == Kind::Seq ? " ; " : c->kind() == Kind::Par ? " || " : " /\\ ";
      return sub(c->kid(0), prec(c->kid(0)) < p) + op + sub(c->kid(1), prec(c->kid(1)) <= p);
    }
    case Kind::Fin:
      return "fin(" + print_command(c->kid(0)) + ")";
    case Kind::Om:
      return "om(" + print_command(c->kid(0)) + ")";
    case Kind::Inf:
      return "inf(" + print_command(c->kid(0)) + ")";
    case Kind::Mu:
      return "mu " + c->name() + " . " + paren(print_command(c->kid(0)));
    case Kind::Nu:
      return "nu " + c->name() + " . " + paren(print_command(c->kid(0)));
    case Kind::FixVar:
      return c->name();
    case Kind::Derived:
      break;
  }
  switch (c->tag()) {
    case Tag::Assert:
      return "assert(" + print_set(c->set()) + ")";
    case Tag::Magic:
      return "magic";
    case Tag::Nil:
      return "nil";
    case Tag::Skip:
      return "skip";
    case Tag::Chaos:
      return "chaos";
    case Tag::Term:
      return "term";
    case Tag::Idle:
      return "idle";
    case Tag::Guar:
      return "guar(" + print_rel(c->rel()) + ")";
    case Tag::Rely:
      return "rely(" + print_rel(c->rel()) + ")";
    case Tag::PSpec:
      return "pspec(" + print_rel(c->rel()) + ")";
    case Tag::Spec:
      return "spec(" + print_rel(c->rel()) + ")";
    case Tag::Opt:
      return "opt(" + print_rel(c->rel()) + ")";
    case Tag::Atomic:
      return "atomic(" + print_set(c->set()) + ", " + print_rel(c->rel()) + ")";
    case Tag::Frame:
      return "frame {" + frame_vars(c) + "}: " + paren(print_command(c->kid(0)));
    case Tag::Assign:
      return c->name() + " := " + paren(print_expr(c->expr()));
    case Tag::Cond:
      return "if " + print_expr(c->expr()) + " then " + paren(print_command(c->kid(0))) + " else " +
             paren(print_command(c->kid(1)));
    case Tag::While:
      return "while " + print_expr(c->expr()) + " do " + paren(print_command(c->kid(0)));
    case Tag::Eval:
      return "eval(" + print_expr(c->expr()) + ", " + std::to_string(c->value()) + ")";
  }
  return "?";
}

}  // namespace rgc
