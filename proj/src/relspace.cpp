#include "rgcalc/relspace.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace rgc {

// ---------------------------------------------------------------- Bits

void Bits::trim() {
  if (n_ % 64 != 0 && !w_.empty()) w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
}

void Bits::fill() {
  std::fill(w_.begin(), w_.end(), ~std::uint64_t{0});
  trim();
}

std::size_t Bits::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bits::none() const {
  return std::all_of(w_.begin(), w_.end(), [](std::uint64_t w) { return w == 0; });
}

bool Bits::subset_of(const Bits& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

std::uint64_t Bits::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ n_;
  for (auto w : w_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return h;
}

Bits& Bits::operator|=(const Bits& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

Bits& Bits::operator&=(const Bits& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

Bits& Bits::subtract(const Bits& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

void Bits::flip() {
  for (auto& w : w_) w = ~w;
  trim();
}

// ---------------------------------------------------------- StateSpace

std::shared_ptr<const StateSpace> StateSpace::make(std::vector<Variable> vars, std::size_t cap) {
  auto sp = std::shared_ptr<StateSpace>(new StateSpace());
  std::set<std::string> names;
  std::size_t total = 1;
  for (auto& v : vars) {
    if (v.name.empty()) throw ConfigError("variable with empty name");
    if (!names.insert(v.name).second) throw ConfigError("duplicate variable '" + v.name + "'");
    if (v.domain.empty()) throw ConfigError("variable '" + v.name + "' has an empty domain");
    std::sort(v.domain.begin(), v.domain.end());
    v.domain.erase(std::unique(v.domain.begin(), v.domain.end()), v.domain.end());
    total *= v.domain.size();
    if (total > cap)
      throw ConfigError("state space exceeds the cap of " + std::to_string(cap) + " states");
  }
  sp->vars_ = std::move(vars);
  sp->size_ = total;
  sp->stride_.assign(sp->vars_.size(), 1);
  for (std::size_t i = sp->vars_.size(); i-- > 1;)
    sp->stride_[i - 1] = sp->stride_[i] * sp->vars_[i].domain.size();
  std::ostringstream d;
  for (const auto& v : sp->vars_) {
    d << v.name << ":{";
    for (std::size_t i = 0; i < v.domain.size(); ++i) d << (i ? "," : "") << v.domain[i];
    d << "};";
  }
  sp->digest_ = d.str();
  return sp;
}

std::size_t StateSpace::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  throw ConfigError("unknown variable '" + name + "'");
}

bool StateSpace::has_var(const std::string& name) const {
  return std::any_of(vars_.begin(), vars_.end(), [&](const Variable& v) { return v.name == name; });
}

Value StateSpace::value(State s, std::size_t v) const { return vars_[v].domain[value_pos(s, v)]; }

bool StateSpace::in_domain(std::size_t v, Value x) const {
  return std::binary_search(vars_[v].domain.begin(), vars_[v].domain.end(), x);
}

State StateSpace::with_value(State s, std::size_t v, Value x) const {
  const auto& dom = vars_[v].domain;
  auto it = std::lower_bound(dom.begin(), dom.end(), x);
  if (it == dom.end() || *it != x)
    throw ConfigError("value " + std::to_string(x) + " outside the domain of '" + vars_[v].name + "'");
  std::size_t pos = static_cast<std::size_t>(it - dom.begin());
  std::size_t cur = value_pos(s, v);
  return static_cast<State>(s - cur * stride_[v] + pos * stride_[v]);
}

State StateSpace::state_of(const std::vector<Value>& values) const {
  if (values.size() != vars_.size()) throw ConfigError("assignment does not cover every variable");
  State s = 0;
  for (std::size_t v = 0; v < vars_.size(); ++v) s = with_value(s, v, values[v]);
  return s;
}

std::string StateSpace::render(State s) const {
  std::ostringstream o;
  o << '(';
  for (std::size_t v = 0; v < vars_.size(); ++v) o << (v ? "," : "") << vars_[v].name << '=' << value(s, v);
  o << ')';
  return o.str();
}

std::string StateSpace::digest() const { return digest_; }

std::vector<State> enumerate_states(const StateSpace& space) {
  std::vector<State> out(space.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<State>(i);
  return out;
}

void require_same(const Space& a, const Space& b) {
  if (!a || !b || !a->same_as(*b)) throw SpaceMismatch();
}

// ------------------------------------------------------------ StateSet

StateSet StateSet::all(const Space& sp) {
  StateSet s(sp);
  s.bits_.fill();
  return s;
}

StateSet StateSet::of(const Space& sp, const std::function<bool(State)>& pred) {
  StateSet s(sp);
  for (State x = 0; x < sp->size(); ++x)
    if (pred(x)) s.insert(x);
  return s;
}

StateSet StateSet::singleton(const Space& sp, State x) {
  StateSet s(sp);
  s.insert(x);
  return s;
}

bool StateSet::subset_of(const StateSet& o) const {
  require_same(sp_, o.sp_);
  return bits_.subset_of(o.bits_);
}

std::vector<State> StateSet::members() const {
  std::vector<State> out;
  for (State x = 0; x < bits_.size(); ++x)
    if (bits_.test(x)) out.push_back(x);
  return out;
}

StateSet StateSet::operator|(const StateSet& o) const {
  require_same(sp_, o.sp_);
  StateSet r = *this;
  r.bits_ |= o.bits_;
  return r;
}

StateSet StateSet::operator&(const StateSet& o) const {
  require_same(sp_, o.sp_);
  StateSet r = *this;
  r.bits_ &= o.bits_;
  return r;
}

StateSet StateSet::operator-(const StateSet& o) const {
  require_same(sp_, o.sp_);
  StateSet r = *this;
  r.bits_.subtract(o.bits_);
  return r;
}

StateSet StateSet::operator~() const {
  StateSet r = *this;
  r.bits_.flip();
  return r;
}

// ----------------------------------------------------------------- Rel

Rel Rel::univ(const Space& sp) {
  Rel r(sp);
  r.bits_.fill();
  return r;
}

Rel Rel::id(const Space& sp) {
  Rel r(sp);
  for (State s = 0; s < r.n_; ++s) r.insert(s, s);
  return r;
}

Rel Rel::of(const Space& sp, const std::function<bool(State, State)>& pred) {
  Rel r(sp);
  for (State a = 0; a < r.n_; ++a)
    for (State b = 0; b < r.n_; ++b)
      if (pred(a, b)) r.insert(a, b);
  return r;
}

Rel Rel::product(const StateSet& p, const StateSet& q) {
  require_same(p.space(), q.space());
  Rel r(p.space());
  for (State a : p.members())
    for (State b : q.members()) r.insert(a, b);
  return r;
}

Rel Rel::from_bits(const Space& sp, Bits bits) {
  Rel r(sp);
  if (bits.size() != r.n_ * r.n_) throw ConfigError("relation bit vector has the wrong size");
  r.bits_ = std::move(bits);
  return r;
}

bool Rel::subset_of(const Rel& o) const {
  require_same(sp_, o.sp_);
  return bits_.subset_of(o.bits_);
}

std::vector<State> Rel::row(State a) const {
  std::vector<State> out;
  for (State b = 0; b < n_; ++b)
    if (contains(a, b)) out.push_back(b);
  return out;
}

StateSet Rel::row_set(State a) const {
  StateSet s(sp_);
  for (State b = 0; b < n_; ++b)
    if (contains(a, b)) s.insert(b);
  return s;
}

std::vector<std::pair<State, State>> Rel::pairs() const {
  std::vector<std::pair<State, State>> out;
  for (State a = 0; a < n_; ++a)
    for (State b = 0; b < n_; ++b)
      if (contains(a, b)) out.emplace_back(a, b);
  return out;
}

bool Rel::is_reflexive() const {
  for (State s = 0; s < n_; ++s)
    if (!contains(s, s)) return false;
  return true;
}

bool Rel::is_transitive() const { return compose(*this, *this).subset_of(*this); }

Rel Rel::operator|(const Rel& o) const {
  require_same(sp_, o.sp_);
  Rel r = *this;
  r.bits_ |= o.bits_;
  return r;
}

Rel Rel::operator&(const Rel& o) const {
  require_same(sp_, o.sp_);
  Rel r = *this;
  r.bits_ &= o.bits_;
  return r;
}

Rel Rel::operator-(const Rel& o) const {
  require_same(sp_, o.sp_);
  Rel r = *this;
  r.bits_.subtract(o.bits_);
  return r;
}

Rel Rel::operator~() const {
  Rel r = *this;
  r.bits_.flip();
  return r;
}

// ------------------------------------------------------------- toolkit

namespace {

// dst row a |= src row b, word-level when rows are word aligned.
void or_row(Bits& dst, std::size_t a, const Bits& src, std::size_t b, std::size_t n) {
  if (n % 64 == 0) {
    const std::size_t wpr = n / 64;
    auto& dw = dst.words();
    const auto& sw = src.words();
    for (std::size_t i = 0; i < wpr; ++i) dw[a * wpr + i] |= sw[b * wpr + i];
    return;
  }
  for (std::size_t j = 0; j < n; ++j)
    if (src.test(b * n + j)) dst.set(a * n + j);
}

}  // namespace

Rel compose(const Rel& r1, const Rel& r2) {
  require_same(r1.space(), r2.space());
  const std::size_t n = r1.n();
  Bits bits(n * n);
  for (State a = 0; a < n; ++a)
    for (State m = 0; m < n; ++m)
      if (r1.contains(a, m)) or_row(bits, a, r2.bits(), m, n);
  return Rel::from_bits(r1.space(), std::move(bits));
}

Rel rtc(const Rel& r) {
  // Warshall's algorithm on id ∪ r.
  const std::size_t n = r.n();
  Bits x = (r | Rel::id(r.space())).bits();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (x.test(i * n + k)) or_row(x, i, x, k, n);
  return Rel::from_bits(r.space(), std::move(x));
}

Rel restrict(const StateSet& p, const Rel& r, const StateSet& q) {
  require_same(p.space(), r.space());
  require_same(q.space(), r.space());
  Rel out(r.space());
  for (auto [a, b] : r.pairs())
    if (p.contains(a) && q.contains(b)) out.insert(a, b);
  return out;
}

Rel dom_restrict(const StateSet& p, const Rel& r) { return restrict(p, r, StateSet::all(r.space())); }

Rel range_restrict(const Rel& r, const StateSet& q) { return restrict(StateSet::all(r.space()), r, q); }

StateSet image(const Rel& r, const StateSet& p) {
  require_same(r.space(), p.space());
  StateSet out(r.space());
  for (State a : p.members())
    for (State b : r.row(a)) out.insert(b);
  return out;
}

StateSet domain(const Rel& r) {
  StateSet out(r.space());
  for (State a = 0; a < r.n(); ++a)
    if (!r.row(a).empty()) out.insert(a);
  return out;
}

Rel identity_on(const Space& space, const std::vector<std::size_t>& vars) {
  for (auto v : vars)
    if (v >= space->var_count()) throw ConfigError("unknown variable index in identity_on");
  return Rel::of(space, [&](State a, State b) {
    for (auto v : vars)
      if (space->value_pos(a, v) != space->value_pos(b, v)) return false;
    return true;
  });
}

Rel identity_off(const Space& space, const std::vector<std::size_t>& vars) {
  std::vector<std::size_t> rest;
  for (std::size_t v = 0; v < space->var_count(); ++v)
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) rest.push_back(v);
  return identity_on(space, rest);
}

bool is_stable(const StateSet& p, const Rel& r) { return image(r, p).subset_of(p); }

bool tolerates(const Rel& q, const Rel& r, const StateSet& p) {
  return is_stable(p, r) && dom_restrict(p, compose(r, q)).subset_of(q) &&
         dom_restrict(p, compose(q, r)).subset_of(q);
}

// ----------------------------------------------------------- orderings

ValueOrder ValueOrder::strict_superset(int bits) {
  ValueOrder o;
  const Value top = (1 << bits);
  for (Value a = 0; a < top; ++a)
    for (Value b = 0; b < top; ++b)
      if (a != b && (a & b) == b) o.gt.insert({a, b});
  return o;
}

ValueOrder ValueOrder::greater_than(const std::vector<Value>& values) {
  ValueOrder o;
  for (Value a : values)
    for (Value b : values)
      if (a > b) o.gt.insert({a, b});
  return o;
}

bool is_well_founded(const ValueOrder& order) {
  std::map<Value, std::vector<Value>> succ;
  for (auto [a, b] : order.gt) succ[a].push_back(b);
  // 0 unvisited, 1 on stack, 2 done
  std::map<Value, int> mark;
  std::function<bool(Value)> acyclic = [&](Value v) {
    int& m = mark[v];
    if (m == 1) return false;
    if (m == 2) return true;
    m = 1;
    auto it = succ.find(v);
    if (it != succ.end())
      for (Value w : it->second)
        if (!acyclic(w)) return false;
    mark[v] = 2;
    return true;
  };
  for (const auto& [v, _] : succ)
    if (!acyclic(v)) return false;
  return true;
}

}  // namespace rgc
