// Finite state spaces, state sets and binary relations over states.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rgc {

using Value = int;
using State = std::uint32_t;

inline constexpr std::size_t kDefaultStateCap = 256;

/// Raised for malformed spaces, unknown variables and exceeded caps.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when operands are built over different state spaces.
struct SpaceMismatch : std::runtime_error {
  SpaceMismatch() : std::runtime_error("operands belong to different state spaces") {}
};

/// Dense bit vector used for state sets and relations.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void fill();
  std::size_t count() const;
  bool none() const;
  bool subset_of(const Bits& o) const;
  std::uint64_t hash() const;

  Bits& operator|=(const Bits& o);
  Bits& operator&=(const Bits& o);
  Bits& subtract(const Bits& o);
  void flip();

  const std::vector<std::uint64_t>& words() const { return w_; }
  std::vector<std::uint64_t>& words() { return w_; }

  friend bool operator==(const Bits& a, const Bits& b) { return a.n_ == b.n_ && a.w_ == b.w_; }

 private:
  void trim();
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Ordered variables with finite integer domains. States are numbered in
/// lexicographic order of their assignments (first variable most significant).
class StateSpace {
 public:
  struct Variable {
    std::string name;
    std::vector<Value> domain;
  };

  static std::shared_ptr<const StateSpace> make(std::vector<Variable> vars,
                                                std::size_t cap = kDefaultStateCap);

  std::size_t size() const { return size_; }
  std::size_t var_count() const { return vars_.size(); }
  const Variable& var(std::size_t v) const { return vars_[v]; }
  const std::vector<Variable>& vars() const { return vars_; }

  /// Index of a variable; throws ConfigError when absent.
  std::size_t var_index(const std::string& name) const;
  bool has_var(const std::string& name) const;

  Value value(State s, std::size_t v) const;
  std::size_t value_pos(State s, std::size_t v) const { return (s / stride_[v]) % vars_[v].domain.size(); }
  /// Replaces the value of variable v; throws ConfigError if outside its domain.
  State with_value(State s, std::size_t v, Value x) const;
  bool in_domain(std::size_t v, Value x) const;
  State state_of(const std::vector<Value>& values) const;

  std::string render(State s) const;
  /// Stable textual digest of the space (variable names and domains).
  std::string digest() const;

  bool same_as(const StateSpace& o) const { return this == &o || digest() == o.digest(); }

 private:
  std::vector<Variable> vars_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 0;
  std::string digest_;
};

using Space = std::shared_ptr<const StateSpace>;

/// All states of the space in their canonical order.
std::vector<State> enumerate_states(const StateSpace& space);

void require_same(const Space& a, const Space& b);

class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(Space sp) : sp_(std::move(sp)), bits_(sp_->size()) {}

  static StateSet none(const Space& sp) { return StateSet(sp); }
  static StateSet all(const Space& sp);
  static StateSet of(const Space& sp, const std::function<bool(State)>& pred);
  static StateSet singleton(const Space& sp, State s);

  const Space& space() const { return sp_; }
  bool contains(State s) const { return bits_.test(s); }
  void insert(State s) { bits_.set(s); }
  void erase(State s) { bits_.reset(s); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool subset_of(const StateSet& o) const;
  std::vector<State> members() const;
  const Bits& bits() const { return bits_; }
  std::uint64_t hash() const { return bits_.hash(); }

  StateSet operator|(const StateSet& o) const;
  StateSet operator&(const StateSet& o) const;
  StateSet operator-(const StateSet& o) const;
  StateSet operator~() const;

  friend bool operator==(const StateSet& a, const StateSet& b) { return a.bits_ == b.bits_; }

 private:
  Space sp_;
  Bits bits_;
};

class Rel {
 public:
  Rel() = default;
  explicit Rel(Space sp) : sp_(std::move(sp)), n_(sp_->size()), bits_(n_ * n_) {}

  static Rel empty(const Space& sp) { return Rel(sp); }
  static Rel univ(const Space& sp);
  static Rel id(const Space& sp);
  static Rel of(const Space& sp, const std::function<bool(State, State)>& pred);
  /// Cartesian product p × q.
  static Rel product(const StateSet& p, const StateSet& q);
  /// Relation whose pair (a,b) is bit a*n+b of bits.
  static Rel from_bits(const Space& sp, Bits bits);

  const Space& space() const { return sp_; }
  std::size_t n() const { return n_; }
  bool contains(State a, State b) const { return bits_.test(std::size_t{a} * n_ + b); }
  void insert(State a, State b) { bits_.set(std::size_t{a} * n_ + b); }
  void erase(State a, State b) { bits_.reset(std::size_t{a} * n_ + b); }
  std::size_t count() const { return bits_.count(); }
  bool empty_rel() const { return bits_.none(); }
  bool subset_of(const Rel& o) const;
  /// Successors of a.
  std::vector<State> row(State a) const;
  StateSet row_set(State a) const;
  std::vector<std::pair<State, State>> pairs() const;
  const Bits& bits() const { return bits_; }
  std::uint64_t hash() const { return bits_.hash(); }

  bool is_reflexive() const;
  bool is_transitive() const;

  Rel operator|(const Rel& o) const;
  Rel operator&(const Rel& o) const;
  Rel operator-(const Rel& o) const;
  Rel operator~() const;

  friend bool operator==(const Rel& a, const Rel& b) { return a.bits_ == b.bits_; }

 private:
  Space sp_;
  std::size_t n_ = 0;
  Bits bits_;
};

/// Relational composition r1 ⨾ r2.
Rel compose(const Rel& r1, const Rel& r2);
/// Reflexive transitive closure, the least fixed point of id ∪ r ⨾ x.
Rel rtc(const Rel& r);
/// {(σ,σ') ∈ r | σ ∈ p ∧ σ' ∈ q}.
Rel restrict(const StateSet& p, const Rel& r, const StateSet& q);
Rel dom_restrict(const StateSet& p, const Rel& r);
Rel range_restrict(const Rel& r, const StateSet& q);
/// Relational image r(|p|).
StateSet image(const Rel& r, const StateSet& p);
/// Domain of r.
StateSet domain(const Rel& r);
/// Pairs of states agreeing on every variable in vars.
Rel identity_on(const Space& space, const std::vector<std::size_t>& vars);
/// Identity on all variables outside vars (the frame relation id(X̄)).
Rel identity_off(const Space& space, const std::vector<std::size_t>& vars);
bool is_stable(const StateSet& p, const Rel& r);
/// p stable under r, p ⊲ (r ⨾ q) ⊆ q and p ⊲ (q ⨾ r) ⊆ q.
bool tolerates(const Rel& q, const Rel& r, const StateSet& p);

/// A strict order on values given by its pairs (a, b) meaning a ≻ b.
struct ValueOrder {
  std::set<std::pair<Value, Value>> gt;

  bool greater(Value a, Value b) const { return gt.count({a, b}) != 0; }
  bool greater_eq(Value a, Value b) const { return a == b || greater(a, b); }

  /// Strict superset order on bitmask-encoded subsets of {0..bits-1}.
  static ValueOrder strict_superset(int bits);
  /// Usual > on the listed values.
  static ValueOrder greater_than(const std::vector<Value>& values);
};

/// True iff the graph of gt has no cycle (on a finite carrier this rules out
/// infinite descent).
bool is_well_founded(const ValueOrder& order);

}  // namespace rgc
