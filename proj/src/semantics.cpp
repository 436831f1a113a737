#include "rgcalc/semantics.hpp"

#include <algorithm>
#include <unordered_map>

namespace rgc {

namespace {

constexpr NodeId kLeaf = 0;
constexpr NodeId kAbort = 1;
constexpr NodeId kTermLeaf = 2;
constexpr NodeId kNone = 0xffffffffu;

constexpr std::uint8_t kTermFlag = 1;
constexpr std::uint8_t kAbortFlag = 2;

// Engines above this footprint are replaced at the next public entry point.
constexpr std::size_t kEngineBudgetBytes = std::size_t{1} << 30;
constexpr std::size_t kMaxFixpointIterations = 100000;
constexpr std::size_t kMaxBound = 64;

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdull;
}

std::uint64_t hash_str(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) h = (h ^ ch) * 0x100000001b3ull;
  return h;
}

struct Edge {
  std::uint32_t key;  // label * |Σ| + post
  NodeId child;
  friend bool operator==(const Edge&, const Edge&) = default;
};

std::uint64_t pair_key(NodeId a, NodeId b) { return (std::uint64_t{a} << 32) | b; }

}  // namespace

class Engine {
 public:
  using Roots = std::vector<NodeId>;
  using Env = std::map<std::string, Roots>;

  Engine(Space sp, std::size_t k) : space(std::move(sp)), K(k), S(space->size()) {
    if (K < 1 || K > kMaxBound) throw ConfigError("bound must lie in 1.." + std::to_string(kMaxBound));
    if (S >= (std::size_t{1} << 23)) throw ConfigError("state space too large for the trace engine");
    table_.assign(1024, kNone);
    std::vector<Edge> none;
    mk_raw(0, none);           // kLeaf
    mk_raw(kAbortFlag, none);  // kAbort
    mk_raw(kTermFlag, none);   // kTermLeaf
  }

  const Space space;
  const std::size_t K;
  const std::size_t S;

  struct Node {
    std::uint64_t hash;
    std::uint32_t begin;
    std::uint32_t len;
    std::uint8_t flags;
    std::uint8_t height;  // node is canonical at depth d iff d + height <= K
  };

  std::vector<Node> nodes;
  std::vector<Edge> pool;

  std::size_t footprint() const {
    return pool.size() * sizeof(Edge) + nodes.size() * sizeof(Node) + table_.size() * 4 +
           (union_.size() + inter_.size() + par_.size() + conj_.size() + subset_.size() + trunc_.size() +
            denote_entries_ * 4) *
               48;
  }
  std::size_t memo_entries() const {
    return union_.size() + inter_.size() + par_.size() + conj_.size() + subset_.size() + trunc_.size() +
           denote_entries_;
  }

  bool term(NodeId n) const { return (nodes[n].flags & (kTermFlag | kAbortFlag)) != 0; }

  NodeId mk(std::uint8_t flags, const std::vector<Edge>& edges) {
    if (flags & kAbortFlag) return kAbort;
    if (edges.empty()) return (flags & kTermFlag) ? kTermLeaf : kLeaf;
    return mk_raw(flags, edges);
  }

  // ---------------------------------------------------------- set algebra

  NodeId unite(NodeId a, NodeId b) {
    if (a == b) return a;
    if (a == kAbort || b == kAbort) return kAbort;
    if (a == kLeaf) return b;
    if (b == kLeaf) return a;
    if (a > b) std::swap(a, b);
    auto key = pair_key(a, b);
    if (auto it = union_.find(key); it != union_.end()) return it->second;
    Node na = nodes[a], nb = nodes[b];
    std::vector<Edge> out;
    out.reserve(na.len + nb.len);
    std::uint32_t i = 0, j = 0;
    while (i < na.len || j < nb.len) {
      if (j == nb.len || (i < na.len && pool[na.begin + i].key < pool[nb.begin + j].key)) {
        out.push_back(pool[na.begin + i++]);
      } else if (i == na.len || pool[nb.begin + j].key < pool[na.begin + i].key) {
        out.push_back(pool[nb.begin + j++]);
      } else {
        Edge ea = pool[na.begin + i++], eb = pool[nb.begin + j++];
        out.push_back({ea.key, unite(ea.child, eb.child)});
      }
    }
    NodeId r = mk(na.flags | nb.flags, out);
    union_.emplace(key, r);
    return r;
  }

  NodeId intersect(NodeId a, NodeId b) {
    if (a == b) return a;
    if (a == kAbort) return b;
    if (b == kAbort) return a;
    if (a == kLeaf || b == kLeaf) return kLeaf;
    if (a > b) std::swap(a, b);
    auto key = pair_key(a, b);
    if (auto it = inter_.find(key); it != inter_.end()) return it->second;
    Node na = nodes[a], nb = nodes[b];
    std::vector<Edge> out;
    std::uint32_t i = 0, j = 0;
    while (i < na.len && j < nb.len) {
      Edge ea = pool[na.begin + i], eb = pool[nb.begin + j];
      if (ea.key < eb.key) {
        ++i;
      } else if (eb.key < ea.key) {
        ++j;
      } else {
        out.push_back({ea.key, intersect(ea.child, eb.child)});
        ++i;
        ++j;
      }
    }
    NodeId r = mk(na.flags & nb.flags, out);
    inter_.emplace(key, r);
    return r;
  }

  bool subset(NodeId a, NodeId b) {
    if (a == b || b == kAbort || a == kLeaf) return true;
    if (a == kAbort || b == kLeaf) return false;
    auto key = pair_key(a, b);
    if (auto it = subset_.find(key); it != subset_.end()) return it->second;
    Node na = nodes[a], nb = nodes[b];
    bool ok = !((na.flags & kTermFlag) && !(nb.flags & kTermFlag));
    std::uint32_t j = 0;
    for (std::uint32_t i = 0; ok && i < na.len; ++i) {
      Edge ea = pool[na.begin + i];
      while (j < nb.len && pool[nb.begin + j].key < ea.key) ++j;
      if (j == nb.len || pool[nb.begin + j].key != ea.key) {
        ok = false;
      } else {
        ok = subset(ea.child, pool[nb.begin + j].child);
      }
    }
    subset_.emplace(key, ok);
    return ok;
  }

  // Lockstep synchronisation: parallel when par, weak conjunction otherwise.
  NodeId sync(NodeId a, NodeId b, bool par) {
    if (a == kAbort || b == kAbort) return kAbort;
    if (a == kLeaf || b == kLeaf) return kLeaf;
    if (a > b) std::swap(a, b);
    auto& memo = par ? par_ : conj_;
    auto key = pair_key(a, b);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Node na = nodes[a], nb = nodes[b];
    std::uint32_t ap = split(na), bp = split(nb);
    // Sub-ranges: [begin, begin+ap) program steps, [begin+ap, begin+len) environment steps.
    struct Range {
      std::uint32_t lo, hi, off;
    };
    Range api{na.begin, na.begin + ap, 0}, aen{na.begin + ap, na.begin + na.len, static_cast<std::uint32_t>(S)};
    Range bpi{nb.begin, nb.begin + bp, 0}, ben{nb.begin + bp, nb.begin + nb.len, static_cast<std::uint32_t>(S)};
    auto join = [&](Range x, Range y, std::uint32_t out_off, std::vector<Edge>& out) {
      std::uint32_t i = x.lo, j = y.lo;
      while (i < x.hi && j < y.hi) {
        std::uint32_t px = pool[i].key - x.off, py = pool[j].key - y.off;
        if (px < py) {
          ++i;
        } else if (py < px) {
          ++j;
        } else {
          NodeId ci = pool[i].child, cj = pool[j].child;
          NodeId r = sync(ci, cj, par);
          out.push_back({px + out_off, r});
          ++i;
          ++j;
        }
      }
    };
    std::vector<Edge> out;
    if (par) {
      std::vector<Edge> p1, p2;
      join(api, ben, 0, p1);
      join(aen, bpi, 0, p2);
      std::size_t i = 0, j = 0;
      while (i < p1.size() || j < p2.size()) {
        if (j == p2.size() || (i < p1.size() && p1[i].key < p2[j].key)) {
          out.push_back(p1[i++]);
        } else if (i == p1.size() || p2[j].key < p1[i].key) {
          out.push_back(p2[j++]);
        } else {
          NodeId u = unite(p1[i].child, p2[j].child);
          out.push_back({p1[i].key, u});
          ++i;
          ++j;
        }
      }
    } else {
      join(api, bpi, 0, out);
    }
    join(aen, ben, static_cast<std::uint32_t>(S), out);
    std::uint8_t flags = ((na.flags & kTermFlag) && (nb.flags & kTermFlag)) ? kTermFlag : 0;
    NodeId r = mk(flags, out);
    memo.emplace(key, r);
    return r;
  }

  // Cuts a node so that it is canonical at the given depth.
  NodeId trunc(NodeId n, std::size_t depth) {
    if (depth >= K) return kLeaf;
    if (depth + nodes[n].height <= K) return n;
    auto key = (std::uint64_t{n} << 8) | depth;
    if (auto it = trunc_.find(key); it != trunc_.end()) return it->second;
    Node nn = nodes[n];
    std::vector<Edge> out;
    out.reserve(nn.len);
    for (std::uint32_t i = 0; i < nn.len; ++i) {
      Edge e = pool[nn.begin + i];
      NodeId c = trunc(e.child, depth + 1);
      out.push_back({e.key, c});
    }
    NodeId r = mk(nn.flags, out);
    trunc_.emplace(key, r);
    return r;
  }

  // Sequential composition of the node a (at the given depth, in state s)
  // with the continuation sets d.
  NodeId seq(NodeId a, const Roots& d, State s, std::size_t depth,
             std::unordered_map<std::uint64_t, NodeId>& memo) {
    if (a == kAbort || a == kLeaf) return a;
    if (a == kTermLeaf) return trunc(d[s], depth);
    auto key = (std::uint64_t{a} << 32) | (std::uint64_t{s} << 8) | depth;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Node na = nodes[a];
    std::vector<Edge> out;
    out.reserve(na.len);
    for (std::uint32_t i = 0; i < na.len; ++i) {
      Edge e = pool[na.begin + i];
      NodeId c = seq(e.child, d, static_cast<State>(e.key % S), depth + 1, memo);
      out.push_back({e.key, c});
    }
    NodeId r = mk(na.flags & ~kTermFlag, out);
    if (na.flags & kTermFlag) r = unite(r, trunc(d[s], depth));
    memo.emplace(key, r);
    return r;
  }

  Roots seq_roots(const Roots& c, const Roots& d) {
    std::unordered_map<std::uint64_t, NodeId> memo;
    Roots r(S);
    for (State s = 0; s < S; ++s) r[s] = seq(c[s], d, s, 0, memo);
    return r;
  }

  // ------------------------------------------------------------- denote

  Roots all(NodeId n) const { return Roots(S, n); }

  Roots step_roots(const Rel& r, Label l) {
    NodeId child = K >= 2 ? kTermLeaf : kLeaf;
    Roots out(S);
    std::vector<Edge> edges;
    for (State s = 0; s < S; ++s) {
      edges.clear();
      for (State t : r.row(s)) edges.push_back({static_cast<std::uint32_t>(static_cast<std::size_t>(l) * S + t), child});
      out[s] = mk(0, edges);
    }
    return out;
  }

  Roots iterate(const Roots& body, bool greatest) {
    Roots x = all(greatest ? kAbort : kLeaf);
    for (std::size_t it = 0; it < kMaxFixpointIterations; ++it) {
      Roots y = seq_roots(body, x);
      for (auto& n : y) n = unite(n, kTermLeaf);
      if (y == x) return x;
      x = std::move(y);
    }
    throw ConfigError("fixpoint iteration did not stabilise");
  }

  Roots denote(const Command& c, const Env& env) {
    require_same(space, c->space());
    std::uint64_t key = c->hash();
    std::vector<const Roots*> bound;
    for (const auto& v : c->free_vars()) {
      auto it = env.find(v);
      if (it == env.end()) throw CommandError("unbound fixpoint variable '" + v + "'");
      bound.push_back(&it->second);
      key = mix(key, hash_str(v));
      for (NodeId n : it->second) key = mix(key, n);
    }
    auto& bucket = denote_memo_[key];
    for (const auto& e : bucket) {
      if (e.env.size() != bound.size() || !same_cmd(e.cmd, c)) continue;
      bool same = true;
      for (std::size_t i = 0; same && i < bound.size(); ++i) same = e.env[i] == *bound[i];
      if (same) return e.roots;
    }
    Roots r = compute(c, env);
    MemoEntry m{c, {}, r};
    for (auto* b : bound) m.env.push_back(*b);
    denote_memo_[key].push_back(std::move(m));
    ++denote_entries_;
    return r;
  }

  // Copies a node of another engine, cut to this engine's bound.
  NodeId transfer(const Engine& src, NodeId n, std::size_t depth,
                  std::unordered_map<std::uint64_t, NodeId>& memo) {
    if (depth >= K) return kLeaf;
    if (n == kAbort || n == kLeaf || n == kTermLeaf) return n;
    auto key = (std::uint64_t{n} << 8) | depth;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const Node& sn = src.nodes[n];
    std::vector<Edge> out;
    out.reserve(sn.len);
    for (std::uint32_t i = 0; i < sn.len; ++i) {
      Edge e = src.pool[sn.begin + i];
      NodeId c = transfer(src, e.child, depth + 1, memo);
      out.push_back({e.key, c});
    }
    NodeId r = mk(sn.flags, out);
    memo.emplace(key, r);
    return r;
  }

 private:
  struct MemoEntry {
    Command cmd;
    std::vector<Roots> env;
    Roots roots;
  };

  std::uint32_t split(const Node& n) const {
    std::uint32_t lo = 0, hi = n.len;
    while (lo < hi) {
      std::uint32_t mid = (lo + hi) / 2;
      if (pool[n.begin + mid].key < S) lo = mid + 1;
      else hi = mid;
    }
    return lo;
  }

  static std::uint64_t node_hash(std::uint8_t flags, const std::vector<Edge>& edges) {
    std::uint64_t h = mix(0x51ed27, flags);
    for (const auto& e : edges) h = mix(h, (std::uint64_t{e.key} << 32) | e.child);
    return h;
  }

  bool node_equals(NodeId id, std::uint64_t h, std::uint8_t flags, const std::vector<Edge>& edges) const {
    const Node& n = nodes[id];
    if (n.hash != h || n.flags != flags || n.len != edges.size()) return false;
    return std::equal(edges.begin(), edges.end(), pool.begin() + n.begin);
  }

  NodeId mk_raw(std::uint8_t flags, const std::vector<Edge>& edges) {
    std::uint64_t h = node_hash(flags, edges);
    std::size_t mask = table_.size() - 1;
    std::size_t pos = h & mask;
    while (table_[pos] != kNone) {
      if (node_equals(table_[pos], h, flags, edges)) return table_[pos];
      pos = (pos + 1) & mask;
    }
    std::uint8_t height = flags ? 1 : 0;
    for (const auto& e : edges) height = std::max<std::uint8_t>(height, nodes[e.child].height + 1);
    NodeId id = static_cast<NodeId>(nodes.size());
    nodes.push_back({h, static_cast<std::uint32_t>(pool.size()), static_cast<std::uint32_t>(edges.size()), flags, height});
    pool.insert(pool.end(), edges.begin(), edges.end());
    table_[pos] = id;
    if (nodes.size() * 2 > table_.size()) rehash();
    return id;
  }

  void rehash() {
    std::vector<NodeId> t(table_.size() * 2, kNone);
    std::size_t mask = t.size() - 1;
    for (NodeId id = 0; id < nodes.size(); ++id) {
      std::size_t pos = nodes[id].hash & mask;
      while (t[pos] != kNone) pos = (pos + 1) & mask;
      t[pos] = id;
    }
    table_.swap(t);
  }

  Roots compute(const Command& c, const Env& env) {
    switch (c->kind()) {
      case Kind::Pgm:
        return step_roots(c->rel(), Label::Pgm);
      case Kind::Env:
        return step_roots(c->rel(), Label::Env);
      case Kind::Test: {
        Roots r(S);
        for (State s = 0; s < S; ++s) r[s] = c->set().contains(s) ? kTermLeaf : kLeaf;
        return r;
      }
      case Kind::Abort:
        return all(kAbort);
      case Kind::Nondet: {
        Roots r = all(kLeaf);
        for (const auto& k : c->kids()) {
          Roots x = denote(k, env);
          for (State s = 0; s < S; ++s) r[s] = unite(r[s], x[s]);
        }
        return r;
      }
      case Kind::Seq: {
        Roots a = denote(c->kid(0), env);
        Roots b = denote(c->kid(1), env);
        return seq_roots(a, b);
      }
      case Kind::Par:
      case Kind::Conj: {
        Roots a = denote(c->kid(0), env);
        Roots b = denote(c->kid(1), env);
        Roots r(S);
        for (State s = 0; s < S; ++s) r[s] = sync(a[s], b[s], c->kind() == Kind::Par);
        return r;
      }
      case Kind::Fin:
        return iterate(denote(c->kid(0), env), false);
      case Kind::Om:
        return iterate(denote(c->kid(0), env), true);
      case Kind::Inf:
        return seq_roots(iterate(denote(c->kid(0), env), true), all(kLeaf));
      case Kind::Mu:
      case Kind::Nu: {
        Roots x = all(c->kind() == Kind::Nu ? kAbort : kLeaf);
        Env inner = env;
        for (std::size_t it = 0; it < kMaxFixpointIterations; ++it) {
          inner[c->name()] = x;
          Roots y = denote(c->kid(0), inner);
          if (y == x) return x;
          x = std::move(y);
        }
        throw ConfigError("fixpoint iteration did not stabilise");
      }
      case Kind::FixVar:
        return env.at(c->name());
      case Kind::Derived:
        return denote(expand(c), env);
    }
    throw CommandError("unknown command kind");
  }

  std::vector<NodeId> table_;
  std::unordered_map<std::uint64_t, NodeId> union_, inter_, par_, conj_, trunc_;
  std::unordered_map<std::uint64_t, bool> subset_;
  std::unordered_map<std::uint64_t, std::vector<MemoEntry>> denote_memo_;
  std::size_t denote_entries_ = 0;
};

namespace {

struct EngineKey {
  std::string digest;
  std::size_t K;
  friend auto operator<=>(const EngineKey&, const EngineKey&) = default;
};

thread_local std::map<EngineKey, std::shared_ptr<Engine>> g_engines;

std::shared_ptr<Engine> engine_for(const Space& space, std::size_t K) {
  EngineKey key{space->digest(), K};
  auto& slot = g_engines[key];
  if (!slot || slot->footprint() > kEngineBudgetBytes) slot = std::make_shared<Engine>(space, K);
  return slot;
}

// Roots of s inside engine e, copying them over when s lives elsewhere.
std::vector<NodeId> roots_in(Engine& e, const BehaviorSet& s) {
  if (s.engine().get() == &e) return s.roots();
  if (!s.space()->same_as(*e.space)) throw SpaceMismatch();
  std::unordered_map<std::uint64_t, NodeId> memo;
  std::vector<NodeId> r(e.S);
  for (State st = 0; st < e.S; ++st) r[st] = e.transfer(*s.engine(), s.roots()[st], 0, memo);
  return r;
}

Engine::Env to_env(Engine& e, const FixEnv& rho) {
  Engine::Env env;
  for (const auto& [name, set] : rho) {
    if (set.bound() != e.K) throw ConfigError("fixpoint environment uses a different bound");
    env[name] = roots_in(e, set);
  }
  return env;
}

}  // namespace

const char* label_name(Label l) { return l == Label::Pgm ? "π" : "ε"; }

const char* status_name(Status s) {
  switch (s) {
    case Status::Term: return "TERM";
    case Status::Abort: return "ABORT";
    case Status::Inc: return "INC";
  }
  return "?";
}

bool behavior_less(const Behavior& a, const Behavior& b) {
  if (a.steps.size() != b.steps.size()) return a.steps.size() < b.steps.size();
  if (a.initial != b.initial) return a.initial < b.initial;
  if (a.steps != b.steps) return a.steps < b.steps;
  return a.status < b.status;
}

std::string render(const Behavior& b, const StateSpace& space) {
  std::string out = space.render(b.initial);
  for (const auto& st : b.steps) out += std::string(" --") + label_name(st.label) + "--> " + space.render(st.post);
  return out + " [" + status_name(b.status) + "]";
}

BehaviorSet::BehaviorSet(std::shared_ptr<Engine> eng, std::vector<NodeId> roots)
    : eng_(std::move(eng)), roots_(std::move(roots)) {}

const Space& BehaviorSet::space() const { return eng_->space; }
std::size_t BehaviorSet::bound() const { return eng_->K; }

bool BehaviorSet::contains(const Behavior& b) const {
  const Engine& e = *eng_;
  std::size_t L = b.steps.size();
  if (b.initial >= e.S || L > e.K) return false;
  NodeId n = roots_[b.initial];
  for (std::size_t i = 0; i <= L; ++i) {
    if (n == kAbort) return L < e.K || b.status == Status::Inc;
    if (i == L) break;
    if (b.steps[i].post >= e.S) return false;
    std::uint32_t key = static_cast<std::uint32_t>(static_cast<std::size_t>(b.steps[i].label) * e.S + b.steps[i].post);
    const auto& node = e.nodes[n];
    auto first = e.pool.begin() + node.begin, last = first + node.len;
    auto it = std::lower_bound(first, last, key, [](const Edge& x, std::uint32_t k) { return x.key < k; });
    if (it == last || it->key != key) return false;
    n = it->child;
  }
  switch (b.status) {
    case Status::Inc: return true;
    case Status::Term: return (e.nodes[n].flags & kTermFlag) != 0;
    case Status::Abort: return false;
  }
  return false;
}

std::vector<Behavior> BehaviorSet::members() const {
  const Engine& e = *eng_;
  std::vector<Behavior> out;
  Behavior cur;
  std::function<void(NodeId, std::size_t)> walk = [&](NodeId n, std::size_t depth) {
    cur.status = Status::Inc;
    out.push_back(cur);
    if (n == kAbort) {
      cur.status = Status::Term;
      out.push_back(cur);
      cur.status = Status::Abort;
      out.push_back(cur);
      NodeId child = depth + 1 < e.K ? kAbort : kLeaf;
      for (std::uint8_t l = 0; l < 2; ++l)
        for (State t = 0; t < e.S; ++t) {
          cur.steps.push_back({static_cast<Label>(l), t});
          walk(child, depth + 1);
          cur.steps.pop_back();
        }
      return;
    }
    const auto& node = e.nodes[n];
    if (node.flags & kTermFlag) {
      cur.status = Status::Term;
      out.push_back(cur);
    }
    for (std::uint32_t i = 0; i < node.len; ++i) {
      Edge ed = e.pool[node.begin + i];
      cur.steps.push_back({static_cast<Label>(ed.key / e.S), static_cast<State>(ed.key % e.S)});
      walk(ed.child, depth + 1);
      cur.steps.pop_back();
    }
  };
  for (State s = 0; s < e.S; ++s) {
    cur.initial = s;
    walk(roots_[s], 0);
  }
  return out;
}

std::size_t BehaviorSet::count() const { return members().size(); }

bool BehaviorSet::subset_of(const BehaviorSet& o) const {
  if (bound() != o.bound()) throw ConfigError("behavior sets use different bounds");
  Engine& e = *o.eng_;
  auto mine = roots_in(e, *this);
  for (State s = 0; s < e.S; ++s)
    if (!e.subset(mine[s], o.roots_[s])) return false;
  return true;
}

bool operator==(const BehaviorSet& a, const BehaviorSet& b) {
  if (a.bound() != b.bound()) return false;
  if (a.eng_ == b.eng_) return a.roots_ == b.roots_;
  return roots_in(*a.eng_, b) == a.roots_;
}

BehaviorSet saturate(const Space& space, std::size_t K, const std::vector<Behavior>& raw) {
  auto e = engine_for(space, K);
  std::vector<NodeId> roots(e->S, kLeaf);
  for (const auto& b : raw) {
    std::size_t L = b.steps.size();
    if (L > K) throw ConfigError("behavior longer than the bound");
    if (b.initial >= e->S) throw ConfigError("behavior starts outside the space");
    NodeId n = kLeaf;
    if (L < K) n = b.status == Status::Term ? kTermLeaf : b.status == Status::Abort ? kAbort : kLeaf;
    for (std::size_t i = L; i-- > 0;) {
      if (b.steps[i].post >= e->S) throw ConfigError("behavior leaves the space");
      std::vector<Edge> edge{{static_cast<std::uint32_t>(static_cast<std::size_t>(b.steps[i].label) * e->S + b.steps[i].post), n}};
      n = e->mk(0, edge);
    }
    roots[b.initial] = e->unite(roots[b.initial], n);
  }
  return BehaviorSet(e, std::move(roots));
}

BehaviorSet denote(const Command& c, std::size_t K, const FixEnv& rho) {
  auto e = engine_for(c->space(), K);
  auto env = to_env(*e, rho);
  return BehaviorSet(e, e->denote(c, env));
}

bool refines(const Command& c, const Command& d, std::size_t K) {
  require_same(c->space(), d->space());
  auto e = engine_for(c->space(), K);
  auto rc = e->denote(c, {});
  auto rd = e->denote(d, {});
  for (State s = 0; s < e->S; ++s)
    if (!e->subset(rd[s], rc[s])) return false;
  return true;
}

bool equivalent(const Command& c, const Command& d, std::size_t K) {
  require_same(c->space(), d->space());
  auto e = engine_for(c->space(), K);
  return e->denote(c, {}) == e->denote(d, {});
}

std::optional<Counterexample> find_counterexample(const BehaviorSet& cs, const BehaviorSet& ds) {
  if (cs.bound() != ds.bound()) throw ConfigError("behavior sets use different bounds");
  Engine& e = *cs.engine();
  auto croots = cs.roots();
  auto droots = roots_in(e, ds);

  struct Item {
    NodeId d, c;  // c == kNone: c has no behavior with this path
    std::size_t trail;
  };
  struct Trail {
    std::size_t parent;
    Step step;
    State initial;
  };
  std::vector<Trail> trails;
  std::vector<Item> level;
  for (State s = 0; s < e.S; ++s) {
    trails.push_back({kNone, {}, s});
    level.push_back({droots[s], croots[s], trails.size() - 1});
  }
  auto statuses = [&](NodeId n) {
    unsigned m = 1u << static_cast<unsigned>(Status::Inc);
    if (n == kNone) return 0u;
    if (n == kAbort) return m | 1u << static_cast<unsigned>(Status::Term) | 1u << static_cast<unsigned>(Status::Abort);
    if (e.nodes[n].flags & kTermFlag) m |= 1u << static_cast<unsigned>(Status::Term);
    return m;
  };
  for (std::size_t depth = 0; depth <= e.K && !level.empty(); ++depth) {
    for (const auto& it : level) {
      unsigned missing = statuses(it.d) & ~statuses(it.c);
      if (!missing) continue;
      Counterexample cx;
      for (unsigned st = 0; st < 3; ++st)
        if (missing & (1u << st)) {
          cx.behavior.status = static_cast<Status>(st);
          break;
        }
      std::vector<Step> steps;
      std::size_t t = it.trail;
      while (trails[t].parent != kNone) {
        steps.push_back(trails[t].step);
        t = trails[t].parent;
      }
      cx.behavior.initial = trails[t].initial;
      cx.behavior.steps.assign(steps.rbegin(), steps.rend());
      cx.frontier = cx.behavior.steps.size() == e.K;
      return cx;
    }
    std::vector<Item> next;
    for (const auto& it : level) {
      // Items reaching here have c present and both statuses covered; an
      // aborting d would already have produced a witness.
      if (it.c == kAbort || e.subset(it.d, it.c)) continue;
      const auto& dn = e.nodes[it.d];
      const auto& cn = e.nodes[it.c];
      std::uint32_t j = 0;
      for (std::uint32_t i = 0; i < dn.len; ++i) {
        Edge ed = e.pool[dn.begin + i];
        while (j < cn.len && e.pool[cn.begin + j].key < ed.key) ++j;
        NodeId cc = (j < cn.len && e.pool[cn.begin + j].key == ed.key) ? e.pool[cn.begin + j].child : kNone;
        trails.push_back({it.trail, {static_cast<Label>(ed.key / e.S), static_cast<State>(ed.key % e.S)}, 0});
        next.push_back({ed.child, cc, trails.size() - 1});
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

std::optional<Counterexample> find_counterexample(const Command& c, const Command& d, std::size_t K) {
  require_same(c->space(), d->space());
  auto e = engine_for(c->space(), K);
  BehaviorSet cs(e, e->denote(c, {}));
  BehaviorSet ds(e, e->denote(d, {}));
  return find_counterexample(cs, ds);
}

BehaviorSet restrict_to_bound(const BehaviorSet& s, std::size_t K) {
  if (K > s.bound()) throw ConfigError("cannot widen a behavior set to a larger bound");
  auto e = engine_for(s.space(), K);
  std::unordered_map<std::uint64_t, NodeId> memo;
  std::vector<NodeId> r(e->S);
  for (State st = 0; st < e->S; ++st) r[st] = e->transfer(*s.engine(), s.roots()[st], 0, memo);
  return BehaviorSet(e, std::move(r));
}

BehaviorSet unite(const BehaviorSet& a, const BehaviorSet& b) {
  if (a.bound() != b.bound()) throw ConfigError("behavior sets use different bounds");
  auto e = a.engine();
  auto rb = roots_in(*e, b);
  std::vector<NodeId> r(e->S);
  for (State s = 0; s < e->S; ++s) r[s] = e->unite(a.roots()[s], rb[s]);
  return BehaviorSet(e, std::move(r));
}

BehaviorSet meet(const BehaviorSet& a, const BehaviorSet& b) {
  if (a.bound() != b.bound()) throw ConfigError("behavior sets use different bounds");
  auto e = a.engine();
  auto rb = roots_in(*e, b);
  std::vector<NodeId> r(e->S);
  for (State s = 0; s < e->S; ++s) r[s] = e->intersect(a.roots()[s], rb[s]);
  return BehaviorSet(e, std::move(r));
}

EngineStats engine_stats(const Space& space, std::size_t K) {
  auto it = g_engines.find(EngineKey{space->digest(), K});
  if (it == g_engines.end() || !it->second) return {};
  return {it->second->nodes.size(), it->second->pool.size(), it->second->memo_entries()};
}

void reset_engines() { g_engines.clear(); }

}  // namespace rgc
