// Brute-force reference computations that share no code with the library:
// states are plain tuples and relations are boolean matrices.
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace oracle {

/// A state of the rem-from-set space.
struct Word {
  int w, pw, nw, i;
};

inline std::vector<Word> word_states(int bits) {
  std::vector<Word> out;
  int top = 1 << bits;
  for (int w = 0; w < top; ++w)
    for (int pw = 0; pw < top; ++pw)
      for (int nw = 0; nw < top; ++nw)
        for (int i = 0; i < bits; ++i) out.push_back({w, pw, nw, i});
  return out;
}

inline bool sup(int a, int b) { return (a & b) == b; }
inline bool psup(int a, int b) { return a != b && sup(a, b); }
inline bool has(int set, int i) { return (set >> i) & 1; }
inline int without(int set, int i) { return set & ~(1 << i); }

using Matrix = std::vector<std::vector<char>>;

template <class S>
Matrix relation(const std::vector<S>& states, const std::function<bool(const S&, const S&)>& pred) {
  Matrix m(states.size(), std::vector<char>(states.size(), 0));
  for (std::size_t a = 0; a < states.size(); ++a)
    for (std::size_t b = 0; b < states.size(); ++b) m[a][b] = pred(states[a], states[b]);
  return m;
}

inline Matrix compose(const Matrix& x, const Matrix& y) {
  std::size_t n = x.size();
  Matrix m(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      if (x[a][c])
        for (std::size_t b = 0; b < n; ++b)
          if (y[c][b]) m[a][b] = 1;
  return m;
}

/// Warshall closure plus the identity.
inline Matrix rtc(Matrix m) {
  std::size_t n = m.size();
  for (std::size_t a = 0; a < n; ++a) m[a][a] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (m[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (m[k][b]) m[a][b] = 1;
  return m;
}

inline Matrix unite(const Matrix& x, const Matrix& y) {
  Matrix m = x;
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b) m[a][b] = x[a][b] || y[a][b];
  return m;
}

inline std::size_t count(const Matrix& m) {
  std::size_t n = 0;
  for (const auto& row : m)
    for (char c : row) n += c;
  return n;
}

inline bool subset(const Matrix& x, const Matrix& y) {
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b)
      if (x[a][b] && !y[a][b]) return false;
  return true;
}

}  // namespace oracle
