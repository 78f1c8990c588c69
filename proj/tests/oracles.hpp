#pragma once
// Brute-force reference computations used to cross-check the library.
// Everything here is deliberately naive and shares no code with src/.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "gtop/bigint.hpp"
#include "gtop/complex.hpp"
#include "gtop/graph.hpp"

namespace oracle {

using gtop::BigInt;
using gtop::Rational;
using Dense = std::vector<std::vector<long long>>;

// Sum over permutations. Only for n <= 8.
inline BigInt permutation_det(const Dense& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    BigInt term = (inversions % 2) ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Laplace expansion along the first row. Exponential, keep n <= 8.
inline BigInt cofactor_det(const Dense& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Dense minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const BigInt sub = cofactor_det(minor);
    total += (c % 2 ? -1 : 1) * m[0][c] * sub;
  }
  return total;
}

// Gauss-Jordan over the rationals. Returns empty on singular input.
inline std::vector<std::vector<Rational>> rational_inverse(const Dense& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return {};
    std::swap(a[p], a[c]);
    const Rational piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

inline std::size_t rational_rank(std::vector<std::vector<Rational>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

// Adjacency as a bitmask per vertex index; n <= 20.
inline std::vector<std::uint32_t> masks(const gtop::Graph& g) {
  std::vector<std::uint32_t> m(g.order(), 0);
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j)
      if (i != j && g.adjacent_indices(i, j)) m[i] |= 1u << j;
  return m;
}

// Clique counts by testing every vertex subset.
inline std::vector<std::int64_t> subset_clique_counts(const gtop::Graph& g) {
  const auto adj = masks(g);
  const std::size_t n = g.order();
  std::vector<std::int64_t> f;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    bool clique = true;
    for (std::size_t i = 0; i < n && clique; ++i)
      if (s >> i & 1u)
        if ((s & ~(1u << i) & ~adj[i]) != 0) clique = false;
    if (!clique) continue;
    const auto k = static_cast<std::size_t>(__builtin_popcount(s));
    if (f.size() < k) f.resize(k, 0);
    ++f[k - 1];
  }
  return f;
}

inline std::int64_t subset_euler(const gtop::Graph& g) {
  const auto f = subset_clique_counts(g);
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 ? -1 : 1) * f[k];
  return chi;
}

// Isomorphism by trying every bijection; n <= 9.
inline bool permutation_isomorphic(const gtop::Graph& a, const gtop::Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const std::size_t n = a.order();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if (a.adjacent_indices(i, j) != b.adjacent_indices(p[i], p[j])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline int trial_division_moebius(std::int64_t n) {
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

inline gtop::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<gtop::Vertex> vs(n);
  std::iota(vs.begin(), vs.end(), 0);
  std::vector<gtop::Edge> es;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (u(rng) < p) es.emplace_back(static_cast<gtop::Vertex>(i), static_cast<gtop::Vertex>(j));
  return gtop::Graph(vs, es);
}

inline Dense to_dense(const gtop::Graph& g, bool plus_identity) {
  const std::size_t n = g.order();
  Dense m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (plus_identity) m[i][i] = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && g.adjacent_indices(i, j)) m[i][j] = 1;
  }
  return m;
}

}  // namespace oracle
