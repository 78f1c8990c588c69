#include "gtop/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace gtop {

namespace {

using Colors = std::vector<std::uint32_t>;
using Adj = std::vector<std::vector<std::uint32_t>>;

// Equitable refinement. New colors are ranks of (old color, sorted neighbour
// colors) signatures, so the result depends on structure only.
void refine(const Adj& adj, Colors& color) {
  const std::size_t n = adj.size();
  std::size_t classes = 0;
  {
    Colors tmp = color;
    std::sort(tmp.begin(), tmp.end());
    classes = static_cast<std::size_t>(std::unique(tmp.begin(), tmp.end()) - tmp.begin());
  }
  while (true) {
    std::vector<std::vector<std::uint32_t>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].reserve(adj[v].size() + 1);
      sig[v].push_back(color[v]);
      std::vector<std::uint32_t> nb;
      nb.reserve(adj[v].size());
      for (auto u : adj[v]) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<const std::vector<std::uint32_t>*> uniq;
    uniq.reserve(n);
    for (auto& s : sig) uniq.push_back(&s);
    std::sort(uniq.begin(), uniq.end(), [](auto* a, auto* b) { return *a < *b; });
    uniq.erase(std::unique(uniq.begin(), uniq.end(), [](auto* a, auto* b) { return *a == *b; }),
               uniq.end());
    for (std::size_t v = 0; v < n; ++v) {
      auto it = std::lower_bound(uniq.begin(), uniq.end(), &sig[v],
                                 [](auto* a, auto* b) { return *a < *b; });
      color[v] = static_cast<std::uint32_t>(it - uniq.begin());
    }
    if (uniq.size() == classes) return;
    classes = uniq.size();
  }
}

Adj index_adjacency(const Graph& g) {
  Adj adj(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) adj[i] = g.neighbor_indices(i);
  return adj;
}

// Give v a color below the rest of its class, keeping the order of classes.
Colors individualize(const Colors& color, std::size_t v) {
  Colors out(color.size());
  for (std::size_t u = 0; u < color.size(); ++u) out[u] = 2 * color[u] + 1;
  out[v] = 2 * color[v];
  return out;
}

// First smallest non-singleton class, or -1 if discrete.
long target_class(const Colors& color) {
  std::map<std::uint32_t, std::size_t> count;
  for (auto c : color) ++count[c];
  long best = -1;
  std::size_t best_size = 0;
  for (const auto& [c, k] : count)
    if (k > 1 && (best < 0 || k < best_size)) {
      best = c;
      best_size = k;
    }
  return best;
}

bool twins(const Adj& adj, std::size_t a, std::size_t b) {
  auto open_a = adj[a], open_b = adj[b];
  std::erase(open_a, static_cast<std::uint32_t>(b));
  std::erase(open_b, static_cast<std::uint32_t>(a));
  return open_a == open_b;
}

constexpr std::size_t kLeafBudget = 20000;

struct CanonSearch {
  const Adj& adj;
  std::string best;
  std::size_t leaves = 0;
  bool overflow = false;

  std::string certificate(const Colors& color) const {
    const std::size_t n = adj.size();
    std::vector<std::size_t> at(n);
    for (std::size_t v = 0; v < n; ++v) at[color[v]] = v;
    std::string bits;
    bits.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        bits.push_back(std::binary_search(adj[at[i]].begin(), adj[at[i]].end(),
                                          static_cast<std::uint32_t>(at[j]))
                           ? '1'
                           : '0');
    return bits;
  }

  void run(Colors color) {
    if (overflow) return;
    refine(adj, color);
    const long cell = target_class(color);
    if (cell < 0) {
      if (++leaves > kLeafBudget) {
        overflow = true;
        return;
      }
      auto cert = certificate(color);
      if (best.empty() || cert < best) best = std::move(cert);
      return;
    }
    std::vector<std::size_t> tried;
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (color[v] != static_cast<std::uint32_t>(cell)) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](std::size_t u) { return twins(adj, u, v); }))
        continue;
      tried.push_back(v);
      run(individualize(color, v));
    }
  }
};

std::string labeled_key(const Graph& g) {
  std::string key = "L";
  key += std::to_string(g.order());
  for (Vertex v : g.vertices()) key += "," + std::to_string(v);
  key += ";";
  for (const auto& [a, b] : g.edges()) key += std::to_string(a) + "-" + std::to_string(b) + ",";
  return key;
}

}  // namespace

std::string canonical_key(const Graph& g) {
  if (g.order() > kCanonicalVertexCap) return labeled_key(g);
  const Adj adj = index_adjacency(g);
  CanonSearch search{adj, {}, 0, false};
  search.run(Colors(g.order(), 0));
  if (search.overflow) return labeled_key(g);
  return "C" + std::to_string(g.order()) + ":" + search.best;
}

bool has_canonical_key(const std::string& key) { return !key.empty() && key[0] == 'C'; }

namespace {

// Joint search on the disjoint union: vertices [0, n) are g, [n, 2n) are h.
struct JointSearch {
  const Adj& adj;
  std::size_t n;
  std::size_t nodes = 0;

  bool balanced(const Colors& color) const {
    std::map<std::uint32_t, long> diff;
    for (std::size_t v = 0; v < n; ++v) ++diff[color[v]];
    for (std::size_t v = n; v < 2 * n; ++v) --diff[color[v]];
    return std::all_of(diff.begin(), diff.end(), [](const auto& kv) { return kv.second == 0; });
  }

  bool verify(const Colors& color) const {
    std::vector<std::size_t> image(n);
    std::vector<std::size_t> by_color(2 * n);
    for (std::size_t v = n; v < 2 * n; ++v) by_color[color[v]] = v;
    for (std::size_t v = 0; v < n; ++v) image[v] = by_color[color[v]];
    for (std::size_t v = 0; v < n; ++v) {
      if (adj[v].size() != adj[image[v]].size()) return false;
      for (auto u : adj[v])
        if (!std::binary_search(adj[image[v]].begin(), adj[image[v]].end(),
                                static_cast<std::uint32_t>(image[u])))
          return false;
    }
    return true;
  }

  bool run(Colors color) {
    if (++nodes > 5'000'000) throw IsomorphismOverflow("isomorphism search exceeded its node budget");
    refine(adj, color);
    if (!balanced(color)) return false;
    // Classes are balanced, so only the g side needs to become discrete.
    const long cell = target_class(Colors(color.begin(), color.begin() + static_cast<long>(n)));
    if (cell < 0) return verify(color);
    std::size_t pick = 0;
    while (color[pick] != static_cast<std::uint32_t>(cell)) ++pick;  // a g-side vertex, by balance
    std::vector<std::size_t> tried;
    for (std::size_t w = n; w < 2 * n; ++w) {
      if (color[w] != static_cast<std::uint32_t>(cell)) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](std::size_t u) { return twins(adj, u, w); }))
        continue;
      tried.push_back(w);
      Colors next(color.size());
      for (std::size_t u = 0; u < color.size(); ++u) next[u] = 2 * color[u] + 1;
      next[pick] = next[w] = 2 * color[pick];
      if (run(std::move(next))) return true;
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h, std::size_t max_vertices) {
  if (g.order() > max_vertices || h.order() > max_vertices)
    throw IsomorphismOverflow("isomorphism test limited to " + std::to_string(max_vertices) +
                              " vertices");
  if (g.order() != h.order() || g.size() != h.size()) return false;
  const std::size_t n = g.order();
  if (n == 0) return true;
  Adj adj(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    adj[i] = g.neighbor_indices(i);
    for (auto j : h.neighbor_indices(i)) adj[n + i].push_back(static_cast<std::uint32_t>(n + j));
  }
  JointSearch search{adj, n};
  return search.run(Colors(2 * n, 0));
}

}  // namespace gtop
