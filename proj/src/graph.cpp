#include "gtop/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gtop {

Graph::Graph(std::vector<Vertex> vertices, std::span<const Edge> edges)
    : labels_(std::move(vertices)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
    throw std::invalid_argument("graph has a repeated vertex label");
  if (!labels_.empty() && labels_.front() < 0)
    throw std::invalid_argument("graph has a negative vertex label");
  adj_.assign(labels_.size(), {});
  for (const auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (!has_vertex(u) || !has_vertex(v))
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an endpoint that is not a vertex");
    const auto a = static_cast<std::uint32_t>(index_of(u));
    const auto b = static_cast<std::uint32_t>(index_of(v));
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    edge_count_ += nb.size();
  }
  edge_count_ /= 2;
}

Graph Graph::from_edges(std::span<const Edge> edges) {
  std::vector<Vertex> vs;
  vs.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    vs.push_back(u);
    vs.push_back(v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return Graph(std::move(vs), edges);
}

Graph Graph::from_adjacency(std::size_t n, const std::vector<std::vector<std::uint32_t>>& adj) {
  Graph g;
  g.labels_.resize(n);
  std::iota(g.labels_.begin(), g.labels_.end(), 0);
  g.adj_ = adj;
  g.adj_.resize(n);
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    g.edge_count_ += nb.size();
  }
  g.edge_count_ /= 2;
  return g;
}

bool Graph::has_vertex(Vertex v) const {
  return std::binary_search(labels_.begin(), labels_.end(), v);
}

std::size_t Graph::index_of(Vertex v) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
  if (it == labels_.end() || *it != v)
    throw std::out_of_range("unknown vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (auto j : adj_[index_of(v)]) out.push_back(labels_[j]);
  return out;
}

bool Graph::adjacent_indices(std::size_t a, std::size_t b) const {
  const auto& nb = adj_[a];
  return std::binary_search(nb.begin(), nb.end(), static_cast<std::uint32_t>(b));
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (!has_vertex(a) || !has_vertex(b)) return false;
  return adjacent_indices(index_of(a), index_of(b));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < adj_.size(); ++i)
    for (auto j : adj_[i])
      if (j > i) out.emplace_back(labels_[i], labels_[j]);
  return out;
}

Graph Graph::induced_by_index(std::span<const std::uint32_t> keep) const {
  std::vector<std::uint32_t> idx(keep.begin(), keep.end());
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<std::int64_t> position(labels_.size(), -1);
  for (std::size_t k = 0; k < idx.size(); ++k) position[idx[k]] = static_cast<std::int64_t>(k);

  Graph g;
  g.labels_.reserve(idx.size());
  g.adj_.resize(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    g.labels_.push_back(labels_[idx[k]]);
    for (auto j : adj_[idx[k]])
      if (position[j] >= 0) g.adj_[k].push_back(static_cast<std::uint32_t>(position[j]));
    g.edge_count_ += g.adj_[k].size();
  }
  g.edge_count_ /= 2;
  return g;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<std::uint32_t> idx;
  idx.reserve(keep.size());
  for (Vertex v : keep) idx.push_back(static_cast<std::uint32_t>(index_of(v)));
  return induced_by_index(idx);
}

Graph Graph::without(Vertex v) const {
  const auto drop = index_of(v);
  std::vector<std::uint32_t> idx;
  idx.reserve(labels_.size());
  for (std::uint32_t i = 0; i < labels_.size(); ++i)
    if (i != drop) idx.push_back(i);
  return induced_by_index(idx);
}

Graph Graph::complement() const {
  Graph g;
  g.labels_ = labels_;
  g.adj_.resize(labels_.size());
  for (std::uint32_t i = 0; i < labels_.size(); ++i) {
    const auto& nb = adj_[i];
    auto it = nb.begin();
    for (std::uint32_t j = 0; j < labels_.size(); ++j) {
      while (it != nb.end() && *it < j) ++it;
      if (j != i && (it == nb.end() || *it != j)) g.adj_[i].push_back(j);
    }
    g.edge_count_ += g.adj_[i].size();
  }
  g.edge_count_ /= 2;
  return g;
}

Graph Graph::relabeled_consecutive() const {
  Graph g = *this;
  std::iota(g.labels_.begin(), g.labels_.end(), 0);
  return g;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(labels_.size(), 0);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t s = 0; s < labels_.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      comp.push_back(labels_[u]);
      for (auto w : adj_[u])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::connected() const { return !labels_.empty() && components().size() == 1; }

std::string Graph::to_string() const {
  std::ostringstream os;
  os << "Graph(V=" << order() << ", E=" << size() << ";";
  for (const auto& [u, v] : edges()) os << ' ' << u << '-' << v;
  os << ')';
  return os.str();
}

Graph graph_intersection(const Graph& a, const Graph& b) {
  std::vector<Vertex> common;
  std::set_intersection(a.vertices().begin(), a.vertices().end(), b.vertices().begin(),
                        b.vertices().end(), std::back_inserter(common));
  std::vector<Edge> edges;
  for (const auto& e : a.edges())
    if (b.adjacent(e.first, e.second)) edges.push_back(e);
  return Graph(std::move(common), edges);
}

bool is_subgraph(const Graph& a, const Graph& b) {
  if (!std::includes(b.vertices().begin(), b.vertices().end(), a.vertices().begin(),
                     a.vertices().end()))
    return false;
  for (const auto& [u, v] : a.edges())
    if (!b.adjacent(u, v)) return false;
  return true;
}

}  // namespace gtop
