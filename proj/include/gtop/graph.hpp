#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gtop/simplex.hpp"

namespace gtop {

/// Unordered edge stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

/**
 * Finite simple undirected graph.
 *
 * Vertices are kept sorted; adjacency is stored by vertex index (position in
 * the sorted label list) as sorted neighbour lists. The graph is an immutable
 * value once constructed.
 */
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on loops, unknown endpoints, negative or
  /// repeated labels. Repeated edges collapse.
  Graph(std::vector<Vertex> vertices, std::span<const Edge> edges);
  Graph(std::vector<Vertex> vertices, std::initializer_list<Edge> edges)
      : Graph(std::move(vertices), std::span<const Edge>(edges.begin(), edges.size())) {}
  /// Vertex set is the set of edge endpoints.
  static Graph from_edges(std::span<const Edge> edges);
  static Graph from_edges(std::initializer_list<Edge> edges) {
    return from_edges(std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Vertices 0..n-1 with edges given by index pairs.
  static Graph from_adjacency(std::size_t n, const std::vector<std::vector<std::uint32_t>>& adj);

  [[nodiscard]] std::size_t order() const { return labels_.size(); }
  [[nodiscard]] std::size_t size() const { return edge_count_; }
  [[nodiscard]] bool empty() const { return labels_.empty(); }

  [[nodiscard]] const std::vector<Vertex>& vertices() const { return labels_; }
  [[nodiscard]] Vertex label(std::size_t index) const { return labels_[index]; }
  [[nodiscard]] bool has_vertex(Vertex v) const;
  /// Throws std::out_of_range for an unknown label.
  [[nodiscard]] std::size_t index_of(Vertex v) const;

  [[nodiscard]] const std::vector<std::uint32_t>& neighbor_indices(std::size_t index) const {
    return adj_[index];
  }
  [[nodiscard]] std::size_t degree_at(std::size_t index) const { return adj_[index].size(); }
  [[nodiscard]] std::vector<Vertex> neighbors(Vertex v) const;
  [[nodiscard]] bool adjacent_indices(std::size_t a, std::size_t b) const;
  [[nodiscard]] bool adjacent(Vertex a, Vertex b) const;

  [[nodiscard]] std::vector<Edge> edges() const;

  /// Induced subgraph on the given labels (unknown labels throw).
  [[nodiscard]] Graph induced(std::span<const Vertex> keep) const;
  [[nodiscard]] Graph induced_by_index(std::span<const std::uint32_t> keep) const;
  [[nodiscard]] Graph without(Vertex v) const;
  [[nodiscard]] Graph complement() const;
  /// Same structure with labels 0..n-1 assigned in the current label order.
  [[nodiscard]] Graph relabeled_consecutive() const;

  /// Connected components as sorted label lists, ordered by smallest label.
  [[nodiscard]] std::vector<std::vector<Vertex>> components() const;
  [[nodiscard]] bool connected() const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Vertex> labels_;
  std::vector<std::vector<std::uint32_t>> adj_;
  std::size_t edge_count_ = 0;
};

/// Labeled edge-wise intersection on the common vertex set.
Graph graph_intersection(const Graph& a, const Graph& b);

/// True iff a's vertices and edges are contained in b's.
bool is_subgraph(const Graph& a, const Graph& b);

}  // namespace gtop
