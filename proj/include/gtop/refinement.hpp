#pragma once

#include <cstddef>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "gtop/complex.hpp"
#include "gtop/graph.hpp"

namespace gtop {

/// Default simplex budget for refinements.
inline constexpr std::size_t kDefaultSimplexBudget = 200'000;

/// Raised when a refinement would exceed its simplex budget.
class RefinementOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * A graph whose vertices stand for the simplices of a source complex.
 *
 * Vertex i is the i-th simplex in (dim, lex) order, so vertex labels are
 * 0..n-1 and `simplex_of_vertex[i]` is the source simplex.
 */
struct SimplexGraph {
  Graph graph;
  std::vector<Simplex> simplex_of_vertex;
  std::unordered_map<Simplex, Vertex, SimplexHash> vertex_of_simplex;

  [[nodiscard]] const Simplex& simplex(Vertex v) const;
  /// Throws std::out_of_range if s is not a source simplex.
  [[nodiscard]] Vertex vertex(const Simplex& s) const;
};

/// Barycentric refinement G1: edges join strictly nested simplices.
struct RefinedGraph : SimplexGraph {};

/// Connection graph G': edges join distinct intersecting simplices.
struct ConnectionGraph : SimplexGraph {};

/// Second refinement G2 together with the G1 it was built from.
struct SecondRefinement {
  RefinedGraph first;
  /// Vertices of `second` are simplices of the Whitney complex of first.graph.
  RefinedGraph second;

  /// Chain x0 < x1 < ... < xk of source simplices behind a G2 vertex.
  [[nodiscard]] std::vector<Simplex> chain(Vertex v) const;
};

/// S(x) = S^-(x) + S^+(x) split by the dimension function.
struct SphereDecomposition {
  Vertex center = 0;
  Graph sphere;
  Graph stable;    // neighbours that are proper faces of the center simplex
  Graph unstable;  // neighbours that properly contain it
};

RefinedGraph barycentric(const SimplicialComplex& c,
                         std::size_t simplex_budget = kDefaultSimplexBudget);
SecondRefinement barycentric2(const SimplicialComplex& c,
                              std::size_t simplex_budget = kDefaultSimplexBudget);
ConnectionGraph connection(const SimplicialComplex& c,
                           std::size_t simplex_budget = kDefaultSimplexBudget);

/// Induced subgraph on the neighbours of x. Unknown x throws std::out_of_range.
Graph unit_sphere(const Graph& g, Vertex x);

SphereDecomposition stable_unstable(const RefinedGraph& r, Vertex x);

/**
 * Intersection of the G1 unit spheres of the 0-dimensional faces of x's
 * simplex, with x itself removed. Equals the unstable sphere S^+(x).
 */
Graph positive_sphere_as_intersection(const RefinedGraph& r, Vertex x);

/**
 * Compares (H ∩ K)_1 with H_1 ∩ K_1 inside G1, identifying vertices through
 * their simplices. Throws std::invalid_argument if h or k is not a
 * subcomplex of c.
 */
bool intersection_refinement_check(const SimplicialComplex& c, const SimplicialComplex& h,
                                   const SimplicialComplex& k);

/// G1 induced on the simplices of a subcomplex.
Graph refined_subgraph(const RefinedGraph& r, const SimplicialComplex& sub);

}  // namespace gtop
