#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gtop/bigint.hpp"
#include "gtop/complex.hpp"
#include "gtop/int_matrix.hpp"
#include "gtop/refinement.hpp"

namespace gtop {

struct GreenRow {
  Vertex vertex = 0;
  std::optional<Simplex> simplex;  // absent for panels labeled by integers
  int dim = 0;
  std::int64_t sphere_euler = 0;  // chi(S(x)) in the refinement graph
  std::int64_t index = 0;         // i(x) = 1 - chi(S(x))
  BigInt green;                   // g(x,x)
  bool match = false;
};

struct GreenReport {
  std::vector<GreenRow> rows;
  BigInt determinant;
  BigInt psi_product;

  [[nodiscard]] bool all_match() const;
  /// det in {-1,1}, det == psi_product, and every row matches.
  [[nodiscard]] bool holds() const;
};

/// Identity plus adjacency of the connection graph, in refinement order.
IntMatrix fredholm_matrix(const ConnectionGraph& cg);

/**
 * Checks g(x,x) = 1 - chi(S(x)) for every simplex and det(1+A') = prod omega.
 * Throws NotUnimodular if 1+A' is not unimodular.
 */
GreenReport green_report(const SimplicialComplex& c);

/**
 * Shared core: `sphere_graph` supplies unit spheres, `matrix_graph` the
 * Fredholm matrix; both on the same vertex list. `dims` gives dim(x) per
 * vertex, used for the psi product.
 */
GreenReport green_report_for(const Graph& sphere_graph, const Graph& matrix_graph,
                             const std::vector<int>& dims);

struct TwinResult {
  BigInt actual;     // determinant of the modified Fredholm matrix
  BigInt predicted;  // closed form from the twin proposition
  [[nodiscard]] bool holds() const { return actual == predicted; }
};

/**
 * Attaches one new cell along the full subcomplex h: the Fredholm matrix is
 * bordered by a row/column with 1 at every simplex of c meeting a vertex of
 * h, diagonal 1. Predicted value (1 - chi(h)) psi(c).
 * Throws std::invalid_argument if h is not a full subcomplex of c.
 */
TwinResult psi_attach_cell(const SimplicialComplex& c, const SimplicialComplex& h);

/**
 * Removes the facet x: deletes its row/column of 1+A'. Predicted value
 * (1 - chi(S(x))) psi(c) with S(x) the unit sphere in G1.
 * Throws std::invalid_argument if x is not a facet of c.
 */
TwinResult psi_remove_cell(const SimplicialComplex& c, const Simplex& x);

}  // namespace gtop
