#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gtop/complex.hpp"
#include "gtop/int_matrix.hpp"

namespace gtop {

/**
 * Oriented chain complex of a simplicial complex.
 *
 * `cells[k]` lists the k-simplices in lex order. `boundary[k]` is the
 * matrix of d_k from k-chains to (k-1)-chains (v_{k-1} x v_k); boundary[0]
 * is the 0 x v_0 zero map. Orientation follows sorted vertex order, so the
 * face omitting position j enters with sign (-1)^j.
 */
struct ChainComplexData {
  std::vector<std::vector<Simplex>> cells;
  std::vector<IntMatrix> boundary;

  [[nodiscard]] int dimension() const { return static_cast<int>(cells.size()) - 1; }
  /// d_{k-1} d_k == 0 for every k.
  [[nodiscard]] bool is_chain_complex() const;
};

ChainComplexData chain_complex(const SimplicialComplex& c);

using BettiVector = std::vector<std::int64_t>;

/// b_k = v_k - rank d_k - rank d_{k+1}, exact integer ranks.
BettiVector betti(const SimplicialComplex& c);
BettiVector betti(const ChainComplexData& cc);

/// Betti vector of the Whitney complex of g.
BettiVector betti(const Graph& g);

/// L_k = d_k^T d_k + d_{k+1} d_{k+1}^T. Throws std::out_of_range unless 0 <= k <= dim.
IntMatrix form_laplacian(const SimplicialComplex& c, int k);

/**
 * Top-degree form Laplacian. When the complex is 0-dimensional the boundary
 * is augmented by the counit (a row of ones), so a set of n points gives
 * the all-ones n x n matrix; this is the convention under which volume
 * spectra of joins are pairwise sums.
 */
IntMatrix volume_laplacian(const SimplicialComplex& c);

/// Ascending eigenvalues of `volume_laplacian`. Empty complex gives {}.
std::vector<double> volume_laplacian_eigs(const SimplicialComplex& c);

}  // namespace gtop
