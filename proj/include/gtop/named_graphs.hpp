#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gtop/complex.hpp"
#include "gtop/graph.hpp"

namespace gtop::named {

/// K_n on 0..n-1.
Graph complete(std::size_t n);
/// P_n: n isolated points.
Graph points(std::size_t n);
/// L_n: linear path with n edges (n+1 vertices).
Graph linear(std::size_t n);
/// C_n, n >= 3.
Graph cycle(std::size_t n);
/// S_n: one center (label 0) joined to n leaves.
Graph star(std::size_t n);
/// P2 + P2 + P2.
Graph octahedron();
/// K4 * P2.
Graph sixteen_cell();
/// Three triangles sharing the edge {0,1}.
Graph windmill();
/// Two triangles sharing vertex 0.
Graph bowtie();
/// K_{3,3} = P3 + P3.
Graph utility();
/// Flag triangulation of the projective plane with f-vector (15,42,28).
Graph projective_plane();

/// Molecular graphs including hydrogens; every one is 1-dimensional.
Graph adenine();
Graph guanine();
Graph cytosine();
Graph thymine();

/// Bernoulli(p) from the top 53 bits of a 64-bit Mersenne twister draw, so
/// a seed gives the same graph on every platform.
bool coin(std::mt19937_64& rng, double p);

/// G(n, p) on 0..n-1, pairs visited in lex order.
Graph erdos_renyi(std::size_t n, double p, std::mt19937_64& rng);

/// Closure of `facets` random subsets of {0..n-1}, each of size 1..max_size.
SimplicialComplex random_complex(std::size_t n, std::size_t facets, std::size_t max_size,
                                 std::mt19937_64& rng);

}  // namespace gtop::named
