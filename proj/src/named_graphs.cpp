#include "gtop/named_graphs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gtop/arithmetic.hpp"

namespace gtop::named {

namespace {

std::vector<Vertex> iota(std::size_t n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

Graph molecule(std::size_t atoms, std::initializer_list<Edge> bonds) {
  return Graph(iota(atoms), bonds);
}

}  // namespace

Graph complete(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(iota(n), es);
}

Graph points(std::size_t n) { return Graph(iota(n), std::span<const Edge>{}); }

Graph linear(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i) es.emplace_back(i, i + 1);
  return Graph(iota(n + 1), es);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  es.emplace_back(0, n - 1);
  return Graph(iota(n), es);
}

Graph star(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 1; i <= n; ++i) es.emplace_back(0, i);
  return Graph(iota(n + 1), es);
}

Graph octahedron() { return zykov_join(zykov_join(points(2), points(2)), points(2)); }

Graph sixteen_cell() { return zykov_product(complete(4), points(2)); }

Graph windmill() {
  return Graph(iota(5), {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}});
}

Graph bowtie() { return Graph(iota(5), {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

Graph utility() { return zykov_join(points(3), points(3)); }

Graph projective_plane() {
  // Six-vertex projective plane with nine edges subdivided until it is flag.
  static constexpr int kFacets[28][3] = {
      {1, 5, 6},   {1, 5, 9},   {1, 6, 7},   {1, 7, 8},   {1, 8, 9},   {2, 4, 11},  {2, 4, 14},
      {2, 6, 7},   {2, 6, 14},  {2, 7, 10},  {2, 10, 11}, {3, 5, 10},  {3, 5, 12},  {3, 7, 8},
      {3, 7, 10},  {3, 8, 13},  {3, 12, 13}, {4, 8, 9},   {4, 8, 13},  {4, 9, 15},  {4, 11, 15},
      {4, 12, 13}, {4, 12, 14}, {5, 6, 12},  {5, 9, 15},  {5, 10, 11}, {5, 11, 15}, {6, 12, 14}};
  std::vector<Edge> es;
  for (const auto& f : kFacets) {
    es.emplace_back(f[0], f[1]);
    es.emplace_back(f[0], f[2]);
    es.emplace_back(f[1], f[2]);
  }
  return Graph::from_edges(es);
}

// Heavy atoms first, then hydrogens. Ring numbering follows the usual
// purine / pyrimidine convention.
Graph adenine() {
  // N1 C2 N3 C4 C5 C6 N7 C8 N9 N6 | H2 H8 H9 H61 H62
  return molecule(15, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},  // pyrimidine ring
                       {4, 6}, {6, 7}, {7, 8}, {8, 3},                  // imidazole ring
                       {5, 9},                                          // C6-N6
                       {1, 10}, {7, 11}, {8, 12}, {9, 13}, {9, 14}});
}

Graph guanine() {
  // N1 C2 N3 C4 C5 C6 N7 C8 N9 O6 N2 | H1 H8 H9 H21 H22
  return molecule(16, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                       {4, 6}, {6, 7}, {7, 8}, {8, 3},
                       {5, 9}, {1, 10},
                       {0, 11}, {7, 12}, {8, 13}, {10, 14}, {10, 15}});
}

Graph cytosine() {
  // N1 C2 N3 C4 C5 C6 O2 N4 | H1 H5 H6 H41 H42
  return molecule(13, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                       {1, 6}, {3, 7},
                       {0, 8}, {4, 9}, {5, 10}, {7, 11}, {7, 12}});
}

Graph thymine() {
  // N1 C2 N3 C4 C5 C6 O2 O4 C7 | H1 H3 H6 H71 H72 H73
  return molecule(15, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                       {1, 6}, {3, 7}, {4, 8},
                       {0, 9}, {2, 10}, {5, 11}, {8, 12}, {8, 13}, {8, 14}});
}

bool coin(std::mt19937_64& rng, double p) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

Graph erdos_renyi(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng, p)) es.emplace_back(i, j);
  return Graph(iota(n), es);
}

SimplicialComplex random_complex(std::size_t n, std::size_t facets, std::size_t max_size,
                                 std::mt19937_64& rng) {
  if (n == 0 || max_size == 0) throw std::invalid_argument("random complex needs vertices");
  std::vector<Simplex> gens;
  for (std::size_t f = 0; f < facets; ++f) {
    const std::size_t k = 1 + static_cast<std::size_t>(rng() % std::min(max_size, n));
    std::vector<Vertex> pool = iota(n);
    // Partial Fisher-Yates with an explicit draw so the result is portable.
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    gens.emplace_back(std::move(pool));
  }
  return SimplicialComplex::generated_by(gens);
}

}  // namespace gtop::named
