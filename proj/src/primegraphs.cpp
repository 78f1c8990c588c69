#include "gtop/primegraphs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gtop/refinement.hpp"

namespace gtop {

std::vector<std::int64_t> smallest_prime_factors(std::int64_t n) {
  std::vector<std::int64_t> spf(static_cast<std::size_t>(std::max<std::int64_t>(n, 1)) + 1, 0);
  for (std::int64_t i = 2; i <= n; ++i) {
    if (spf[i] != 0) continue;
    for (std::int64_t j = i; j <= n; j += i)
      if (spf[j] == 0) spf[j] = i;
  }
  return spf;
}

std::vector<int> moebius_sieve(std::int64_t n) {
  const auto size = static_cast<std::size_t>(std::max<std::int64_t>(n, 1)) + 1;
  std::vector<int> mu(size, 0);
  std::vector<std::int64_t> primes;
  std::vector<bool> composite(size, false);
  mu[1] = 1;
  for (std::int64_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (std::int64_t p : primes) {
      if (i * p > n) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  return mu;
}

std::vector<std::int64_t> prime_set(std::int64_t k, const std::vector<std::int64_t>& spf) {
  std::vector<std::int64_t> ps;
  while (k > 1) {
    const std::int64_t p = spf[k];
    ps.push_back(p);
    k /= p;
  }
  return ps;
}

std::vector<std::int64_t> squarefree_upto(std::int64_t n) {
  const auto spf = smallest_prime_factors(n);
  std::vector<std::int64_t> out;
  for (std::int64_t k = 2; k <= n; ++k) {
    const auto ps = prime_set(k, spf);
    if (std::adjacent_find(ps.begin(), ps.end()) == ps.end()) out.push_back(k);
  }
  return out;
}

PrimePanel build_panel(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("prime panel needs n >= 2");
  if (n > kPanelCap)
    throw std::length_error("prime panel limited to n <= " + std::to_string(kPanelCap));
  PrimePanel p;
  p.n = n;
  p.squarefree = squarefree_upto(n);
  const auto spf = smallest_prime_factors(n);

  std::vector<Vertex> labels(p.squarefree.begin(), p.squarefree.end());
  std::vector<Edge> div, common;
  for (std::size_t i = 0; i < p.squarefree.size(); ++i)
    for (std::size_t j = i + 1; j < p.squarefree.size(); ++j) {
      const auto a = p.squarefree[i], b = p.squarefree[j];
      if (b % a == 0) div.emplace_back(a, b);
      if (std::gcd(a, b) > 1) common.emplace_back(a, b);
    }
  p.g_n = Graph(labels, div);
  p.h_n = Graph(labels, common);

  std::vector<Simplex> simplices;
  simplices.reserve(p.squarefree.size());
  for (auto k : p.squarefree) {
    const auto ps = prime_set(k, spf);
    simplices.push_back(Simplex(std::vector<Vertex>(ps.begin(), ps.end())));
  }
  p.complex = SimplicialComplex::from_simplices(std::move(simplices));
  return p;
}

namespace {

std::int64_t product_of(const Simplex& s) {
  std::int64_t k = 1;
  for (Vertex v : s.vertices()) k *= v;
  return k;
}

// Relabels a simplex graph by the products of its simplices.
Graph by_products(const SimplexGraph& sg) {
  std::vector<Vertex> labels;
  for (const auto& s : sg.simplex_of_vertex) labels.push_back(static_cast<Vertex>(product_of(s)));
  std::vector<Edge> es;
  for (const auto& [a, b] : sg.graph.edges()) {
    const Vertex u = labels[static_cast<std::size_t>(a)], w = labels[static_cast<std::size_t>(b)];
    es.emplace_back(std::min(u, w), std::max(u, w));
  }
  std::sort(labels.begin(), labels.end());
  return Graph(std::move(labels), es);
}

}  // namespace

bool PrimePanel::refinement_invariants_hold() const {
  if (!validate(complex)) return false;
  return by_products(barycentric(complex)) == g_n && by_products(connection(complex)) == h_n &&
         is_subgraph(g_n, h_n);
}

GreenReport prime_green_check(const PrimePanel& p) {
  if (p.squarefree.size() > kPrimeMatrixCap)
    throw std::length_error("prime Green check limited to " + std::to_string(kPrimeMatrixCap) +
                            " vertices");
  const auto spf = smallest_prime_factors(p.n);
  std::vector<int> dims;
  dims.reserve(p.squarefree.size());
  for (auto k : p.squarefree) dims.push_back(static_cast<int>(prime_set(k, spf).size()) - 1);
  return green_report_for(p.g_n, p.h_n, dims);
}

MertensResult mertens_euler(const PrimePanel& p) {
  MertensResult r;
  r.euler = euler_characteristic(p.complex);
  const auto mu = moebius_sieve(p.n);
  r.one_minus_m = 1 - std::accumulate(mu.begin() + 1, mu.end(), std::int64_t{0});
  return r;
}

MertensResult mertens_euler(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("Mertens check needs n >= 1");
  MertensResult r;
  // omega of the simplex of k is (-1)^(#primes - 1); counted from the spf table.
  const auto spf = smallest_prime_factors(n);
  for (std::int64_t k = 2; k <= n; ++k) {
    const auto ps = prime_set(k, spf);
    if (std::adjacent_find(ps.begin(), ps.end()) != ps.end()) continue;
    r.euler += (ps.size() % 2 == 1) ? 1 : -1;
  }
  const auto mu = moebius_sieve(n);
  r.one_minus_m = 1 - std::accumulate(mu.begin() + 1, mu.end(), std::int64_t{0});
  return r;
}

int prime_signature(std::int64_t n) {
  const auto mu = moebius_sieve(n);
  int sign = 1;
  for (std::int64_t k = 2; k <= n; ++k)
    if (mu[k] == 1) sign = -sign;  // -mu(k) = -1 exactly when mu(k) = 1
  return sign;
}

}  // namespace gtop
