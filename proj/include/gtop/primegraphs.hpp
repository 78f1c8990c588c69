#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gtop/complex.hpp"
#include "gtop/fredholm.hpp"
#include "gtop/graph.hpp"

namespace gtop {

inline constexpr std::int64_t kPanelCap = 500;
inline constexpr std::size_t kPrimeMatrixCap = 300;

/// Smallest prime factor of every k <= n (spf[0] = spf[1] = 0).
std::vector<std::int64_t> smallest_prime_factors(std::int64_t n);
/// mu(k) for k <= n by a linear sieve (mu[0] = 0).
std::vector<int> moebius_sieve(std::int64_t n);
/// Ascending square-free integers in [2, n].
std::vector<std::int64_t> squarefree_upto(std::int64_t n);
/// Sorted prime factors of a square-free k, read off the spf table.
std::vector<std::int64_t> prime_set(std::int64_t k, const std::vector<std::int64_t>& spf);

/**
 * Square-free integers in [2, n] with two graphs on them: G_n joins a, b
 * when one divides the other, H_n when gcd(a, b) > 1. Vertex labels are the
 * integers themselves. `complex` has one simplex per square-free k, the set
 * of its primes.
 */
struct PrimePanel {
  std::int64_t n = 0;
  std::vector<std::int64_t> squarefree;
  Graph g_n;
  Graph h_n;
  SimplicialComplex complex;

  /// barycentric(complex) and connection(complex) equal g_n and h_n once
  /// each simplex is relabeled by the product of its primes.
  [[nodiscard]] bool refinement_invariants_hold() const;
};

/// Throws std::invalid_argument for n < 2 and std::length_error above kPanelCap.
PrimePanel build_panel(std::int64_t n);

/// Rows are labeled by the integer; `dim` is (number of primes) - 1. Throws
/// std::length_error when the panel has more than kPrimeMatrixCap vertices.
GreenReport prime_green_check(const PrimePanel& p);

struct MertensResult {
  std::int64_t euler = 0;        // chi(complex)
  std::int64_t one_minus_m = 0;  // 1 - M(n)
  [[nodiscard]] bool holds() const { return euler == one_minus_m; }
};

/// chi from the panel's complex, M(n) from an independent sieve.
MertensResult mertens_euler(const PrimePanel& p);
/// Streaming form: chi summed over square-free k without building anything.
MertensResult mertens_euler(std::int64_t n);

/// det(1 + A(H_n)) predicted as prod over square-free k of -mu(k).
int prime_signature(std::int64_t n);

}  // namespace gtop
