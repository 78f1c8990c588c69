#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gtop/complex.hpp"
#include "gtop/graph.hpp"

namespace gtop {

/// Zykov join: disjoint union plus every cross edge. Vertices of g become
/// 0..|g|-1 and vertices of h follow, both in label order.
Graph zykov_join(const Graph& g, const Graph& h);

/// Join of a sequence, left to right. Empty sequence gives the empty graph.
Graph zykov_join_all(const std::vector<Graph>& gs);

/// Ring product: (a,b) ~ (c,d) iff a~c in g or b~d in h. Vertex (i,j), by
/// index, is labeled i*|h| + j.
Graph zykov_product(const Graph& g, const Graph& h);

/// f(x) = 1 + sum_k v_k x^{k+1}; coefficients[0] == 1.
struct EulerPolynomial {
  std::vector<std::int64_t> coefficients{1};

  [[nodiscard]] int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  [[nodiscard]] std::int64_t at(std::int64_t x) const;
  [[nodiscard]] std::string to_string() const;
  friend EulerPolynomial operator*(const EulerPolynomial& a, const EulerPolynomial& b);
  friend bool operator==(const EulerPolynomial&, const EulerPolynomial&) = default;
};

EulerPolynomial euler_polynomial(const SimplicialComplex& c);
/// Of the Whitney complex, without building it.
EulerPolynomial euler_polynomial(const Graph& g);

/// 1 - chi(c) = f_c(-1).
std::int64_t poincare_hopf_i(const SimplicialComplex& c);
std::int64_t poincare_hopf_i(const Graph& g);

/// Fermi characteristic of the Whitney complex.
int fermi_characteristic(const Graph& g);

/**
 * Join factors from the connected components of the complement. Each factor
 * is the induced subgraph (original labels) on one component, so its own
 * complement is connected. Ordered by order, then canonical key.
 */
std::vector<Graph> additive_prime_decompose(const Graph& g);

/// g*(h+k) is isomorphic to g*h + g*k. Throws IsomorphismOverflow above 40 vertices.
bool distributivity_check(const Graph& g, const Graph& h, const Graph& k);

enum class Submonoid { EvenEuler, OddEuler, Mixed };

struct PsiJoinReport {
  Submonoid submonoid = Submonoid::Mixed;
  std::int64_t chi_g = 0, chi_h = 0;
  int psi_g = 1, psi_h = 1, psi_join = 1;
  /// psi(g)psi(h) for even chi, -1 for odd chi, absent when mixed.
  std::optional<int> expected;
  [[nodiscard]] bool covered() const { return expected.has_value(); }
  [[nodiscard]] bool holds() const { return !expected || *expected == psi_join; }
};

PsiJoinReport psi_join_submonoid_check(const Graph& g, const Graph& h);

std::string to_string(Submonoid s);

}  // namespace gtop
