#include "gtop/arithmetic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gtop/isomorphism.hpp"

namespace gtop {

Graph zykov_join(const Graph& g, const Graph& h) {
  const std::size_t n = g.order(), m = h.order();
  std::vector<Vertex> vs(n + m);
  std::iota(vs.begin(), vs.end(), 0);
  std::vector<Edge> es;
  es.reserve(g.size() + h.size() + n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : g.neighbor_indices(i))
      if (i < j) es.emplace_back(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (auto j : h.neighbor_indices(i))
      if (i < j) es.emplace_back(n + i, n + j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) es.emplace_back(i, n + j);
  return Graph(std::move(vs), es);
}

Graph zykov_join_all(const std::vector<Graph>& gs) {
  Graph out;
  for (const auto& g : gs) out = zykov_join(out, g);
  return out;
}

Graph zykov_product(const Graph& g, const Graph& h) {
  const std::size_t n = g.order(), m = h.order();
  std::vector<Vertex> vs(n * m);
  std::iota(vs.begin(), vs.end(), 0);
  std::vector<Edge> es;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < m; ++d) {
          const std::size_t u = a * m + b, w = c * m + d;
          if (u >= w) continue;
          if (g.adjacent_indices(a, c) || h.adjacent_indices(b, d)) es.emplace_back(u, w);
        }
  return Graph(std::move(vs), es);
}

std::int64_t EulerPolynomial::at(std::int64_t x) const {
  std::int64_t acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string EulerPolynomial::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (k) os << " + ";
    os << coefficients[k];
    if (k == 1) os << "x";
    if (k > 1) os << "x^" << k;
  }
  return os.str();
}

EulerPolynomial operator*(const EulerPolynomial& a, const EulerPolynomial& b) {
  EulerPolynomial p;
  p.coefficients.assign(a.coefficients.size() + b.coefficients.size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients.size(); ++j)
      p.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
  return p;
}

namespace {

EulerPolynomial from_counts(const FVector& f) {
  EulerPolynomial p;
  p.coefficients.insert(p.coefficients.end(), f.counts.begin(), f.counts.end());
  return p;
}

}  // namespace

EulerPolynomial euler_polynomial(const SimplicialComplex& c) { return from_counts(f_vector(c)); }
EulerPolynomial euler_polynomial(const Graph& g) { return from_counts(clique_counts(g)); }

std::int64_t poincare_hopf_i(const SimplicialComplex& c) { return euler_polynomial(c).at(-1); }
std::int64_t poincare_hopf_i(const Graph& g) { return euler_polynomial(g).at(-1); }

int fermi_characteristic(const Graph& g) { return clique_counts(g).fermi(); }

std::vector<Graph> additive_prime_decompose(const Graph& g) {
  std::vector<Graph> factors;
  if (g.empty()) return factors;
  for (const auto& comp : g.complement().components()) factors.push_back(g.induced(comp));
  std::vector<std::pair<std::string, std::size_t>> keyed;
  for (std::size_t i = 0; i < factors.size(); ++i) keyed.emplace_back(canonical_key(factors[i]), i);
  std::vector<std::size_t> order(factors.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (factors[a].order() != factors[b].order()) return factors[a].order() < factors[b].order();
    return keyed[a].first < keyed[b].first;
  });
  std::vector<Graph> sorted;
  sorted.reserve(factors.size());
  for (auto i : order) sorted.push_back(std::move(factors[i]));
  return sorted;
}

bool distributivity_check(const Graph& g, const Graph& h, const Graph& k) {
  const Graph lhs = zykov_product(g, zykov_join(h, k));
  const Graph rhs = zykov_join(zykov_product(g, h), zykov_product(g, k));
  return are_isomorphic(lhs, rhs);
}

PsiJoinReport psi_join_submonoid_check(const Graph& g, const Graph& h) {
  PsiJoinReport r;
  r.chi_g = euler_characteristic(g);
  r.chi_h = euler_characteristic(h);
  r.psi_g = fermi_characteristic(g);
  r.psi_h = fermi_characteristic(h);
  r.psi_join = fermi_characteristic(zykov_join(g, h));
  const bool even_g = r.chi_g % 2 == 0, even_h = r.chi_h % 2 == 0;
  if (even_g && even_h) {
    r.submonoid = Submonoid::EvenEuler;
    r.expected = r.psi_g * r.psi_h;
  } else if (!even_g && !even_h) {
    r.submonoid = Submonoid::OddEuler;
    r.expected = -1;
  }
  return r;
}

std::string to_string(Submonoid s) {
  switch (s) {
    case Submonoid::EvenEuler: return "even-euler";
    case Submonoid::OddEuler: return "odd-euler";
    case Submonoid::Mixed: return "not in a covered submonoid";
  }
  return "?";
}

}  // namespace gtop
