#include "gtop/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gtop/arithmetic.hpp"
#include "gtop/named_graphs.hpp"

namespace gtop {

std::vector<double> symmetric_eigenvalues(DenseSymmetric m) {
  const std::size_t n = m.n;
  if (n == 0) return {};
  double frob = 0.0;
  for (double v : m.a) frob += v * v;
  const double target = 1e-12 * std::max(std::sqrt(frob), 1.0);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * m(i, j) * m(i, j);
    if (std::sqrt(off) < target) break;

    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (std::abs(apq) < 1e-300) continue;
        // Rutishauser's stable rotation angle.
        const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = m(k, p), akq = m(k, q);
          m(k, p) = c * akp - s * akq;
          m(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = m(p, k), aqk = m(q, k);
          m(p, k) = c * apk - s * aqk;
          m(q, k) = s * apk + c * aqk;
        }
        m(p, q) = 0.0;
        m(q, p) = 0.0;
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = m(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::vector<double> symmetric_eigenvalues(const IntMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("eigenvalues need a symmetric matrix");
  DenseSymmetric d{m.rows(), std::vector<double>(m.rows() * m.rows())};
  for (std::size_t i = 0; i < d.n; ++i)
    for (std::size_t j = 0; j < d.n; ++j) d(i, j) = m(i, j).convert_to<double>();
  return symmetric_eigenvalues(std::move(d));
}

IntMatrix vertex_laplacian(const Graph& g) {
  IntMatrix l(g.order(), g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    l(i, i) = static_cast<long>(g.degree_at(i));
    for (auto j : g.neighbor_indices(i)) l(i, j) = -1;
  }
  return l;
}

std::size_t SpectrumReport::multiplicity_of(double lambda, double tol) const {
  return static_cast<std::size_t>(std::count_if(eigenvalues.begin(), eigenvalues.end(),
                                                [&](double e) { return std::abs(e - lambda) <= tol; }));
}

SpectrumReport vertex_laplacian_spectrum(const Graph& g) {
  if (g.order() > kSpectralVertexCap)
    throw std::length_error("spectrum limited to " + std::to_string(kSpectralVertexCap) +
                            " vertices, graph has " + std::to_string(g.order()));
  SpectrumReport r;
  DenseSymmetric d{g.order(), std::vector<double>(g.order() * g.order(), 0.0)};
  for (std::size_t i = 0; i < g.order(); ++i) {
    d(i, i) = static_cast<double>(g.degree_at(i));
    for (auto j : g.neighbor_indices(i)) d(i, j) = -1.0;
  }
  r.eigenvalues = symmetric_eigenvalues(std::move(d));
  for (double e : r.eigenvalues)
    if (e > kZeroTolerance) {
      r.lambda2 = e;
      break;
    }
  return r;
}

double algebraic_connectivity(const Graph& g) {
  if (g.order() < 2 || !g.connected()) return 0.0;
  return vertex_laplacian_spectrum(g).lambda2;
}

JoinEigenReport join_eigen_checks(const Graph& g, const Graph& h) {
  if (g.empty() || h.empty()) throw std::invalid_argument("join spectral checks need nonempty factors");
  JoinEigenReport r;
  r.order_g = g.order();
  r.order_h = h.order();
  r.join = vertex_laplacian_spectrum(zykov_join(g, h));
  r.order_sum_present = r.join.contains(static_cast<double>(r.order_g + r.order_h));

  r.lambda2_applicable = g.order() > 1 && h.order() > 1 && g.connected() && h.connected();
  r.lambda2_g = algebraic_connectivity(g);
  r.lambda2_h = algebraic_connectivity(h);
  const auto ng = static_cast<double>(r.order_g), nh = static_cast<double>(r.order_h);
  r.lambda2_sharp = std::min(r.lambda2_g + nh, r.lambda2_h + ng);
  r.lambda2_stated = std::min(ng, nh) + std::min(r.lambda2_g, r.lambda2_h);
  r.sharp_holds = std::abs(r.join.lambda2 - r.lambda2_sharp) <= kEigenTolerance;
  r.stated_holds = std::abs(r.join.lambda2 - r.lambda2_stated) <= kEigenTolerance;
  return r;
}

EigenMultiplicityReport repeated_join_check(const Graph& g, std::size_t n) {
  if (g.empty() || n == 0) throw std::invalid_argument("repeated join needs n >= 1 and a nonempty graph");
  Graph sum;
  for (std::size_t i = 0; i < n; ++i) sum = zykov_join(sum, g);
  EigenMultiplicityReport r;
  r.eigenvalue = static_cast<double>(n * g.order());
  r.required = n - 1;
  r.multiplicity = vertex_laplacian_spectrum(sum).multiplicity_of(r.eigenvalue);
  r.holds = r.multiplicity >= r.required;
  return r;
}

MaxEigenReport complete_product_check(const Graph& g, std::size_t n) {
  if (g.empty() || n < 2) throw std::invalid_argument("K_n * G check needs n > 1 and a nonempty graph");
  const auto spec = vertex_laplacian_spectrum(zykov_product(named::complete(n), g));
  MaxEigenReport r;
  r.maximum = spec.max();
  r.expected = static_cast<double>(n * g.order());
  r.multiplicity = spec.multiplicity_of(r.expected);
  r.holds = std::abs(r.maximum - r.expected) <= kEigenTolerance;
  return r;
}

}  // namespace gtop
