#pragma once

#include <cstddef>
#include <vector>

#include "gtop/graph.hpp"
#include "gtop/int_matrix.hpp"

namespace gtop {

inline constexpr double kEigenTolerance = 1e-6;
inline constexpr double kZeroTolerance = 1e-9;
inline constexpr std::size_t kSpectralVertexCap = 200;

/// Row-major dense symmetric matrix of doubles.
struct DenseSymmetric {
  std::size_t n = 0;
  std::vector<double> a;
  double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

/// Cyclic Jacobi rotations until the off-diagonal norm drops below 1e-12 of the
/// Frobenius norm. Ascending.
std::vector<double> symmetric_eigenvalues(DenseSymmetric m);
std::vector<double> symmetric_eigenvalues(const IntMatrix& m);

/// D - A in vertex order.
IntMatrix vertex_laplacian(const Graph& g);

struct SpectrumReport {
  std::vector<double> eigenvalues;  // ascending
  double lambda2 = 0.0;             // smallest eigenvalue above kZeroTolerance, 0 if none

  [[nodiscard]] std::size_t multiplicity_of(double lambda, double tol = kEigenTolerance) const;
  [[nodiscard]] bool contains(double lambda, double tol = kEigenTolerance) const {
    return multiplicity_of(lambda, tol) > 0;
  }
  [[nodiscard]] double max() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }
  /// Multiplicity of 0, which is the number of connected components.
  [[nodiscard]] std::size_t zero_multiplicity() const { return multiplicity_of(0.0, kZeroTolerance * 1e3); }
};

/// Throws std::length_error above kSpectralVertexCap vertices.
SpectrumReport vertex_laplacian_spectrum(const Graph& g);

/// Algebraic connectivity of g, 0 for disconnected or single-vertex graphs.
double algebraic_connectivity(const Graph& g);

struct JoinEigenReport {
  std::size_t order_g = 0, order_h = 0;
  double lambda2_g = 0.0, lambda2_h = 0.0;
  SpectrumReport join;
  /// |V(G)| + |V(H)| is an eigenvalue of L(G+H).
  bool order_sum_present = false;
  /// Both factors connected (and of order > 1), so the lambda2 comparison applies.
  bool lambda2_applicable = false;
  /// min(lambda2(G) + |V(H)|, lambda2(H) + |V(G)|), the sharp value.
  double lambda2_sharp = 0.0;
  /// min(|V(G)|, |V(H)|) + min(lambda2(G), lambda2(H)), as commonly stated.
  double lambda2_stated = 0.0;
  bool sharp_holds = false;
  bool stated_holds = false;
};

/// Both factors must be nonempty (std::invalid_argument).
JoinEigenReport join_eigen_checks(const Graph& g, const Graph& h);

struct EigenMultiplicityReport {
  double eigenvalue = 0.0;
  std::size_t multiplicity = 0;
  std::size_t required = 0;
  bool holds = false;
};

/// n G = G + ... + G (n copies): eigenvalue n|V(G)| with multiplicity >= n-1.
EigenMultiplicityReport repeated_join_check(const Graph& g, std::size_t n);

struct MaxEigenReport {
  double maximum = 0.0;
  double expected = 0.0;
  std::size_t multiplicity = 0;
  bool holds = false;
};

/// Largest eigenvalue of K_n * G equals n|V(G)| for n > 1.
MaxEigenReport complete_product_check(const Graph& g, std::size_t n);

}  // namespace gtop
