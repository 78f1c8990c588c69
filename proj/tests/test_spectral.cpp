#include <Eigen/Dense>
#include <random>

#include "doctest.h"
#include "gtop/arithmetic.hpp"
#include "gtop/homology.hpp"
#include "gtop/named_graphs.hpp"
#include "gtop/spectral.hpp"

using namespace gtop;

namespace {

std::vector<double> eigen_oracle(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < g.order(); ++i) {
    l(i, i) = static_cast<double>(g.degree_at(i));
    for (auto j : g.neighbor_indices(i)) l(i, j) = -1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(l);
  const auto& v = es.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

}  // namespace

TEST_CASE("jacobi agrees with an independent eigensolver") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 40; ++t) {
    const auto g = named::erdos_renyi(3 + t % 14, 0.4, rng);
    const auto ours = vertex_laplacian_spectrum(g).eigenvalues;
    const auto ref = eigen_oracle(g);
    REQUIRE(ours.size() == ref.size());
    for (std::size_t i = 0; i < ours.size(); ++i) CHECK(std::abs(ours[i] - ref[i]) < 1e-9);
  }
}

TEST_CASE("spectrum basics") {
  const auto p5 = vertex_laplacian_spectrum(named::points(5));
  CHECK(p5.multiplicity_of(0.0) == 5);
  CHECK(p5.lambda2 == 0.0);
  CHECK(vertex_laplacian_spectrum(Graph{}).eigenvalues.empty());

  const auto oct = vertex_laplacian_spectrum(zykov_product(named::complete(3), named::points(2)));
  CHECK(oct.max() == doctest::Approx(6.0));
  const auto cell16 = vertex_laplacian_spectrum(named::sixteen_cell());
  CHECK(cell16.max() == doctest::Approx(8.0));
  CHECK(cell16.multiplicity_of(8.0) >= 3);

  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    const auto g = named::erdos_renyi(8, 0.5, rng);
    const auto s = vertex_laplacian_spectrum(g);
    CHECK(s.zero_multiplicity() == g.components().size());
    CHECK(s.max() <= static_cast<double>(g.order()) + kEigenTolerance);
  }
}

TEST_CASE("join spectral checks") {
  const auto k1k1 = join_eigen_checks(named::complete(1), named::complete(1));
  CHECK(k1k1.order_sum_present);
  CHECK(k1k1.join.eigenvalues.size() == 2);

  const auto s4p2 = join_eigen_checks(named::star(4), named::points(2));
  CHECK(s4p2.join.lambda2 == doctest::Approx(3.0));
  const std::vector<double> worked{0, 3, 3, 3, 5, 7, 7};
  for (std::size_t i = 0; i < worked.size(); ++i)
    CHECK(s4p2.join.eigenvalues[i] == doctest::Approx(worked[i]));

  // K2 + K3 = K5 has lambda2 = 5; min(2,3) + min(2,3) would say 4.
  const auto k2k3 = join_eigen_checks(named::complete(2), named::complete(3));
  CHECK(k2k3.lambda2_applicable);
  CHECK(k2k3.sharp_holds);
  CHECK_FALSE(k2k3.stated_holds);

  const auto k3l2 = complete_product_check(named::linear(2), 3);
  CHECK(k3l2.holds);
  CHECK(k3l2.expected == 9.0);
  CHECK(k3l2.multiplicity == 5);

  CHECK(repeated_join_check(named::cycle(4), 3).holds);
  CHECK_THROWS_AS(join_eigen_checks(Graph{}, named::complete(2)), std::invalid_argument);
}

TEST_CASE("sharp lambda2 join formula on random connected pairs") {
  std::mt19937_64 rng(43);
  int tested = 0;
  while (tested < 30) {
    const auto g = named::erdos_renyi(2 + rng() % 8, 0.6, rng);
    const auto h = named::erdos_renyi(2 + rng() % 8, 0.6, rng);
    if (!g.connected() || !h.connected()) continue;
    const auto r = join_eigen_checks(g, h);
    CHECK(r.order_sum_present);
    CHECK(r.sharp_holds);
    ++tested;
  }
}

TEST_CASE("volume spectra of joins are pairwise sums") {
  const auto check = [](const Graph& g, const Graph& h) {
    const auto a = volume_laplacian_eigs(whitney_complex(g));
    const auto b = volume_laplacian_eigs(whitney_complex(h));
    std::vector<double> sums;
    for (double x : a)
      for (double y : b) sums.push_back(x + y);
    std::sort(sums.begin(), sums.end());
    const auto j = volume_laplacian_eigs(whitney_complex(zykov_join(g, h)));
    REQUIRE(j.size() == sums.size());
    for (std::size_t i = 0; i < j.size(); ++i) CHECK(std::abs(j[i] - sums[i]) < 1e-6);
  };
  check(named::complete(2), named::complete(2));
  check(named::cycle(4), named::cycle(4));
  check(named::cycle(4), named::points(2));
}
