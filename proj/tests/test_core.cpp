#include <random>

#include "doctest.h"
#include "gtop/complex.hpp"
#include "gtop/fredholm.hpp"
#include "gtop/int_matrix.hpp"
#include "gtop/refinement.hpp"
#include "oracles.hpp"

using namespace gtop;

namespace {

Graph triangle() { return Graph({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}); }
Graph cycle4() { return Graph({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

SimplicialComplex k2() { return SimplicialComplex::generated_by({Simplex{1, 2}}); }

}  // namespace

TEST_CASE("simplex canonical form") {
  Simplex s{3, 1, 2};
  CHECK(s.to_string() == "{1,2,3}");
  CHECK(s.dim() == 2);
  CHECK(s.faces().size() == 7);
  CHECK_THROWS_AS(Simplex({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Simplex(std::vector<Vertex>{}), std::invalid_argument);
  CHECK_THROWS_AS(Simplex({-1}), std::invalid_argument);
  CHECK(Simplex{1} < Simplex{0, 1});
}

TEST_CASE("whitney complex and scalar invariants") {
  CHECK(whitney_complex(Graph{}).empty());
  const auto k3 = whitney_complex(triangle());
  CHECK(k3.size() == 7);
  CHECK(f_vector(k3).counts == std::vector<std::int64_t>{3, 3, 1});
  CHECK(euler_characteristic(k3) == 1);
  CHECK(fermi_characteristic(k3) == -1);
  CHECK(whitney_complex(cycle4()).size() == 8);
  CHECK(f_vector(SimplicialComplex{}).counts.empty());
  CHECK(euler_characteristic(SimplicialComplex{}) == 0);
  CHECK(fermi_characteristic(SimplicialComplex{}) == 1);
}

TEST_CASE("validate reports missing faces") {
  CHECK(validate(k2()).valid);
  const auto bad = SimplicialComplex::from_simplices({Simplex{1, 2}});
  const auto r = validate(bad);
  CHECK_FALSE(r.valid);
  CHECK(r.missing_faces.size() == 2);
}

TEST_CASE("inductive dimension") {
  CHECK(inductive_dimension(Graph({0}, {})) == 0);
  CHECK(inductive_dimension(triangle()) == 2);
  CHECK(inductive_dimension(Graph({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}})) == 1);
  CHECK(inductive_dimension(Graph{}) == -1);
  CHECK(inductive_dimension(Graph({0, 1, 2}, {})) == 0);
}

TEST_CASE("clique counts agree with subset enumeration") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    const auto g = oracle::random_graph(3 + t % 9, 0.2 + 0.1 * (t % 6), rng);
    const auto f = clique_counts(g);
    CHECK(f.counts == oracle::subset_clique_counts(g));
    CHECK(validate(whitney_complex(g)).valid);
    CHECK(f_vector(whitney_complex(g)) == f);
  }
}

TEST_CASE("euler characteristic is a valuation") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const auto c = whitney_complex(oracle::random_graph(7, 0.5, rng));
    const auto vs = c.vertex_set();
    std::vector<Vertex> a, b;
    for (Vertex v : vs) {
      if (rng() % 3 != 0) a.push_back(v);
      if (rng() % 3 != 0) b.push_back(v);
    }
    const auto h = c.restricted_to(a), k = c.restricted_to(b);
    CHECK(euler_characteristic(h.unite(k)) + euler_characteristic(h.intersection(k)) ==
          euler_characteristic(h) + euler_characteristic(k));
  }
}

TEST_CASE("barycentric and connection graphs") {
  const auto k3 = whitney_complex(triangle());
  const auto g1 = barycentric(k3);
  CHECK(g1.graph.order() == 7);
  CHECK(g1.graph.size() == 12);
  const auto cg = connection(k3);
  CHECK(cg.graph.size() == 15);
  CHECK(is_subgraph(g1.graph, cg.graph));

  const auto c2 = connection(k2());
  CHECK(c2.graph.size() == 2);  // {1} and {2} do not meet: a path, not a triangle

  const auto twice = barycentric2(k2());
  CHECK(twice.first.graph.order() == 3);
  CHECK(twice.second.graph.order() == 5);
  CHECK(twice.second.graph.size() == 4);

  const auto point = SimplicialComplex::generated_by({Simplex{4}});
  CHECK(barycentric(point).graph.order() == 1);
  CHECK(barycentric2(point).second.graph.order() == 1);
  CHECK_THROWS_AS(barycentric(k3, 3), RefinementOverflow);
}

TEST_CASE("sphere decomposition") {
  const auto k3 = whitney_complex(triangle());
  const auto g1 = barycentric(k3);
  const Vertex top = g1.vertex(Simplex{0, 1, 2});
  const auto d = stable_unstable(g1, top);
  CHECK(d.stable.order() == 6);
  CHECK(d.stable.size() == 6);
  CHECK(d.unstable.empty());

  const auto r2 = barycentric(k2());
  const auto e = stable_unstable(r2, r2.vertex(Simplex{1, 2}));
  CHECK(e.stable.order() == 2);
  CHECK(e.stable.size() == 0);
  CHECK(stable_unstable(r2, r2.vertex(Simplex{1})).stable.empty());

  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto c = whitney_complex(oracle::random_graph(6, 0.6, rng));
    const auto r = barycentric(c);
    for (Vertex x : r.graph.vertices()) {
      const auto sd = stable_unstable(r, x);
      CHECK(sd.stable.order() + sd.unstable.order() == sd.sphere.order());
      CHECK(sd.sphere.size() ==
            sd.stable.size() + sd.unstable.size() + sd.stable.order() * sd.unstable.order());
      CHECK(positive_sphere_as_intersection(r, x) == sd.unstable);
    }
  }
}

TEST_CASE("intersection of refinements") {
  const auto c = whitney_complex(Graph({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  CHECK(intersection_refinement_check(c, c, c));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    std::vector<Simplex> hg, kg;
    for (const auto& s : c.simplices()) {
      if (rng() % 5 == 0) hg.push_back(s);
      if (rng() % 5 == 0) kg.push_back(s);
    }
    CHECK(intersection_refinement_check(c, SimplicialComplex::generated_by(hg),
                                        SimplicialComplex::generated_by(kg)));
  }
  const auto h = SimplicialComplex::generated_by({Simplex{0, 1}});
  const auto k = SimplicialComplex::generated_by({Simplex{2, 3}});
  CHECK(intersection_refinement_check(c, h, k));
  CHECK_THROWS_AS(intersection_refinement_check(c, SimplicialComplex::generated_by({Simplex{7}}), h),
                  std::invalid_argument);
}

TEST_CASE("bareiss determinant matches permutation expansion") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (std::size_t n = 1; n <= 7; ++n)
    for (int t = 0; t < 12; ++t) {
      oracle::Dense d(n, std::vector<long long>(n));
      IntMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          // Sparse rows now and then so zero pivots get exercised.
          d[i][j] = (t % 3 == 0 && entry(rng) > 1) ? 0 : entry(rng);
          m(i, j) = d[i][j];
        }
      CHECK(det_exact(m) == oracle::permutation_det(d));
    }
  CHECK(det_exact(IntMatrix::identity(5)) == 1);
  CHECK(det_exact(IntMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}) == 0);
  CHECK_THROWS_AS(det_exact(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("exact rank") {
  CHECK(rank_exact(IntMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank_exact(IntMatrix{{0, 0, 1}, {0, 0, 2}}) == 1);
  CHECK(rank_exact(IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}) == 3);
}

TEST_CASE("green inverse") {
  CHECK(green_inverse(IntMatrix::identity(4)) == IntMatrix::identity(4));
  const IntMatrix u{{2, 1}, {1, 1}};
  CHECK(green_inverse(u) == IntMatrix{{1, -1}, {-1, 2}});
  CHECK_THROWS_AS(green_inverse(IntMatrix{{2, 0}, {0, 1}}), NotUnimodular);
  CHECK_THROWS_AS(green_inverse(IntMatrix{{1, 1}, {1, 1}}), NotUnimodular);

  const auto m = fredholm_matrix(connection(k2()));
  CHECK(m == IntMatrix{{1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  const auto g = green_inverse(m);
  CHECK(g(0, 0) == 0);
  CHECK(g(1, 1) == 0);
  CHECK(g(2, 2) == -1);
  CHECK(g * m == IntMatrix::identity(3));
}

TEST_CASE("green inverse agrees with rational gauss-jordan") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 25; ++t) {
    const auto c = whitney_complex(oracle::random_graph(4 + t % 3, 0.5, rng));
    const auto cg = connection(c);
    const auto m = fredholm_matrix(cg);
    const auto inv = green_inverse(m);
    const auto ref = oracle::rational_inverse(oracle::to_dense(cg.graph, true));
    REQUIRE(!ref.empty());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) CHECK(Rational(inv(i, j)) == ref[i][j]);
  }
}

TEST_CASE("green report") {
  const auto point = SimplicialComplex::generated_by({Simplex{0}});
  const auto r1 = green_report(point);
  REQUIRE(r1.rows.size() == 1);
  CHECK(r1.rows[0].index == 1);
  CHECK(r1.rows[0].green == 1);
  CHECK(r1.holds());

  const auto k3 = green_report(whitney_complex(triangle()));
  CHECK(k3.rows.size() == 7);
  CHECK(k3.determinant == -1);
  CHECK(k3.holds());

  std::mt19937_64 rng(19);
  for (int t = 0; t < 30; ++t) {
    const auto c = whitney_complex(oracle::random_graph(2 + t % 7, 0.5, rng));
    const auto rep = green_report(c);
    CHECK(rep.holds());
    CHECK(rep.determinant == fermi_characteristic(c));
  }
}

TEST_CASE("twin propositions") {
  const auto k3 = whitney_complex(triangle());
  const auto removed = psi_remove_cell(k3, Simplex{0, 1, 2});
  CHECK(removed.holds());
  CHECK_THROWS_AS(psi_remove_cell(k3, Simplex{0, 1}), std::invalid_argument);

  const auto with_isolated = whitney_complex(Graph({0, 1, 2, 9}, {{0, 1}, {1, 2}, {0, 2}}));
  const auto iso = psi_remove_cell(with_isolated, Simplex{9});
  CHECK(iso.holds());
  CHECK(iso.actual == det_exact(fredholm_matrix(connection(with_isolated))));

  const auto at_point = psi_attach_cell(k2(), SimplicialComplex::generated_by({Simplex{1}}));
  CHECK(at_point.predicted == 0);
  CHECK(at_point.holds());
  const auto at_empty = psi_attach_cell(k2(), SimplicialComplex{});
  CHECK(at_empty.holds());
  CHECK(at_empty.actual == det_exact(fredholm_matrix(connection(k2()))));
  const auto not_full = SimplicialComplex::generated_by({Simplex{1}, Simplex{2}});
  CHECK_THROWS_AS(psi_attach_cell(k2(), not_full), std::invalid_argument);
}
