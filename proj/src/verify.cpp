#include "gtop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <random>

#include "gtop/arithmetic.hpp"
#include "gtop/fredholm.hpp"
#include "gtop/homology.hpp"
#include "gtop/isomorphism.hpp"
#include "gtop/named_graphs.hpp"
#include "gtop/primegraphs.hpp"
#include "gtop/refinement.hpp"
#include "gtop/spectral.hpp"
#include "gtop/spheres.hpp"

namespace gtop {

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
}

namespace {

class Suite {
 public:
  // Checks live in a deque so references handed out by begin() stay valid.
  CheckResult& begin(std::string module, std::string name, bool informational = false) {
    checks_.push_back({std::move(module), std::move(name), 0, 0, {}, informational});
    return checks_.back();
  }

  void finish(VerifyReport& report) { report.checks.assign(checks_.begin(), checks_.end()); }

  static void record(CheckResult& c, bool ok, const std::function<std::string()>& what) {
    ++c.cases;
    if (ok) return;
    if (c.failures++ == 0) c.first_failure = what();
  }

 private:
  std::deque<CheckResult> checks_;
};

struct Corpus {
  std::vector<Graph> graphs;
  std::vector<SimplicialComplex> complexes;
};

Corpus make_corpus(std::mt19937_64& rng) {
  Corpus c;
  for (const auto& g : {named::complete(3), named::cycle(4), named::cycle(5), named::windmill(),
                        named::bowtie(), named::star(4), named::complete(4), named::octahedron()})
    c.graphs.push_back(g);
  for (int t = 0; t < 30; ++t) c.graphs.push_back(named::erdos_renyi(2 + t % 6, 0.3 + 0.2 * (t % 3), rng));
  for (const auto& g : c.graphs) c.complexes.push_back(whitney_complex(g));
  for (int t = 0; t < 15; ++t) c.complexes.push_back(named::random_complex(6, 2 + t % 4, 4, rng));
  return c;
}

std::string describe(const SimplicialComplex& c) {
  std::string s = "complex with " + std::to_string(c.size()) + " simplices:";
  for (const auto& f : c.facets()) s += " " + f.to_string();
  return s;
}

std::string describe(const Graph& g) { return g.to_string(); }

std::vector<Vertex> random_subset(const std::vector<Vertex>& vs, std::mt19937_64& rng) {
  std::vector<Vertex> out;
  for (Vertex v : vs)
    if (named::coin(rng, 0.5)) out.push_back(v);
  return out;
}

void complex_checks(Suite& s, const Corpus& corpus, std::mt19937_64& rng) {
  auto& closed = s.begin("complex_core", "whitney complexes are closed");
  auto& fermi = s.begin("complex_core", "psi = (-1)^(v1+v3+...) and |c| = sum f");
  auto& valuation = s.begin("complex_core", "chi is a valuation on full subcomplexes");
  for (const auto& g : corpus.graphs) Suite::record(closed, validate(whitney_complex(g)).valid, [&] { return describe(g); });
  for (const auto& c : corpus.complexes) {
    const auto f = f_vector(c);
    std::int64_t odd = 0;
    for (std::size_t k = 1; k < f.counts.size(); k += 2) odd += f.counts[k];
    Suite::record(fermi,
                  fermi_characteristic(c) == (odd % 2 ? -1 : 1) &&
                      static_cast<std::size_t>(f.total()) == c.size(),
                  [&] { return describe(c); });
    const auto vs = c.vertex_set();
    const auto h = c.restricted_to(random_subset(vs, rng));
    const auto k = c.restricted_to(random_subset(vs, rng));
    Suite::record(valuation,
                  euler_characteristic(h.unite(k)) + euler_characteristic(h.intersection(k)) ==
                      euler_characteristic(h) + euler_characteristic(k),
                  [&] { return describe(c); });
  }
}

void refinement_checks(Suite& s, const Corpus& corpus, const VerifyOptions& o, std::mt19937_64& rng) {
  auto& join = s.begin("refinement", "S(x) is the join of S-(x) and S+(x)");
  auto& positive = s.begin("refinement", "S+(x) is the intersection of vertex spheres");
  auto& sub = s.begin("refinement", "G1 is a subgraph of G'");
  auto& chi = s.begin("refinement", "chi(G1) = chi(G)");
  auto& inter = s.begin("refinement", "(H n K)_1 = H_1 n K_1");
  auto& second = s.begin("refinement", "unit sphere chi values agree on G1 and G2");
  for (const auto& c : corpus.complexes) {
    const auto r = barycentric(c, o.simplex_budget);
    for (Vertex x : r.graph.vertices()) {
      const auto d = stable_unstable(r, x);
      // Labeled join: every stable-unstable pair must be an edge of S(x).
      bool all = d.sphere.size() == d.stable.size() + d.unstable.size() + d.stable.order() * d.unstable.order();
      Suite::record(join, all, [&] { return describe(c) + " at " + r.simplex(x).to_string(); });
      Suite::record(positive, positive_sphere_as_intersection(r, x) == d.unstable,
                    [&] { return describe(c) + " at " + r.simplex(x).to_string(); });
    }
    Suite::record(sub, is_subgraph(r.graph, connection(c, o.simplex_budget).graph), [&] { return describe(c); });
    Suite::record(chi, euler_characteristic(r.graph) == euler_characteristic(c), [&] { return describe(c); });
    std::vector<Simplex> hg, kg;
    for (const auto& x : c.simplices()) {
      if (named::coin(rng, 0.3)) hg.push_back(x);
      if (named::coin(rng, 0.3)) kg.push_back(x);
    }
    Suite::record(inter,
                  intersection_refinement_check(c, SimplicialComplex::generated_by(hg),
                                                SimplicialComplex::generated_by(kg)),
                  [&] { return describe(c); });
    if (c.size() <= 40) {
      const auto r2 = barycentric2(c, o.simplex_budget);
      Suite::record(second,
                    unit_sphere_euler_values(r2.first.graph) == unit_sphere_euler_values(r2.second.graph),
                    [&] { return describe(c); });
    }
  }
}

void fredholm_checks(Suite& s, const Corpus& corpus, std::mt19937_64& rng) {
  auto& det = s.begin("fredholm", "det(1+A') = psi");
  auto& green = s.begin("fredholm", "g(x,x) = 1 - chi(S(x))");
  auto& inverse = s.begin("fredholm", "inverse times matrix is the identity");
  auto& remove = s.begin("fredholm", "removing a facet multiplies psi by 1 - chi(S(x))");
  auto& attach = s.begin("fredholm", "attaching along full H multiplies psi by 1 - chi(H)");
  for (const auto& c : corpus.complexes) {
    if (c.empty()) continue;
    const auto m = fredholm_matrix(connection(c));
    const auto rep = green_report(c);
    Suite::record(det, rep.determinant == fermi_characteristic(c), [&] { return describe(c); });
    Suite::record(green, rep.all_match(), [&] { return describe(c); });
    Suite::record(inverse, green_inverse(m) * m == IntMatrix::identity(m.rows()), [&] { return describe(c); });
    for (const auto& f : c.facets())
      Suite::record(remove, psi_remove_cell(c, f).holds(), [&] { return describe(c) + " minus " + f.to_string(); });
    const auto h = c.restricted_to(random_subset(c.vertex_set(), rng));
    Suite::record(attach, psi_attach_cell(c, h).holds(), [&] { return describe(c) + " along " + describe(h); });
  }
}

void homology_checks(Suite& s, const Corpus& corpus) {
  auto& dd = s.begin("homology", "boundary of boundary is zero");
  auto& ep = s.begin("homology", "Euler-Poincare");
  auto& inv = s.begin("homology", "Betti numbers survive refinement");
  auto& hodge = s.begin("homology", "nullity of L_k is b_k");
  for (const auto& c : corpus.complexes) {
    const auto cc = chain_complex(c);
    Suite::record(dd, cc.is_chain_complex(), [&] { return describe(c); });
    const auto b = betti(cc);
    std::int64_t alt = 0;
    for (std::size_t k = 0; k < b.size(); ++k) alt += (k % 2 ? -1 : 1) * b[k];
    Suite::record(ep, alt == euler_characteristic(c), [&] { return describe(c); });
    if (c.size() <= 40) Suite::record(inv, betti(barycentric(c).graph) == b, [&] { return describe(c); });
    for (int k = 0; k <= c.dimension(); ++k) {
      const auto ev = symmetric_eigenvalues(form_laplacian(c, k));
      const auto zeros = std::count_if(ev.begin(), ev.end(), [](double e) { return std::abs(e) < 1e-7; });
      Suite::record(hodge, zeros == b[static_cast<std::size_t>(k)],
                    [&] { return describe(c) + " degree " + std::to_string(k); });
    }
  }
}

void sphere_checks(Suite& s, const Corpus& corpus, const VerifyOptions& o) {
  SphereOptions so;
  so.node_budget = o.node_budget;
  so.strict = o.strict_spheres;
  SphereRecognizer rec(so);
  auto& stable = s.begin("spheres", "S-(x) is a (dim x - 1)-sphere");
  auto& joins = s.begin("spheres", "joins of spheres are spheres");
  auto& verdict = s.begin("spheres", "verdicts respect chi");
  auto& character = s.begin("spheres", "spheres have |psi| = |i| = 1");
  for (const auto& c : corpus.complexes) {
    if (c.size() > 40) continue;
    const auto r = barycentric(c);
    for (Vertex x : r.graph.vertices())
      Suite::record(stable, rec.sphere(stable_unstable(r, x).stable).is_sphere(r.simplex(x).dim() - 1),
                    [&] { return describe(c) + " at " + r.simplex(x).to_string(); });
  }
  const std::vector<std::pair<Graph, int>> spheres{
      {named::points(2), 0}, {named::cycle(4), 1}, {named::cycle(5), 1}, {named::cycle(6), 1}, {named::octahedron(), 2}};
  for (const auto& [g, n] : spheres)
    for (const auto& [h, m] : spheres) {
      const auto j = zykov_join(g, h);
      Suite::record(joins, rec.sphere(j).is_sphere(n + m + 1), [&] { return describe(j); });
      Suite::record(character, std::abs(fermi_characteristic(j)) == 1 && std::abs(poincare_hopf_i(j)) == 1,
                    [&] { return describe(j); });
    }
  for (const auto& g : corpus.graphs) {
    const auto v = rec.sphere(g);
    const auto chi = euler_characteristic(g);
    bool ok = true;
    if (v.status == SphereStatus::Sphere) ok = chi == (v.dimension % 2 == 0 ? 2 : 0);
    if (v.status == SphereStatus::Contractible) ok = chi == 1;
    Suite::record(verdict, ok, [&] { return describe(g); });
  }
}

void arithmetic_checks(Suite& s, std::mt19937_64& rng) {
  auto& poly = s.begin("arithmetic", "f(G+H) = f(G) f(H)");
  auto& chi = s.begin("arithmetic", "chi(G+H) = chi(G) + chi(H) - chi(G)chi(H)");
  auto& index = s.begin("arithmetic", "i(G+H) = i(G) i(H)");
  auto& clique = s.begin("arithmetic", "clique numbers add");
  auto& volume = s.begin("arithmetic", "facet counts multiply");
  auto& dim = s.begin("arithmetic", "dim(G+H) >= dim(G) + dim(H) + 1");
  auto& primes = s.begin("arithmetic", "prime factors rejoin to G and are prime");
  auto& psi = s.begin("arithmetic", "psi on even and odd chi submonoids");
  auto& dist = s.begin("arithmetic", "G(H+K) = GH + GK");
  for (int t = 0; t < 100; ++t) {
    const auto g = named::erdos_renyi(1 + rng() % 6, 0.5, rng);
    const auto h = named::erdos_renyi(1 + rng() % 6, 0.5, rng);
    const auto j = zykov_join(g, h);
    auto what = [&] { return describe(g) + " + " + describe(h); };
    Suite::record(poly, euler_polynomial(j) == euler_polynomial(g) * euler_polynomial(h), what);
    const auto a = euler_characteristic(g), b = euler_characteristic(h);
    Suite::record(chi, euler_characteristic(j) == a + b - a * b, what);
    Suite::record(index, poincare_hopf_i(j) == poincare_hopf_i(g) * poincare_hopf_i(h), what);
    Suite::record(clique, clique_number(j) == clique_number(g) + clique_number(h), what);
    Suite::record(volume,
                  whitney_complex(j).facets().size() ==
                      whitney_complex(g).facets().size() * whitney_complex(h).facets().size(),
                  what);
    Suite::record(dim, inductive_dimension(j) >= inductive_dimension(g) + inductive_dimension(h) + 1, what);
    const auto parts = additive_prime_decompose(j);
    const bool prime = std::all_of(parts.begin(), parts.end(), [](const Graph& p) { return p.complement().connected(); });
    Suite::record(primes, prime && are_isomorphic(zykov_join_all(parts), j), what);
    Suite::record(psi, psi_join_submonoid_check(g, h).holds(), what);
  }
  const std::vector<Graph> atoms{named::complete(1), named::complete(2), named::points(2), named::points(3),
                                 named::cycle(4)};
  for (const auto& g : atoms)
    for (const auto& h : atoms)
      for (const auto& k : atoms)
        Suite::record(dist, distributivity_check(g, h, k),
                      [&] { return describe(g) + " * (" + describe(h) + " + " + describe(k) + ")"; });
}

void prime_checks(Suite& s) {
  auto& panel = s.begin("primegraphs", "G_n and H_n are the refinement and connection graphs");
  auto& sig = s.begin("primegraphs", "det(1+A(H_n)) = prod(-mu(k))");
  auto& green = s.begin("primegraphs", "1 - chi(S(x)) = (1+A(H_n))^-1_xx");
  auto& mertens = s.begin("primegraphs", "chi = 1 - M(n)");
  for (std::int64_t n = 2; n <= 200; n += (n < 30 ? 1 : 13)) {
    const auto p = build_panel(n);
    Suite::record(panel, p.refinement_invariants_hold(), [&] { return "n = " + std::to_string(n); });
    Suite::record(sig, det_exact(IntMatrix::one_plus_adjacency(p.h_n)) == prime_signature(n),
                  [&] { return "n = " + std::to_string(n); });
    if (n <= 60) Suite::record(green, prime_green_check(p).holds(), [&] { return "n = " + std::to_string(n); });
  }
  for (std::int64_t n = 1; n <= 1000; ++n)
    Suite::record(mertens, mertens_euler(n).holds(), [&] { return "n = " + std::to_string(n); });
}

void spectral_checks(Suite& s, std::mt19937_64& rng) {
  auto& sum = s.begin("spectral", "|V(G)|+|V(H)| is an eigenvalue of L(G+H)");
  auto& sharp = s.begin("spectral", "lambda2(G+H) = min(lambda2(G)+|V(H)|, lambda2(H)+|V(G)|)");
  auto& stated = s.begin("spectral", "lambda2(G+H) = min(|V|) + min(lambda2), counterexamples", true);
  auto& bound = s.begin("spectral", "lambda_max <= |V|");
  auto& product = s.begin("spectral", "max eigenvalue of K_n * G is n|V(G)|");
  auto& repeated = s.begin("spectral", "n G has eigenvalue n|V(G)| with multiplicity >= n-1");
  auto& volume = s.begin("spectral", "volume spectrum of G+H is pairwise sums");
  for (int t = 0; t < 50; ++t) {
    const auto g = named::erdos_renyi(1 + rng() % 8, 0.6, rng);
    const auto h = named::erdos_renyi(1 + rng() % 8, 0.6, rng);
    const auto r = join_eigen_checks(g, h);
    auto what = [&] { return describe(g) + " + " + describe(h); };
    Suite::record(sum, r.order_sum_present, what);
    Suite::record(bound, r.join.max() <= static_cast<double>(g.order() + h.order()) + kEigenTolerance, what);
    if (r.lambda2_applicable) {
      Suite::record(sharp, r.sharp_holds, what);
      Suite::record(stated, r.stated_holds, what);
    }
  }
  for (std::size_t n = 2; n <= 3; ++n)
    for (std::size_t m = 1; m <= 6; ++m) {
      const auto g = named::erdos_renyi(m, 0.5, rng);
      Suite::record(product, complete_product_check(g, n).holds, [&] { return describe(g); });
      Suite::record(repeated, repeated_join_check(g, n).holds, [&] { return describe(g); });
    }
  const std::vector<std::pair<Graph, Graph>> pairs{{named::complete(2), named::complete(2)},
                                                   {named::cycle(4), named::cycle(4)},
                                                   {named::cycle(4), named::points(2)},
                                                   {named::cycle(5), named::linear(2)}};
  for (const auto& [g, h] : pairs) {
    const auto a = volume_laplacian_eigs(whitney_complex(g));
    const auto b = volume_laplacian_eigs(whitney_complex(h));
    std::vector<double> sums;
    for (double x : a)
      for (double y : b) sums.push_back(x + y);
    std::sort(sums.begin(), sums.end());
    const auto j = volume_laplacian_eigs(whitney_complex(zykov_join(g, h)));
    bool ok = j.size() == sums.size();
    for (std::size_t i = 0; ok && i < j.size(); ++i) ok = std::abs(j[i] - sums[i]) < kEigenTolerance;
    Suite::record(volume, ok, [&] { return describe(g) + " + " + describe(h); });
  }
}

}  // namespace

VerifyReport verify_all(const VerifyOptions& options) {
  VerifyReport report;
  report.seed = options.seed;
  std::mt19937_64 rng(options.seed);
  Suite s;
  const Corpus corpus = make_corpus(rng);
  complex_checks(s, corpus, rng);
  refinement_checks(s, corpus, options, rng);
  fredholm_checks(s, corpus, rng);
  homology_checks(s, corpus);
  sphere_checks(s, corpus, options);
  arithmetic_checks(s, rng);
  prime_checks(s);
  spectral_checks(s, rng);
  s.finish(report);
  return report;
}

}  // namespace gtop
