// Acceptance runner: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every criterion passes, or when the only failures are
// ones listed in kUnattainable and they fail in exactly the documented way.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gtop/arithmetic.hpp"
#include "gtop/fredholm.hpp"
#include "gtop/homology.hpp"
#include "gtop/isomorphism.hpp"
#include "gtop/named_graphs.hpp"
#include "gtop/primegraphs.hpp"
#include "gtop/refinement.hpp"
#include "gtop/spectral.hpp"
#include "gtop/spheres.hpp"
#include "oracles.hpp"

using namespace gtop;

namespace {

// Pinned tolerances and limits.
constexpr double kEigTol = 1e-6;
constexpr double kCriterion1Seconds = 60.0;
constexpr double kCriterion5Seconds = 120.0;
constexpr std::size_t kCofactorCap = 7;

struct Outcome {
  bool pass = true;
  // Criterion fails literally, but only in the documented, expected way.
  bool documented = false;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

// Everything the criteria touched, replayed against the oracles in criterion 9.
struct Touched {
  std::vector<IntMatrix> matrices;
  std::vector<SimplicialComplex> complexes;

  void matrix(const IntMatrix& m) {
    if (m.rows() <= kCofactorCap) matrices.push_back(m);
  }
  void complex(const SimplicialComplex& c) { complexes.push_back(c); }
} touched;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

template <typename Set>
std::string set_text(const Set& s) {
  std::string out = "{";
  for (const auto& x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(20240101);
  const double ps[] = {0.3, 0.5, 0.7};
  std::size_t rows = 0;
  for (int k = 0; k < 100; ++k) {
    const auto g = named::erdos_renyi(1 + rng() % 8, ps[k % 3], rng);
    const auto c = whitney_complex(g);
    touched.complex(c);
    touched.matrix(fredholm_matrix(connection(c)));
    const auto r = green_report(c);
    rows += r.rows.size();
    o.require(r.determinant == 1 || r.determinant == -1, "det not a unit for " + g.to_string());
    o.require(r.determinant == r.psi_product, "det != psi for " + g.to_string());
    o.require(r.all_match(), "green diagonal mismatch for " + g.to_string());
  }
  const double secs = seconds_since(t0);
  o.require(secs < kCriterion1Seconds, "runtime " + fmt_double(secs) + " s");
  o.note("100 graphs, " + std::to_string(rows) + " diagonal entries, " + fmt_double(secs) + " s");
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::mt19937_64 rng(20240202);
  std::size_t removals = 0, attaches = 0;
  for (int k = 0; k < 50; ++k) {
    const auto c = named::random_complex(4 + rng() % 4, 2 + rng() % 4, 4, rng);
    touched.complex(c);
    touched.matrix(fredholm_matrix(connection(c)));
    for (const auto& x : c.facets()) {
      ++removals;
      const auto t = psi_remove_cell(c, x);
      o.require(t.holds(), "remove " + x.to_string() + " from complex " + std::to_string(k));
    }
    for (int h = 0; h < 5; ++h) {
      std::vector<Vertex> keep;
      for (Vertex v : c.vertex_set())
        if (named::coin(rng, 0.5)) keep.push_back(v);
      const auto sub = c.restricted_to(keep);
      touched.complex(sub);
      ++attaches;
      const auto t = psi_attach_cell(c, sub);
      o.require(t.holds(), "attach to complex " + std::to_string(k));
    }
  }
  o.note(std::to_string(removals) + " removals, " + std::to_string(attaches) + " attachments");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto c4c4 = barycentric(whitney_complex(zykov_join(named::cycle(4), named::cycle(4))));
  o.require(c4c4.graph.order() == 80, "(C4+C4)1 has " + std::to_string(c4c4.graph.order()) + " vertices");

  const auto util = barycentric(whitney_complex(named::utility()));
  o.require(util.graph.order() == 15 && util.graph.size() == 18,
            "(P3+P3)1 is " + std::to_string(util.graph.order()) + "/" + std::to_string(util.graph.size()));

  const auto wc = whitney_complex(named::windmill());
  touched.complex(wc);
  const auto values = unit_sphere_euler_values(barycentric(wc).graph);
  o.require(values.contains(-1), "windmill G1 sphere values " + set_text(values));

  const auto oct = zykov_product(named::complete(3), named::points(2));
  const auto ppp = zykov_join_all({named::points(2), named::points(2), named::points(2)});
  o.require(are_isomorphic(oct, ppp), "K3*P2 not isomorphic to P2+P2+P2");
  o.require(are_isomorphic(oct, named::octahedron()), "K3*P2 not the octahedron");

  const auto rp2 = whitney_complex(named::projective_plane());
  touched.complex(rp2);
  const auto f = f_vector(rp2);
  o.require(f.counts == std::vector<std::int64_t>{15, 42, 28}, "RP2 f-vector");
  o.require(euler_characteristic(rp2) == 1, "RP2 chi");
  o.require(fermi_characteristic(rp2) == 1, "RP2 psi");
  o.note("(C4+C4)1 = 80, (P3+P3)1 = 15/18, windmill values " + set_text(values) + ", RP2 (15,42,28)");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto p = build_panel(100);
  touched.complex(p.complex);
  o.require(p.squarefree.size() == 60, "panel has " + std::to_string(p.squarefree.size()) + " vertices");
  const auto s = unit_sphere(p.g_n, 2);
  const std::vector<Vertex> listed{6, 10, 14, 22, 26, 30, 34, 38, 42, 46, 58, 62, 66, 70, 74, 78, 82, 86, 94};
  o.require(s.vertices() == listed, "S(2) vertex list");
  const auto b = betti(s);
  touched.complex(whitney_complex(s));
  o.require(b == BettiVector{10, 1}, "S(2) betti");
  const auto green = prime_green_check(p);
  const auto row = std::find_if(green.rows.begin(), green.rows.end(), [](const GreenRow& r) { return r.vertex == 2; });
  const std::int64_t chi = euler_characteristic(s);
  const std::int64_t index = 1 - chi;
  const BigInt g22 = row->green;

  bool rest = o.pass;
  for (std::int64_t n = 2; n <= 60; ++n) {
    const bool ok = prime_green_check(build_panel(n)).holds();
    o.require(ok, "prime_green_check n = " + std::to_string(n));
    rest = rest && ok;
  }
  for (std::int64_t n = 1; n <= 1000; ++n) {
    const bool ok = mertens_euler(n).holds();
    o.require(ok, "Mertens n = " + std::to_string(n));
    rest = rest && ok;
  }
  for (std::int64_t n = 2; n <= 60; n += 29) touched.complex(build_panel(n).complex);

  // Literal fixture values.
  o.require(chi == -8, "chi(S(2)) = -8 (computed " + std::to_string(chi) + ")");
  o.require(index == 9, "i(2) = 9 (computed " + std::to_string(index) + ")");
  o.require(g22 == 9, "g(2,2) = 9 (computed " + g22.str() + ")");
  // b0 - b1 = 9 forces chi = 9 and i = -8; that is the documented deviation.
  o.documented = !o.pass && rest && chi == 9 && index == -8 && g22 == -8;
  o.note("S(2): 19 vertices, b = (10,1), chi = " + std::to_string(chi) + ", i = " + std::to_string(index) +
         ", g(2,2) = " + g22.str());
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::vector<std::pair<std::string, Graph>> corpus{
      {"K3", named::complete(3)}, {"windmill", named::windmill()}, {"C5", named::cycle(5)},
      {"bowtie", named::bowtie()}, {"S4", named::star(4)},          {"K4", named::complete(4)}};
  for (const auto& [name, g] : corpus) {
    const auto c = whitney_complex(g);
    touched.complex(c);
    const auto two = barycentric2(c);
    const auto a = unit_sphere_euler_values(two.first.graph);
    const auto b = unit_sphere_euler_values(two.second.graph);
    o.require(a == b, name + ": G1 " + set_text(a) + " vs G2 " + set_text(b));
  }
  const double secs = seconds_since(t0);
  o.require(secs < kCriterion5Seconds, "runtime " + fmt_double(secs) + " s");
  o.note("6 graphs, " + fmt_double(secs) + " s");
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(20240606);
  for (int k = 0; k < 100; ++k) {
    const auto g = named::erdos_renyi(1 + rng() % 6, 0.5, rng);
    const auto h = named::erdos_renyi(1 + rng() % 6, 0.5, rng);
    const auto j = zykov_join(g, h);
    const std::string pair = g.to_string() + " + " + h.to_string();
    o.require(euler_polynomial(j) == euler_polynomial(g) * euler_polynomial(h), "f polynomial " + pair);
    const auto a = euler_characteristic(g), b = euler_characteristic(h);
    o.require(euler_characteristic(j) == a + b - a * b, "chi join " + pair);
    o.require(poincare_hopf_i(j) == poincare_hopf_i(g) * poincare_hopf_i(h), "i join " + pair);
    o.require(clique_number(j) == clique_number(g) + clique_number(h), "clique number " + pair);
    if (k % 10 == 0) touched.complex(whitney_complex(j));
  }
  const std::vector<std::tuple<std::string, Graph, int>> spheres{
      {"P2", named::points(2), 0}, {"C4", named::cycle(4), 1}, {"C5", named::cycle(5), 1},
      {"Oct", named::octahedron(), 2}};
  SphereRecognizer rec;
  std::size_t joins = 0;
  for (const auto& [gn, g, n] : spheres)
    for (const auto& [hn, h, m] : spheres) {
      const auto v = rec.sphere(zykov_join(g, h));
      o.require(v.is_sphere(n + m + 1), gn + "+" + hn + " is " + to_string(v.status));
      ++joins;
    }
  o.note("100 pairs, " + std::to_string(joins) + " sphere joins");
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(20240707);
  std::size_t connected = 0, stated_counterexamples = 0;
  for (int k = 0; k < 50; ++k) {
    const auto g = named::erdos_renyi(1 + rng() % 7, 0.6, rng);
    const auto h = named::erdos_renyi(1 + rng() % 7, 0.6, rng);
    const auto r = join_eigen_checks(g, h);
    touched.matrix(vertex_laplacian(zykov_join(g, h)));
    o.require(r.join.contains(static_cast<double>(g.order() + h.order()), kEigTol),
              "order sum missing for " + g.to_string() + " + " + h.to_string());
    if (r.lambda2_applicable) {
      ++connected;
      o.require(std::abs(r.join.lambda2 - r.lambda2_sharp) < kEigTol,
                "lambda2 for " + g.to_string() + " + " + h.to_string());
      if (!r.stated_holds) ++stated_counterexamples;
    }
  }
  for (std::size_t n = 2; n <= 3; ++n)
    for (std::size_t m = 1; m <= 6; ++m) {
      const auto g = named::erdos_renyi(m, 0.5, rng);
      const auto r = complete_product_check(g, n);
      o.require(std::abs(r.maximum - r.expected) < kEigTol, "K" + std::to_string(n) + " * " + g.to_string());
    }
  const auto cell = vertex_laplacian_spectrum(named::sixteen_cell());
  o.require(std::abs(cell.max() - 8.0) < kEigTol && cell.multiplicity_of(8.0, kEigTol) >= 3, "16-cell spectrum");

  const std::vector<std::pair<Graph, Graph>> pairs{{named::complete(2), named::complete(2)},
                                                   {named::cycle(4), named::cycle(4)},
                                                   {named::cycle(4), named::points(2)}};
  for (const auto& [g, h] : pairs) {
    const auto a = volume_laplacian_eigs(whitney_complex(g));
    const auto b = volume_laplacian_eigs(whitney_complex(h));
    std::vector<double> sums;
    for (double x : a)
      for (double y : b) sums.push_back(x + y);
    std::sort(sums.begin(), sums.end());
    const auto jc = whitney_complex(zykov_join(g, h));
    touched.complex(jc);
    const auto j = volume_laplacian_eigs(jc);
    bool ok = j.size() == sums.size();
    for (std::size_t i = 0; ok && i < j.size(); ++i) ok = std::abs(j[i] - sums[i]) < kEigTol;
    o.require(ok, "volume sums for " + g.to_string() + " + " + h.to_string());
  }
  o.note("50 pairs, " + std::to_string(connected) + " connected; 16-cell max " + std::to_string(cell.max()).substr(0, 5) +
         " x" + std::to_string(cell.multiplicity_of(8.0, kEigTol)));
  o.note("INFO min(|V|)+min(lambda2) formula fails on " + std::to_string(stated_counterexamples) + " of " +
         std::to_string(connected) + " connected pairs");
  return o;
}

Outcome criterion8() {
  Outcome o;
  struct Base {
    const char* name;
    Graph g;
    std::set<std::int64_t> spectrum;
    int psi;
    std::int64_t chi;
  };
  const std::vector<Base> bases{{"adenine", named::adenine(), {-2, -1, 0}, 1, -1},
                                {"guanine", named::guanine(), {-2, -1, 0}, -1, -1},
                                {"cytosine", named::cytosine(), {-2, -1, 0}, -1, 0},
                                {"thymine", named::thymine(), {-3, -2, 0}, -1, 0}};
  for (const auto& b : bases) {
    const auto c = whitney_complex(b.g);
    touched.complex(c);
    o.require(c.dimension() == 1, std::string(b.name) + " is not 1-dimensional");
    const auto s = sphere_spectrum(c).vertex_values;
    o.require(s == b.spectrum, std::string(b.name) + " spectrum " + set_text(s));
    o.require(fermi_characteristic(c) == b.psi, std::string(b.name) + " psi");
    o.require(euler_characteristic(c) == b.chi, std::string(b.name) + " chi");
  }
  o.note("psi (1,-1,-1,-1), chi (-1,-1,0,0)");
  return o;
}

oracle::Dense dense(const IntMatrix& m) {
  oracle::Dense d(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = static_cast<long long>(m(r, c));
  return d;
}

Outcome criterion9() {
  Outcome o;
  std::size_t mats = 0;
  for (const auto& m : touched.matrices) {
    ++mats;
    o.require(det_exact(m) == oracle::cofactor_det(dense(m)), "det mismatch on a " + std::to_string(m.rows()) + "x" +
                                                                   std::to_string(m.rows()) + " matrix");
  }
  // Plus the minors and borders the twin checks work with.
  std::mt19937_64 rng(20240909);
  for (int k = 0; k < 200; ++k) {
    const auto c = named::random_complex(3 + rng() % 3, 1 + rng() % 3, 3, rng);
    const auto m = fredholm_matrix(connection(c));
    if (m.rows() > kCofactorCap) continue;
    ++mats;
    o.require(det_exact(m) == oracle::cofactor_det(dense(m)), "det mismatch on random Fredholm matrix");
    const auto minor = m.without(rng() % m.rows());
    ++mats;
    o.require(det_exact(minor) == oracle::cofactor_det(dense(minor)), "det mismatch on a minor");
  }
  std::size_t complexes = 0;
  for (const auto& c : touched.complexes) {
    ++complexes;
    const auto b = betti(c);
    std::int64_t alt = 0;
    for (std::size_t k = 0; k < b.size(); ++k) alt += (k % 2 ? -1 : 1) * b[k];
    o.require(alt == euler_characteristic(c), "Euler-Poincare on a complex with " + std::to_string(c.size()) +
                                                  " simplices");
  }
  o.note(std::to_string(mats) + " matrices, " + std::to_string(complexes) + " complexes");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  Outcome (*run)();
};

// Criteria that cannot hold as written. Their failure is still printed.
const std::vector<std::pair<int, const char*>> kUnattainable{
    {4, "listed chi(S(2)) = -8 and i(2) = g(2,2) = 9 contradict b0 - b1 = 9; computed chi = 9, i = g(2,2) = -8"}};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{{1, "unimodularity and Green diagonal", criterion1},
                                        {2, "twin propositions", criterion2},
                                        {3, "fixtures", criterion3},
                                        {4, "prime graph panel", criterion4},
                                        {5, "sphere spectrum under refinement", criterion5},
                                        {6, "join algebra", criterion6},
                                        {7, "spectral lemmas", criterion7},
                                        {8, "DNA fixtures", criterion8},
                                        {9, "oracle equivalence", criterion9}};
  std::size_t passed = 0, documented = 0, failed = 0;
  for (const auto& c : criteria) {
    const auto o = c.run();
    const auto known = std::find_if(kUnattainable.begin(), kUnattainable.end(),
                                    [&](const auto& u) { return u.first == c.id; });
    std::printf("%s %d %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title);
    const std::size_t shown = std::min<std::size_t>(o.notes.size(), 8);
    for (std::size_t i = 0; i < shown; ++i) std::printf("     %s\n", o.notes[i].c_str());
    if (o.notes.size() > shown) std::printf("     ... %zu more\n", o.notes.size() - shown);
    if (o.pass) {
      ++passed;
    } else if (known != kUnattainable.end() && o.documented) {
      ++documented;
      std::printf("     unattainable as written: %s\n", known->second);
    } else {
      ++failed;
    }
  }
  std::printf("%zu passed, %zu failed as documented, %zu failed\n", passed, documented, failed);
  return failed == 0 ? 0 : 1;
}
