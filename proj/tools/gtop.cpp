// gtop: command-line front end for the gtop library.
//
// Exit codes: 0 success, 1 an identity failed to hold, 2 usage or input error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gtop/arithmetic.hpp"
#include "gtop/complex.hpp"
#include "gtop/expression.hpp"
#include "gtop/fredholm.hpp"
#include "gtop/homology.hpp"
#include "gtop/io.hpp"
#include "gtop/named_graphs.hpp"
#include "gtop/primegraphs.hpp"
#include "gtop/refinement.hpp"
#include "gtop/spectral.hpp"
#include "gtop/spheres.hpp"
#include "gtop/verify.hpp"

using namespace gtop;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::string input;
  std::string expr;
  std::int64_t n = 0;
  std::uint64_t seed = 1;
  std::string format = "table";
  std::size_t budget_simplices = kDefaultSimplexBudget;
  std::size_t budget_nodes = 1'000'000;
  bool strict_spheres = false;

  // subcommand specific
  bool twice = false;
  std::string sub;
  std::string simplex;
  bool green = false;
  bool mertens = false;
  std::optional<std::int64_t> sphere;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Report under construction: JSON body plus the text rendering.
struct Report {
  Json json;
  std::ostringstream text;

  void field(const std::string& key, const Json& value, const std::string& shown = {}) {
    json[key] = value;
    text << key << ": " << (shown.empty() ? (value.is_string() ? value.get<std::string>() : value.dump()) : shown)
         << '\n';
  }
};

Json big(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

// Eigenvalues are printed to 1e-9 so reports stay byte-stable.
double tidy(double x) {
  const double r = std::round(x * 1e9) / 1e9;
  return r == 0.0 ? 0.0 : r;
}

std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", tidy(x));
  return buf;
}

Json tidy_all(const std::vector<double>& xs) {
  Json j = Json::array();
  for (double x : xs) j.push_back(tidy(x));
  return j;
}

std::string join_ints(const auto& xs, const char* sep = ",") {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : sep) + std::to_string(x);
  return s;
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<Vertex>(v));
    } catch (const std::exception&) {
      throw UsageError("bad vertex '" + item + "' in list '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty vertex list");
  return out;
}

/// Short name for a join factor.
std::string factor_name(const Graph& g) {
  const auto n = g.order();
  if (g.size() == n * (n - 1) / 2) return "K" + std::to_string(n);
  if (g.size() == 0) return "P" + std::to_string(n);
  bool two_regular = n >= 3 && g.connected();
  for (std::size_t i = 0; two_regular && i < n; ++i) two_regular = g.degree_at(i) == 2;
  if (two_regular) return "C" + std::to_string(n);
  return "G(" + std::to_string(n) + "," + std::to_string(g.size()) + ")";
}

struct Input {
  bool is_graph = false;
  Graph graph;
  SimplicialComplex complex;
};

Input load(const RunConfig& cfg) {
  Input in;
  if (!cfg.input.empty() && !cfg.expr.empty()) throw UsageError("give either --input or --expr, not both");
  if (!cfg.expr.empty()) {
    in.is_graph = true;
    in.graph = evaluate_expression(cfg.expr);
    in.complex = whitney_complex(in.graph);
    return in;
  }
  if (cfg.input.empty()) throw UsageError("this command needs --input PATH or --expr EXPR");
  auto loaded = load_input(cfg.input);
  if (!loaded.is_graph) {
    const auto v = validate(loaded.complex);
    if (!v.valid) throw ParseError(cfg.input, 0, "not closed under faces, missing " + v.missing_faces.front().to_string());
  }
  in.is_graph = loaded.is_graph;
  in.graph = std::move(loaded.graph);
  in.complex = std::move(loaded.complex);
  return in;
}

/// The graph most commands act on: the input graph, or G1 of a raw complex.
Graph working_graph(const Input& in, const RunConfig& cfg) {
  return in.is_graph ? in.graph : barycentric(in.complex, cfg.budget_simplices).graph;
}

void describe_input(Report& r, const Input& in) {
  const auto f = f_vector(in.complex);
  r.field("f_vector", f.counts, "(" + join_ints(f.counts) + ")");
  r.field("dimension", in.complex.dimension());
  r.field("simplices", in.complex.size());
  r.field("euler", euler_characteristic(in.complex));
  r.field("fermi", fermi_characteristic(in.complex));
}

int cmd_complex(const RunConfig& cfg, Report& r) {
  const auto in = load(cfg);
  r.field("valid", validate(in.complex).valid);
  describe_input(r, in);
  r.field("facets", in.complex.facets().size());
  if (in.is_graph) {
    r.field("vertices", in.graph.order());
    r.field("edges", in.graph.size());
    r.field("inductive_dimension", inductive_dimension(in.graph).str());
  }
  return kOk;
}

int cmd_refine(const RunConfig& cfg, Report& r) {
  const auto in = load(cfg);
  describe_input(r, in);
  if (!cfg.twice) {
    const auto g1 = barycentric(in.complex, cfg.budget_simplices);
    r.field("g1_vertices", g1.graph.order());
    r.field("g1_edges", g1.graph.size());
    r.field("g1_euler", euler_characteristic(g1.graph));
    r.field("inductive_dimension_g1", inductive_dimension(g1.graph).str());
    const auto values = unit_sphere_euler_values(g1.graph);
    r.field("sphere_euler_values", values, "{" + join_ints(values) + "}");
    return kOk;
  }
  const auto two = barycentric2(in.complex, cfg.budget_simplices);
  r.field("g1_vertices", two.first.graph.order());
  r.field("g1_edges", two.first.graph.size());
  r.field("g2_vertices", two.second.graph.order());
  r.field("g2_edges", two.second.graph.size());
  const auto a = unit_sphere_euler_values(two.first.graph);
  const auto b = unit_sphere_euler_values(two.second.graph);
  r.field("sphere_euler_values_g1", a, "{" + join_ints(a) + "}");
  r.field("sphere_euler_values_g2", b, "{" + join_ints(b) + "}");
  r.field("spectra_agree", a == b);
  return a == b ? kOk : kViolation;
}

int cmd_connection(const RunConfig& cfg, Report& r) {
  const auto in = load(cfg);
  describe_input(r, in);
  const auto cg = connection(in.complex, cfg.budget_simplices);
  r.field("connection_vertices", cg.graph.order());
  r.field("connection_edges", cg.graph.size());
  const auto det = det_exact(fredholm_matrix(cg));
  r.field("fredholm_determinant", big(det), det.str());
  const bool ok = det == fermi_characteristic(in.complex);
  r.field("determinant_is_fermi", ok);
  return ok ? kOk : kViolation;
}

void green_rows(Report& r, const GreenReport& g) {
  Json rows = Json::array();
  TextTable t({"x", "dim", "chi(S(x))", "i(x)", "g(x,x)", "match"});
  for (const auto& row : g.rows) {
    const std::string name = row.simplex ? row.simplex->to_string() : std::to_string(row.vertex);
    rows.push_back({{"x", name},
                    {"dim", row.dim},
                    {"sphere_euler", row.sphere_euler},
                    {"index", row.index},
                    {"green", big(row.green)},
                    {"match", row.match}});
    t.add({name, std::to_string(row.dim), std::to_string(row.sphere_euler), std::to_string(row.index),
           row.green.str(), row.match ? "yes" : "NO"});
  }
  r.json["rows"] = rows;
  r.text << t.render();
  r.field("determinant", big(g.determinant), g.determinant.str());
  r.field("psi_product", big(g.psi_product), g.psi_product.str());
  r.field("holds", g.holds());
}

int cmd_green(const RunConfig& cfg, Report& r) {
  const auto in = load(cfg);
  connection(in.complex, cfg.budget_simplices);  // budget check before the dense work
  const auto g = green_report(in.complex);
  green_rows(r, g);
  return g.holds() ? kOk : kViolation;
}

Json twin_json(const TwinResult& t) {
  return {{"actual", big(t.actual)}, {"predicted", big(t.predicted)}, {"holds", t.holds()}};
}

int cmd_attach(const RunConfig& cfg, Report& r) {
  const auto in = load(cfg);
  connection(in.complex, cfg.budget_simplices);
  r.field("fermi", fermi_characteristic(in.complex));
  std::vector<std::vector<Vertex>> subs;
  if (!cfg.sub.empty()) {
    subs.push_back(parse_vertex_list(cfg.sub));
  } else {
    r.field("seed", cfg.seed);
    std::mt19937_64 rng(cfg.seed);
    for (int k = 0; k < 5; ++k) {
      std::vector<Vertex> s;
      for (Vertex v : in.complex.vertex_set())
        if (named::coin(rng, 0.5)) s.push_back(v);
      subs.push_back(s);
    }
  }
  const auto vs = in.complex.vertex_set();
  for (const auto& s : subs)
    for (Vertex v : s)
      if (!std::binary_search(vs.begin(), vs.end(), v)) throw UsageError("vertex " + std::to_string(v) + " is not in the complex");
  Json rows = Json::array();
  TextTable t({"H vertices", "chi(H)", "psi after", "predicted", "holds"});
  bool all = true;
  for (const auto& s : subs) {
    const auto h = in.complex.restricted_to(s);
    const auto tr = psi_attach_cell(in.complex, h);
    all = all && tr.holds();
    Json row = twin_json(tr);
    row["vertices"] = s;
    row["euler_h"] = euler_characteristic(h);
    rows.push_back(row);
    t.add({"{" + join_ints(s) + "}", std::to_string(euler_characteristic(h)), tr.actual.str(), tr.predicted.str(),
           tr.holds() ? "yes" : "NO"});
  }
  r.json["attachments"] = rows;
  r.text << t.render();
  r.field("holds", all);
  return all ? kOk : kViolation;
}

int cmd_remove(const RunConfig& cfg, Report& r) {
  const auto in = load(cfg);
  connection(in.complex, cfg.budget_simplices);
  r.field("fermi", fermi_characteristic(in.complex));
  std::vector<Simplex> targets;
  if (!cfg.simplex.empty()) {
    try {
      targets.emplace_back(parse_vertex_list(cfg.simplex));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (!in.complex.contains(targets.front())) throw UsageError(targets.front().to_string() + " is not in the complex");
  } else {
    targets = in.complex.facets();
  }
  Json rows = Json::array();
  TextTable t({"x", "psi after", "predicted", "holds"});
  bool all = true;
  for (const auto& x : targets) {
    const auto tr = psi_remove_cell(in.complex, x);
    all = all && tr.holds();
    Json row = twin_json(tr);
    row["x"] = x.to_string();
    rows.push_back(row);
    t.add({x.to_string(), tr.actual.str(), tr.predicted.str(), tr.holds() ? "yes" : "NO"});
  }
  r.json["removals"] = rows;
  r.text << t.render();
  r.field("holds", all);
  return all ? kOk : kViolation;
}

int cmd_betti(const RunConfig& cfg, Report& r) {
  const auto in = load(cfg);
  describe_input(r, in);
  const auto cc = chain_complex(in.complex);
  const bool dd = cc.is_chain_complex();
  const auto b = betti(cc);
  std::int64_t alt = 0;
  for (std::size_t k = 0; k < b.size(); ++k) alt += (k % 2 ? -1 : 1) * b[k];
  r.field("betti", b, "(" + join_ints(b) + ")");
  r.field("boundary_squared_zero", dd);
  const bool ep = alt == euler_characteristic(in.complex);
  r.field("euler_poincare", ep);
  return dd && ep ? kOk : kViolation;
}

Json verdict_json(const SphereVerdict& v) {
  Json j{{"status", to_string(v.status)}, {"nodes", v.nodes}, {"budget_exhausted", v.budget_exhausted}};
  if (v.status == SphereStatus::Sphere) j["dimension"] = v.dimension;
  if (!v.certificate.empty()) j["certificate"] = v.certificate;
  if (!v.witness.empty()) j["witness"] = v.witness;
  return j;
}

std::string verdict_text(const SphereVerdict& v) {
  std::string s = to_string(v.status);
  if (v.status == SphereStatus::Sphere) s += " of dimension " + std::to_string(v.dimension);
  if (!v.witness.empty()) s += " (" + v.witness + ")";
  return s;
}

int cmd_spheres(const RunConfig& cfg, Report& r) {
  const auto in = load(cfg);
  describe_input(r, in);
  barycentric(in.complex, cfg.budget_simplices);
  const auto spec = sphere_spectrum(in.complex);
  Json rows = Json::array();
  TextTable t({"x", "chi(S(x))", "i(x)", "betti(S(x))"});
  for (const auto& row : spec.rows) {
    rows.push_back({{"x", row.simplex.to_string()},
                    {"sphere_euler", row.sphere_euler},
                    {"index", row.index},
                    {"betti", row.betti}});
    t.add({row.simplex.to_string(), std::to_string(row.sphere_euler), std::to_string(row.index),
           "(" + join_ints(row.betti) + ")"});
  }
  r.json["rows"] = rows;
  r.text << t.render();
  r.field("index_values", spec.values, "{" + join_ints(spec.values) + "}");
  r.field("vertex_index_values", spec.vertex_values, "{" + join_ints(spec.vertex_values) + "}");
  SphereOptions so;
  so.node_budget = cfg.budget_nodes;
  so.strict = cfg.strict_spheres;
  SphereRecognizer rec(so);
  const auto g = working_graph(in, cfg);
  const auto sv = rec.sphere(g);
  const auto cv = rec.contractible(g);
  r.json["sphere"] = verdict_json(sv);
  r.json["contractible"] = verdict_json(cv);
  r.text << "sphere: " << verdict_text(sv) << "\ncontractible: " << verdict_text(cv) << '\n';
  return kOk;
}

int cmd_arith(const RunConfig& cfg, Report& r) {
  if (cfg.expr.empty()) throw UsageError("arith needs an expression, e.g. arith \"K3*P2\"");
  const auto g = evaluate_expression(cfg.expr);
  r.field("expression", cfg.expr);
  r.field("vertices", g.order());
  r.field("edges", g.size());
  const auto f = clique_counts(g);
  r.field("f_vector", f.counts, "(" + join_ints(f.counts) + ")");
  r.field("euler_polynomial", euler_polynomial(g).to_string());
  r.field("euler", euler_characteristic(g));
  r.field("fermi", fermi_characteristic(g));
  r.field("index", poincare_hopf_i(g));
  r.field("clique_number", clique_number(g));
  if (!g.empty()) {
    const auto parts = additive_prime_decompose(g);
    std::vector<std::string> names;
    std::string shown;
    for (const auto& p : parts) {
      names.push_back(factor_name(p));
      shown += (shown.empty() ? "" : " + ") + names.back();
    }
    r.field("prime_factors", names, shown);
  }
  if (!g.empty() && g.order() <= kSpectralVertexCap) {
    const auto s = vertex_laplacian_spectrum(g);
    r.field("laplacian_max", tidy(s.max()), fixed(s.max()));
    r.field("laplacian_max_multiplicity", s.multiplicity_of(s.max()));
  }
  return kOk;
}

int cmd_primegraph(const RunConfig& cfg, Report& r) {
  if (cfg.n < 2) throw UsageError("primegraph needs --n N with N >= 2");
  const auto p = build_panel(cfg.n);
  r.field("n", p.n);
  r.field("vertices", p.squarefree.size());
  r.field("g_edges", p.g_n.size());
  r.field("h_edges", p.h_n.size());
  r.field("complex_simplices", p.complex.size());
  bool ok = p.refinement_invariants_hold();
  r.field("refinement_invariants", ok);
  std::optional<GreenReport> green;
  if (cfg.green || cfg.sphere) {
    if (p.squarefree.size() > kPrimeMatrixCap)
      throw UsageError("Green data is capped at " + std::to_string(kPrimeMatrixCap) + " vertices");
    green = prime_green_check(p);
  }
  if (cfg.green) {
    green_rows(r, *green);
    ok = ok && green->holds();
  }
  if (cfg.mertens) {
    const auto m = mertens_euler(p);
    r.field("euler", m.euler);
    r.field("one_minus_mertens", m.one_minus_m);
    r.field("mertens_holds", m.holds());
    ok = ok && m.holds();
  }
  if (cfg.sphere) {
    const Vertex x = static_cast<Vertex>(*cfg.sphere);
    if (!p.g_n.has_vertex(x)) throw UsageError(std::to_string(x) + " is not a vertex of G_" + std::to_string(cfg.n));
    const auto s = unit_sphere(p.g_n, x);
    const auto b = betti(s);
    Json sj;
    sj["x"] = x;
    sj["vertices"] = s.vertices();
    sj["betti"] = b;
    sj["euler"] = euler_characteristic(s);
    sj["index"] = 1 - euler_characteristic(s);
    for (const auto& row : green->rows)
      if (row.vertex == x) sj["green"] = big(row.green);
    r.json["sphere"] = sj;
    r.text << "S(" << x << "): {" << join_ints(s.vertices()) << "}\n"
           << "  betti: (" << join_ints(b) << ")\n"
           << "  euler: " << euler_characteristic(s) << "\n"
           << "  index: " << 1 - euler_characteristic(s) << "\n"
           << "  green: " << sj["green"].dump() << '\n';
  }
  return ok ? kOk : kViolation;
}

int cmd_spectrum(const RunConfig& cfg, Report& r) {
  const auto in = load(cfg);
  const Graph g = in.is_graph ? in.graph : one_skeleton(in.complex);
  const auto s = vertex_laplacian_spectrum(g);
  r.field("vertices", g.order());
  r.field("eigenvalues", tidy_all(s.eigenvalues));
  r.field("lambda2", tidy(s.lambda2), fixed(s.lambda2));
  r.field("max", tidy(s.max()), fixed(s.max()));
  r.field("components", s.zero_multiplicity());
  if (in.complex.size() <= kSpectralVertexCap) r.field("volume_eigenvalues", tidy_all(volume_laplacian_eigs(in.complex)));
  return kOk;
}

int cmd_verify_all(const RunConfig& cfg, Report& r) {
  VerifyOptions o;
  o.seed = cfg.seed;
  o.simplex_budget = cfg.budget_simplices;
  o.node_budget = cfg.budget_nodes;
  o.strict_spheres = cfg.strict_spheres;
  const auto rep = verify_all(o);
  r.field("seed", rep.seed);
  Json checks = Json::array();
  TextTable t({"module", "check", "cases", "failures", "status"});
  for (const auto& c : rep.checks) {
    Json j{{"module", c.module}, {"name", c.name}, {"cases", c.cases}, {"failures", c.failures},
           {"informational", c.informational}, {"ok", c.ok()}};
    if (!c.first_failure.empty()) j["first_failure"] = c.first_failure;
    checks.push_back(j);
    t.add({c.module, c.name, std::to_string(c.cases), std::to_string(c.failures),
           c.informational ? "info" : (c.ok() ? "ok" : "FAIL")});
  }
  r.json["checks"] = checks;
  r.text << t.render();
  for (const auto& c : rep.checks)
    if (!c.first_failure.empty()) r.text << c.module << " / " << c.name << ": first failure " << c.first_failure << '\n';
  r.field("ok", rep.ok());
  return rep.ok() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on finite simplicial complexes and graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--input", cfg.input, "edge list (u v per line) or JSON complex (.json)");
  app.add_option("--expr", cfg.expr, "graph expression such as \"K3*P2\" instead of --input");
  app.add_option("--n", cfg.n, "bound for prime graphs");
  app.add_option("--seed", cfg.seed, "seed for randomized corpora");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--budget-simplices", cfg.budget_simplices, "simplex cap for refinements")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-nodes", cfg.budget_nodes, "node budget for sphere recognition")
      ->check(CLI::PositiveNumber);
  app.add_flag("--strict-spheres", cfg.strict_spheres, "require every punctured sphere to be contractible");

  using Handler = int (*)(const RunConfig&, Report&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    auto* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, h);
    return sub;
  };
  add("complex", "validate and summarize a complex", cmd_complex);
  add("refine", "Barycentric refinement", cmd_refine)->add_flag("--twice", cfg.twice, "also build G2");
  add("connection", "connection graph and Fredholm determinant", cmd_connection);
  add("green", "Green function diagonal against Poincare-Hopf indices", cmd_green);
  add("attach", "psi after attaching a cell along full subcomplexes", cmd_attach)
      ->add_option("--sub", cfg.sub, "comma separated vertices of H (default: 5 seeded random H)");
  add("remove", "psi after removing facets", cmd_remove)
      ->add_option("--simplex", cfg.simplex, "comma separated vertices of the facet (default: every facet)");
  add("betti", "Betti numbers", cmd_betti);
  add("spheres", "unit sphere spectrum and sphere verdicts", cmd_spheres);
  add("arith", "evaluate a graph expression", cmd_arith)->add_option("expression", cfg.expr, "expression");
  auto* pg = add("primegraph", "prime graph panels", cmd_primegraph);
  pg->add_flag("--green", cfg.green, "Green function rows");
  pg->add_flag("--mertens", cfg.mertens, "Euler characteristic against 1 - M(n)");
  pg->add_option("--sphere", cfg.sphere, "report the unit sphere of this vertex");
  add("spectrum", "Laplacian spectra", cmd_spectrum);
  add("verify-all", "every invariant over a seeded corpus", cmd_verify_all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Report report;
  report.json["schema"] = 1;
  int code = kOk;
  try {
    for (const auto& [sub, handler] : commands)
      if (sub->parsed()) {
        report.json["command"] = sub->get_name();
        code = handler(cfg, report);
      }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ExpressionError& e) {
    std::cerr << "error: expression: " << e.what() << '\n';
    return kUsage;
  } catch (const RefinementOverflow& e) {
    std::cerr << "error: " << e.what() << " (raise --budget-simplices)\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: input too large: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (cfg.format == "json")
    std::cout << report.json.dump(2) << '\n';
  else
    std::cout << report.text.str();
  return code;
}
