#include "gtop/refinement.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace gtop {

const Simplex& SimplexGraph::simplex(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= simplex_of_vertex.size())
    throw std::out_of_range("unknown vertex " + std::to_string(v));
  return simplex_of_vertex[static_cast<std::size_t>(v)];
}

Vertex SimplexGraph::vertex(const Simplex& s) const {
  auto it = vertex_of_simplex.find(s);
  if (it == vertex_of_simplex.end())
    throw std::out_of_range("simplex " + s.to_string() + " is not in the source complex");
  return it->second;
}

namespace {

void check_budget(std::size_t n, std::size_t budget, const char* what) {
  if (n > budget)
    throw RefinementOverflow(std::string(what) + " needs " + std::to_string(n) +
                             " simplices, budget is " + std::to_string(budget));
}

void index_simplices(const SimplicialComplex& c, SimplexGraph& out) {
  out.simplex_of_vertex = c.simplices();
  out.vertex_of_simplex.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    out.vertex_of_simplex.emplace(c.simplices()[i], static_cast<Vertex>(i));
}

std::vector<Vertex> iota_labels(std::size_t n) {
  std::vector<Vertex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Vertex>(i);
  return v;
}

}  // namespace

RefinedGraph barycentric(const SimplicialComplex& c, std::size_t simplex_budget) {
  check_budget(c.size(), simplex_budget, "barycentric refinement");
  RefinedGraph r;
  index_simplices(c, r);
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < c.size(); ++b) {
    const auto& s = c.simplices()[b];
    if (s.dim() == 0) continue;
    for (const auto& f : s.faces()) {
      if (f == s) continue;
      // Faces missing from an unvalidated complex are simply skipped.
      if (auto a = c.index_of(f)) edges.emplace_back(static_cast<Vertex>(*a), static_cast<Vertex>(b));
    }
  }
  r.graph = Graph(iota_labels(c.size()), edges);
  return r;
}

ConnectionGraph connection(const SimplicialComplex& c, std::size_t simplex_budget) {
  check_budget(c.size(), simplex_budget, "connection graph");
  ConnectionGraph r;
  index_simplices(c, r);
  std::map<Vertex, std::vector<std::uint32_t>> star;
  for (std::uint32_t i = 0; i < c.size(); ++i)
    for (Vertex v : c.simplices()[i].vertices()) star[v].push_back(i);
  std::vector<std::vector<std::uint32_t>> adj(c.size());
  for (const auto& [v, members] : star)
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        adj[members[a]].push_back(members[b]);
        adj[members[b]].push_back(members[a]);
      }
  r.graph = Graph::from_adjacency(c.size(), adj);
  return r;
}

SecondRefinement barycentric2(const SimplicialComplex& c, std::size_t simplex_budget) {
  SecondRefinement out;
  out.first = barycentric(c, simplex_budget);
  const auto f = clique_counts(out.first.graph);
  check_budget(static_cast<std::size_t>(f.total()), simplex_budget, "second barycentric refinement");
  out.second = barycentric(whitney_complex(out.first.graph), simplex_budget);
  return out;
}

std::vector<Simplex> SecondRefinement::chain(Vertex v) const {
  std::vector<Simplex> out;
  for (Vertex u : second.simplex(v).vertices()) out.push_back(first.simplex(u));
  // G1 labels follow (dim, lex) order, so the chain is already increasing.
  return out;
}

Graph unit_sphere(const Graph& g, Vertex x) {
  const auto i = g.index_of(x);
  const auto& nb = g.neighbor_indices(i);
  return g.induced_by_index(nb);
}

SphereDecomposition stable_unstable(const RefinedGraph& r, Vertex x) {
  SphereDecomposition d;
  d.center = x;
  d.sphere = unit_sphere(r.graph, x);
  const auto& center = r.simplex(x);
  std::vector<Vertex> down, up;
  for (Vertex y : d.sphere.vertices()) {
    const auto& s = r.simplex(y);
    if (s.size() < center.size())
      down.push_back(y);
    else
      up.push_back(y);
  }
  d.stable = d.sphere.induced(down);
  d.unstable = d.sphere.induced(up);
  return d;
}

Graph positive_sphere_as_intersection(const RefinedGraph& r, Vertex x) {
  const auto& center = r.simplex(x);
  std::vector<Vertex> common;
  bool first = true;
  for (Vertex p : center.vertices()) {
    const Vertex pv = r.vertex(Simplex::from_sorted({p}));
    auto nb = r.graph.neighbors(pv);
    if (first) {
      common = std::move(nb);
      first = false;
    } else {
      std::vector<Vertex> next;
      std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(),
                            std::back_inserter(next));
      common = std::move(next);
    }
  }
  std::erase(common, x);
  return r.graph.induced(common);
}

Graph refined_subgraph(const RefinedGraph& r, const SimplicialComplex& sub) {
  std::vector<Vertex> keep;
  keep.reserve(sub.size());
  for (const auto& s : sub.simplices()) keep.push_back(r.vertex(s));
  return r.graph.induced(keep);
}

bool intersection_refinement_check(const SimplicialComplex& c, const SimplicialComplex& h,
                                   const SimplicialComplex& k) {
  if (!h.is_subcomplex_of(c)) throw std::invalid_argument("h is not a subcomplex of c");
  if (!k.is_subcomplex_of(c)) throw std::invalid_argument("k is not a subcomplex of c");
  const auto g1 = barycentric(c);
  const Graph rhs = graph_intersection(refined_subgraph(g1, h), refined_subgraph(g1, k));

  // Left side built independently, then carried into G1 labels via simplices.
  const auto hk = h.intersection(k);
  const auto lhs_local = barycentric(hk);
  std::vector<Vertex> vs;
  for (const auto& s : hk.simplices()) vs.push_back(g1.vertex(s));
  std::vector<Edge> es;
  for (const auto& [a, b] : lhs_local.graph.edges()) {
    Vertex u = g1.vertex(lhs_local.simplex(a));
    Vertex w = g1.vertex(lhs_local.simplex(b));
    es.emplace_back(std::min(u, w), std::max(u, w));
  }
  const Graph lhs(std::move(vs), es);
  return lhs == rhs;
}

}  // namespace gtop
