#include "gtop/complex.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace gtop {

std::int64_t FVector::total() const {
  std::int64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

std::int64_t FVector::euler() const {
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) chi += (k % 2 == 0) ? counts[k] : -counts[k];
  return chi;
}

int FVector::fermi() const {
  std::int64_t odd = 0;
  for (std::size_t k = 1; k < counts.size(); k += 2) odd += counts[k];
  return (odd % 2 == 0) ? 1 : -1;
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices) {
  std::sort(simplices.begin(), simplices.end());
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  SimplicialComplex c;
  c.simplices_ = std::move(simplices);
  c.index_.reserve(c.simplices_.size());
  for (std::size_t i = 0; i < c.simplices_.size(); ++i) c.index_.emplace(c.simplices_[i], i);
  return c;
}

SimplicialComplex SimplicialComplex::generated_by(std::span<const Simplex> generators) {
  std::unordered_set<Simplex, SimplexHash> all;
  for (const auto& g : generators) {
    if (all.contains(g)) continue;
    for (auto& f : g.faces()) all.insert(std::move(f));
  }
  return from_simplices(std::vector<Simplex>(all.begin(), all.end()));
}

int SimplicialComplex::dimension() const {
  return simplices_.empty() ? -1 : simplices_.back().dim();
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Vertex> SimplicialComplex::vertex_set() const {
  std::vector<Vertex> vs;
  for (const auto& s : simplices_)
    for (Vertex v : s.vertices()) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  // A simplex is a facet iff no simplex one dimension up contains it.
  std::unordered_set<Simplex, SimplexHash> covered;
  for (const auto& s : simplices_)
    for (auto& f : s.boundary_faces()) covered.insert(std::move(f));
  std::vector<Simplex> out;
  for (const auto& s : simplices_)
    if (!covered.contains(s)) out.push_back(s);
  return out;
}

std::vector<Simplex> SimplicialComplex::of_dimension(int k) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_)
    if (s.dim() == k) out.push_back(s);
  return out;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  return std::all_of(simplices_.begin(), simplices_.end(),
                     [&](const Simplex& s) { return other.contains(s); });
}

SimplicialComplex SimplicialComplex::intersection(const SimplicialComplex& other) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_)
    if (other.contains(s)) out.push_back(s);
  return from_simplices(std::move(out));
}

SimplicialComplex SimplicialComplex::unite(const SimplicialComplex& other) const {
  std::vector<Simplex> out = simplices_;
  out.insert(out.end(), other.simplices_.begin(), other.simplices_.end());
  return from_simplices(std::move(out));
}

SimplicialComplex SimplicialComplex::restricted_to(std::span<const Vertex> keep) const {
  std::vector<Vertex> k(keep.begin(), keep.end());
  std::sort(k.begin(), k.end());
  std::vector<Simplex> out;
  for (const auto& s : simplices_)
    if (std::includes(k.begin(), k.end(), s.vertices().begin(), s.vertices().end()))
      out.push_back(s);
  return from_simplices(std::move(out));
}

SimplicialComplex SimplicialComplex::without(const Simplex& s) const {
  std::vector<Simplex> out;
  out.reserve(simplices_.size());
  for (const auto& t : simplices_)
    if (t != s) out.push_back(t);
  return from_simplices(std::move(out));
}

bool SimplicialComplex::is_full_subcomplex(const SimplicialComplex& sub) const {
  if (!sub.is_subcomplex_of(*this)) return false;
  const auto vs = sub.vertex_set();
  return restricted_to(vs).size() == sub.size();
}

ValidationReport validate(const SimplicialComplex& c) {
  ValidationReport report;
  std::unordered_set<Simplex, SimplexHash> missing;
  for (const auto& s : c.simplices())
    for (auto& f : s.boundary_faces())
      if (!c.contains(f)) missing.insert(std::move(f));
  // Faces of missing faces are reported too, so the list is the full closure gap.
  std::vector<Simplex> frontier(missing.begin(), missing.end());
  while (!frontier.empty()) {
    Simplex s = std::move(frontier.back());
    frontier.pop_back();
    for (auto& f : s.boundary_faces())
      if (!c.contains(f) && missing.insert(f).second) frontier.push_back(std::move(f));
  }
  report.missing_faces.assign(missing.begin(), missing.end());
  std::sort(report.missing_faces.begin(), report.missing_faces.end());
  report.valid = report.missing_faces.empty();
  return report;
}

namespace {

void extend_cliques(const Graph& g, std::vector<std::uint32_t>& clique,
                    const std::vector<std::uint32_t>& candidates,
                    const std::function<void(std::span<const std::uint32_t>)>& visit) {
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto v = candidates[i];
    clique.push_back(v);
    visit(clique);
    // Candidates after v that are adjacent to v; both lists are sorted.
    std::vector<std::uint32_t> next;
    const auto& nb = g.neighbor_indices(v);
    std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                          candidates.end(), nb.begin(), nb.end(), std::back_inserter(next));
    if (!next.empty()) extend_cliques(g, clique, next, visit);
    clique.pop_back();
  }
}

}  // namespace

void for_each_clique(const Graph& g,
                     const std::function<void(std::span<const std::uint32_t>)>& visit) {
  std::vector<std::uint32_t> all(g.order());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::uint32_t> clique;
  extend_cliques(g, clique, all, visit);
}

FVector clique_counts(const Graph& g) {
  FVector f;
  for_each_clique(g, [&](std::span<const std::uint32_t> c) {
    if (f.counts.size() < c.size()) f.counts.resize(c.size(), 0);
    ++f.counts[c.size() - 1];
  });
  return f;
}

std::int64_t euler_characteristic(const Graph& g) { return clique_counts(g).euler(); }

std::size_t clique_number(const Graph& g) { return clique_counts(g).counts.size(); }

SimplicialComplex whitney_complex(const Graph& g) {
  std::vector<Simplex> simplices;
  for_each_clique(g, [&](std::span<const std::uint32_t> c) {
    std::vector<Vertex> vs;
    vs.reserve(c.size());
    for (auto i : c) vs.push_back(g.label(i));
    simplices.push_back(Simplex::from_sorted(std::move(vs)));
  });
  return SimplicialComplex::from_simplices(std::move(simplices));
}

FVector f_vector(const SimplicialComplex& c) {
  FVector f;
  if (c.empty()) return f;
  f.counts.assign(static_cast<std::size_t>(c.dimension()) + 1, 0);
  for (const auto& s : c.simplices()) ++f.counts[static_cast<std::size_t>(s.dim())];
  return f;
}

std::int64_t euler_characteristic(const SimplicialComplex& c) { return f_vector(c).euler(); }

int fermi_characteristic(const SimplicialComplex& c) { return f_vector(c).fermi(); }

namespace {

// Every graph visited by the recursion is an induced subgraph of the input, so
// the sorted index subset identifies it.
class InductiveDimension {
 public:
  explicit InductiveDimension(const Graph& g) : g_(g) {}

  Rational of(const std::vector<std::uint32_t>& subset) {
    if (subset.empty()) return Rational(-1);
    if (auto it = memo_.find(subset); it != memo_.end()) return it->second;
    Rational sum(0);
    for (auto x : subset) {
      std::vector<std::uint32_t> sphere;
      const auto& nb = g_.neighbor_indices(x);
      std::set_intersection(subset.begin(), subset.end(), nb.begin(), nb.end(),
                            std::back_inserter(sphere));
      sum += 1 + of(sphere);
    }
    Rational result = sum / static_cast<long long>(subset.size());
    memo_.emplace(subset, result);
    return result;
  }

 private:
  const Graph& g_;
  std::map<std::vector<std::uint32_t>, Rational> memo_;
};

}  // namespace

Rational inductive_dimension(const Graph& g) {
  std::vector<std::uint32_t> all(g.order());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  return InductiveDimension(g).of(all);
}

Graph one_skeleton(const SimplicialComplex& c) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (const auto& s : c.simplices()) {
    if (s.dim() == 0) vs.push_back(s.front());
    if (s.dim() == 1) es.emplace_back(s.front(), s.back());
  }
  return Graph(std::move(vs), es);
}

}  // namespace gtop
