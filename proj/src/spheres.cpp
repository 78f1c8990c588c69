#include "gtop/spheres.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "gtop/isomorphism.hpp"

namespace gtop {

std::string to_string(SphereStatus s) {
  switch (s) {
    case SphereStatus::Sphere: return "sphere";
    case SphereStatus::Contractible: return "contractible";
    case SphereStatus::Neither: return "neither";
    case SphereStatus::Unknown: return "unknown";
  }
  return "?";
}

std::optional<bool> SphereRecognizer::lookup_contractible(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = contractible_memo_.find(key);
  if (it == contractible_memo_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> SphereRecognizer::lookup_sphere(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = sphere_memo_.find(key);
  if (it == sphere_memo_.end()) return std::nullopt;
  return it->second;
}

void SphereRecognizer::store_contractible(const std::string& key, bool v) {
  std::unique_lock lock(mutex_);
  contractible_memo_.emplace(key, v);
}

void SphereRecognizer::store_sphere(const std::string& key, int d) {
  std::unique_lock lock(mutex_);
  sphere_memo_.emplace(key, d);
}

bool SphereRecognizer::spend(Budget& b) {
  if (b.exhausted) return false;
  if (++b.nodes > options_.node_budget) {
    b.exhausted = true;
    return false;
  }
  return true;
}

namespace {

bool has_dominating_vertex(const Graph& g) {
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.degree_at(i) + 1 == g.order()) return true;
  return false;
}

// Candidates for removal, most promising first: high degree vertices have
// large spheres that tend to be cones.
std::vector<std::size_t> removal_order(const Graph& g) {
  std::vector<std::size_t> idx(g.order());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return g.degree_at(a) > g.degree_at(b); });
  return idx;
}

}  // namespace

SphereRecognizer::Tri SphereRecognizer::contractible_rec(const Graph& g, Budget& b) {
  if (g.empty()) return Tri::No;
  if (g.order() == 1 || has_dominating_vertex(g)) return Tri::Yes;
  if (!g.connected() || euler_characteristic(g) != 1) return Tri::No;
  if (g.order() > options_.vertex_cap) return Tri::Unknown;

  const std::string key = canonical_key(g);
  if (auto hit = lookup_contractible(key)) return *hit ? Tri::Yes : Tri::No;
  if (!spend(b)) return Tri::Unknown;

  bool unknown = false;
  for (std::size_t i : removal_order(g)) {
    const Tri s = contractible_rec(g.induced_by_index(g.neighbor_indices(i)), b);
    if (s == Tri::No) continue;
    const Tri rest = contractible_rec(g.without(g.label(i)), b);
    if (s == Tri::Yes && rest == Tri::Yes) {
      store_contractible(key, true);
      return Tri::Yes;
    }
    if (s == Tri::Unknown || rest == Tri::Unknown) unknown = true;
    if (b.exhausted) return Tri::Unknown;
  }
  if (unknown) return Tri::Unknown;
  store_contractible(key, false);
  return Tri::No;
}

int SphereRecognizer::sphere_rec(const Graph& g, Budget& b, std::string* witness) {
  if (g.empty()) return -1;
  if (g.order() > options_.vertex_cap) return kUnknownDim;
  const std::string key = canonical_key(g);
  if (auto hit = lookup_sphere(key)) {
    if (*hit == kNotSphere && witness) *witness = "not a sphere (memoized)";
    return *hit;
  }
  if (!spend(b)) return kUnknownDim;

  auto reject = [&](std::string why) {
    if (witness) *witness = std::move(why);
    store_sphere(key, kNotSphere);
    return kNotSphere;
  };

  int d = kUnknownDim;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const int ds = sphere_rec(g.induced_by_index(g.neighbor_indices(i)), b, nullptr);
    if (ds == kUnknownDim) return kUnknownDim;
    if (ds == kNotSphere)
      return reject("unit sphere of " + std::to_string(g.label(i)) + " is not a sphere");
    if (d == kUnknownDim) d = ds + 1;
    if (ds + 1 != d)
      return reject("unit spheres of mixed dimension at " + std::to_string(g.label(i)));
  }
  const std::int64_t expected_chi = (d % 2 == 0) ? 2 : 0;
  if (euler_characteristic(g) != expected_chi)
    return reject("Euler characteristic differs from 1 + (-1)^" + std::to_string(d));

  bool any = false, unknown = false;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const Tri t = contractible_rec(g.without(g.label(i)), b);
    if (t == Tri::Yes) {
      any = true;
      if (!options_.strict) break;
    } else if (t == Tri::Unknown) {
      unknown = true;
    } else if (options_.strict) {
      return reject("removing " + std::to_string(g.label(i)) + " leaves a non-contractible graph");
    }
  }
  if (any && !(options_.strict && unknown)) {
    store_sphere(key, d);
    return d;
  }
  if (unknown) return kUnknownDim;
  return reject("no punctured graph is contractible");
}

std::vector<Vertex> SphereRecognizer::contraction_sequence(Graph g, Budget& b) {
  std::vector<Vertex> seq;
  while (g.order() > 1) {
    bool found = false;
    for (std::size_t i : removal_order(g)) {
      if (contractible_rec(g.induced_by_index(g.neighbor_indices(i)), b) != Tri::Yes) continue;
      Graph rest = g.without(g.label(i));
      if (contractible_rec(rest, b) != Tri::Yes) continue;
      seq.push_back(g.label(i));
      g = std::move(rest);
      found = true;
      break;
    }
    if (!found) return {};  // only reachable when the budget ran out mid-replay
  }
  seq.push_back(g.label(0));
  return seq;
}

SphereVerdict SphereRecognizer::contractible(const Graph& g) {
  Budget b;
  SphereVerdict v;
  const Tri t = contractible_rec(g, b);
  v.nodes = b.nodes;
  v.budget_exhausted = b.exhausted;
  if (t == Tri::Yes) {
    v.status = SphereStatus::Contractible;
    v.certificate = contraction_sequence(g, b);
  } else if (t == Tri::No) {
    v.status = SphereStatus::Neither;
    if (g.empty())
      v.witness = "empty graph";
    else if (!g.connected())
      v.witness = "disconnected";
    else if (euler_characteristic(g) != 1)
      v.witness = "Euler characteristic " + std::to_string(euler_characteristic(g));
    else
      v.witness = "no vertex with contractible sphere and contractible complement";
  } else {
    v.status = SphereStatus::Unknown;
    v.witness = g.order() > options_.vertex_cap ? "above vertex cap" : "node budget exhausted";
  }
  return v;
}

SphereVerdict SphereRecognizer::sphere(const Graph& g) {
  Budget b;
  SphereVerdict v;
  std::string why;
  const int d = sphere_rec(g, b, &why);
  v.nodes = b.nodes;
  v.budget_exhausted = b.exhausted;
  if (d >= -1) {
    v.status = SphereStatus::Sphere;
    v.dimension = d;
    for (Vertex x : g.vertices()) {
      Graph rest = g.without(x);
      if (contractible_rec(rest, b) == Tri::Yes) {
        v.certificate.push_back(x);
        const auto tail = contraction_sequence(rest, b);
        v.certificate.insert(v.certificate.end(), tail.begin(), tail.end());
        break;
      }
    }
    return v;
  }
  if (d == kUnknownDim) {
    v.status = SphereStatus::Unknown;
    v.witness = g.order() > options_.vertex_cap ? "above vertex cap" : "node budget exhausted";
    return v;
  }
  // Not a sphere; it may still be contractible.
  SphereVerdict c = contractible(g);
  c.nodes += v.nodes;
  if (c.status == SphereStatus::Neither) c.witness = why;
  return c;
}

SphereVerdict is_contractible(const Graph& g, const SphereOptions& options) {
  SphereRecognizer r(options);
  return r.contractible(g);
}

SphereVerdict is_sphere(const Graph& g, const SphereOptions& options) {
  SphereRecognizer r(options);
  return r.sphere(g);
}

SphereSpectrum sphere_spectrum(const SimplicialComplex& c) {
  const auto r = barycentric(c);
  SphereSpectrum out;
  for (Vertex x : r.graph.vertices()) {
    SphereSpectrumRow row;
    row.vertex = x;
    row.simplex = r.simplex(x);
    const Graph s = unit_sphere(r.graph, x);
    row.sphere_euler = euler_characteristic(s);
    row.index = 1 - row.sphere_euler;
    row.betti = betti(s);
    out.values.insert(row.index);
    if (row.simplex.dim() == 0) out.vertex_values.insert(row.index);
    out.betti_spectrum.insert(row.betti);
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::set<std::int64_t> unit_sphere_euler_values(const Graph& g) {
  std::set<std::int64_t> out;
  for (std::size_t i = 0; i < g.order(); ++i)
    out.insert(euler_characteristic(g.induced_by_index(g.neighbor_indices(i))));
  return out;
}

}  // namespace gtop
