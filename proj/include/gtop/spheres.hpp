#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "gtop/complex.hpp"
#include "gtop/homology.hpp"
#include "gtop/refinement.hpp"

namespace gtop {

enum class SphereStatus { Sphere, Contractible, Neither, Unknown };

std::string to_string(SphereStatus s);

struct SphereVerdict {
  SphereStatus status = SphereStatus::Unknown;
  int dimension = -2;  // meaningful for Sphere only
  /// Contractible: vertices removed in order until one vertex is left (that
  /// vertex comes last). Sphere: the punctured vertex, then the removal
  /// sequence of the contractible remainder.
  std::vector<Vertex> certificate;
  /// Why the graph failed, when it did.
  std::string witness;
  bool budget_exhausted = false;
  std::size_t nodes = 0;

  [[nodiscard]] bool is_sphere(int d) const { return status == SphereStatus::Sphere && dimension == d; }
  [[nodiscard]] bool contractible() const { return status == SphereStatus::Contractible; }
};

struct SphereOptions {
  std::size_t node_budget = 1'000'000;
  std::size_t vertex_cap = 30;
  /// Require G - x contractible for every x, not just one.
  bool strict = false;
};

/**
 * Evako recognizer with a memo shared across calls.
 *
 * Only decided answers are memoized, keyed by `canonical_key`, so results do
 * not depend on call order. Lookups take a shared lock and inserts an
 * exclusive one; one recognizer may serve several threads.
 */
class SphereRecognizer {
 public:
  explicit SphereRecognizer(SphereOptions options = {}) : options_(options) {}

  SphereVerdict contractible(const Graph& g);
  SphereVerdict sphere(const Graph& g);

  [[nodiscard]] const SphereOptions& options() const { return options_; }

 private:
  enum class Tri { No, Yes, Unknown };
  struct Budget {
    std::size_t nodes = 0;
    bool exhausted = false;
  };
  static constexpr int kNotSphere = -2;
  static constexpr int kUnknownDim = -3;

  Tri contractible_rec(const Graph& g, Budget& b);
  /// Sphere dimension, kNotSphere or kUnknownDim.
  int sphere_rec(const Graph& g, Budget& b, std::string* witness);
  bool spend(Budget& b);

  std::vector<Vertex> contraction_sequence(Graph g, Budget& b);

  std::optional<bool> lookup_contractible(const std::string& key) const;
  std::optional<int> lookup_sphere(const std::string& key) const;
  void store_contractible(const std::string& key, bool v);
  void store_sphere(const std::string& key, int d);

  SphereOptions options_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, bool> contractible_memo_;
  std::unordered_map<std::string, int> sphere_memo_;
};

SphereVerdict is_contractible(const Graph& g, const SphereOptions& options = {});
SphereVerdict is_sphere(const Graph& g, const SphereOptions& options = {});

struct SphereSpectrumRow {
  Vertex vertex = 0;
  Simplex simplex{0};
  std::int64_t sphere_euler = 0;
  std::int64_t index = 0;  // 1 - chi(S(x))
  BettiVector betti;
};

struct SphereSpectrum {
  std::vector<SphereSpectrumRow> rows;  // one per vertex of G1
  std::set<std::int64_t> values;        // {i(x) : x in G1}
  std::set<std::int64_t> vertex_values; // {i(x) : x a 0-simplex}
  std::set<BettiVector> betti_spectrum;
};

SphereSpectrum sphere_spectrum(const SimplicialComplex& c);

/// {chi(S(x)) : x in g}.
std::set<std::int64_t> unit_sphere_euler_values(const Graph& g);

}  // namespace gtop
