#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "gtop/bigint.hpp"
#include "gtop/graph.hpp"
#include "gtop/simplex.hpp"

namespace gtop {

/// Simplex counts by dimension, (v0, v1, ..., vd). Empty for the empty complex.
struct FVector {
  std::vector<std::int64_t> counts;

  [[nodiscard]] std::int64_t total() const;
  /// Alternating sum v0 - v1 + v2 - ...
  [[nodiscard]] std::int64_t euler() const;
  /// (-1)^(v1 + v3 + ...)
  [[nodiscard]] int fermi() const;
  [[nodiscard]] int dimension() const { return static_cast<int>(counts.size()) - 1; }

  friend bool operator==(const FVector&, const FVector&) = default;
};

/**
 * Finite set of simplices.
 *
 * Simplices are stored once each in (dim, lex) order with a hash index for
 * membership. Closure under taking faces is *not* enforced by construction so
 * that `validate` can diagnose bad input; `generated_by` builds the closure.
 */
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Deduplicates; does not close under faces.
  static SimplicialComplex from_simplices(std::vector<Simplex> simplices);
  /// Closure of the given simplices under taking nonempty faces.
  static SimplicialComplex generated_by(std::span<const Simplex> generators);
  static SimplicialComplex generated_by(std::initializer_list<Simplex> generators) {
    return generated_by(std::span<const Simplex>(generators.begin(), generators.size()));
  }

  [[nodiscard]] const std::vector<Simplex>& simplices() const { return simplices_; }
  [[nodiscard]] std::size_t size() const { return simplices_.size(); }
  [[nodiscard]] bool empty() const { return simplices_.empty(); }
  /// Maximal simplex dimension, -1 when empty.
  [[nodiscard]] int dimension() const;
  [[nodiscard]] bool contains(const Simplex& s) const { return index_.contains(s); }
  [[nodiscard]] std::optional<std::size_t> index_of(const Simplex& s) const;
  [[nodiscard]] std::vector<Vertex> vertex_set() const;
  [[nodiscard]] std::vector<Simplex> facets() const;
  [[nodiscard]] std::vector<Simplex> of_dimension(int k) const;

  [[nodiscard]] bool is_subcomplex_of(const SimplicialComplex& other) const;
  [[nodiscard]] SimplicialComplex intersection(const SimplicialComplex& other) const;
  [[nodiscard]] SimplicialComplex unite(const SimplicialComplex& other) const;
  /// Full subcomplex: every simplex whose vertices all lie in `keep`.
  [[nodiscard]] SimplicialComplex restricted_to(std::span<const Vertex> keep) const;
  [[nodiscard]] SimplicialComplex without(const Simplex& s) const;
  /// Is `sub` equal to the full subcomplex on its own vertex set?
  [[nodiscard]] bool is_full_subcomplex(const SimplicialComplex& sub) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.simplices_ == b.simplices_;
  }

 private:
  std::vector<Simplex> simplices_;
  std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
};

struct ValidationReport {
  bool valid = true;
  /// Faces of member simplices that are missing from the complex.
  std::vector<Simplex> missing_faces;

  explicit operator bool() const { return valid; }
};

/// Closure check. Canonical form of every simplex is guaranteed by `Simplex`.
ValidationReport validate(const SimplicialComplex& c);

/// Invokes `visit` once per clique (as sorted vertex indices of g), every size >= 1.
void for_each_clique(const Graph& g, const std::function<void(std::span<const std::uint32_t>)>& visit);

/// f-vector of the Whitney complex of g without materializing it.
FVector clique_counts(const Graph& g);
/// Euler characteristic of the Whitney complex of g.
std::int64_t euler_characteristic(const Graph& g);
/// Largest clique size (0 for the empty graph).
std::size_t clique_number(const Graph& g);

SimplicialComplex whitney_complex(const Graph& g);
FVector f_vector(const SimplicialComplex& c);
std::int64_t euler_characteristic(const SimplicialComplex& c);
int fermi_characteristic(const SimplicialComplex& c);

/// Average over vertices of 1 + dim(S(x)), with dim(empty graph) = -1.
Rational inductive_dimension(const Graph& g);

/// 1-skeleton: vertices and edges of c as a graph.
Graph one_skeleton(const SimplicialComplex& c);

}  // namespace gtop
