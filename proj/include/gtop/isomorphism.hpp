#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "gtop/graph.hpp"

namespace gtop {

inline constexpr std::size_t kCanonicalVertexCap = 10;
inline constexpr std::size_t kIsomorphismVertexCap = 40;

/**
 * Memo key for a graph.
 *
 * Up to kCanonicalVertexCap vertices the key is a canonical form (equal keys
 * iff isomorphic), found by individualization-refinement with twin pruning.
 * Larger graphs, or searches that run past the leaf budget, get an exact
 * labeled encoding. The two kinds never collide.
 */
std::string canonical_key(const Graph& g);

/// True when `canonical_key(g)` is isomorphism-invariant.
bool has_canonical_key(const std::string& key);

class IsomorphismOverflow : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Exact isomorphism test. Throws IsomorphismOverflow above `max_vertices`.
bool are_isomorphic(const Graph& g, const Graph& h,
                    std::size_t max_vertices = kIsomorphismVertexCap);

}  // namespace gtop
