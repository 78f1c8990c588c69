#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gtop {

/// Opaque vertex label. Labels are non-negative; no geometry is attached.
using Vertex = std::int32_t;

/**
 * A nonempty, strictly increasing sequence of vertex labels.
 *
 * Construction canonicalizes (sorts) the input and rejects empty input,
 * repeated labels and negative labels. Simplices order by dimension first and
 * lexicographically second, which is the deterministic vertex numbering used
 * by every refinement in the library.
 */
class Simplex {
 public:
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices);

  /// Trusted constructor for already canonical input (checked in debug builds).
  static Simplex from_sorted(std::vector<Vertex> sorted);

  [[nodiscard]] std::span<const Vertex> vertices() const { return vertices_; }
  [[nodiscard]] std::size_t size() const { return vertices_.size(); }
  [[nodiscard]] int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  /// (-1)^dim
  [[nodiscard]] int omega() const { return (dim() % 2 == 0) ? 1 : -1; }
  [[nodiscard]] Vertex front() const { return vertices_.front(); }
  [[nodiscard]] Vertex back() const { return vertices_.back(); }

  /// Non-strict containment: every vertex of *this is a vertex of other.
  [[nodiscard]] bool is_face_of(const Simplex& other) const;
  [[nodiscard]] bool is_proper_face_of(const Simplex& other) const {
    return size() < other.size() && is_face_of(other);
  }
  [[nodiscard]] bool intersects(const Simplex& other) const;
  [[nodiscard]] bool contains(Vertex v) const;

  /// All nonempty faces including the simplex itself, in (dim, lex) order.
  [[nodiscard]] std::vector<Simplex> faces() const;
  /// Codimension-one faces; face j omits vertex j.
  [[nodiscard]] std::vector<Simplex> boundary_faces() const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);

 private:
  struct Trusted {};
  Simplex(Trusted, std::vector<Vertex> sorted) : vertices_(std::move(sorted)) {}

  std::vector<Vertex> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace gtop

template <>
struct std::hash<gtop::Simplex> : gtop::SimplexHash {};
