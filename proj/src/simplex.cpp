#include "gtop/simplex.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace gtop {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("simplex must be nonempty");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw std::invalid_argument("simplex has a repeated vertex: " + to_string());
  if (vertices_.front() < 0)
    throw std::invalid_argument("simplex has a negative vertex label: " + to_string());
}

Simplex::Simplex(std::initializer_list<Vertex> vertices)
    : Simplex(std::vector<Vertex>(vertices)) {}

Simplex Simplex::from_sorted(std::vector<Vertex> sorted) {
  assert(!sorted.empty());
  assert(std::adjacent_find(sorted.begin(), sorted.end(),
                            [](Vertex a, Vertex b) { return a >= b; }) == sorted.end());
  return Simplex(Trusted{}, std::move(sorted));
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

bool Simplex::intersects(const Simplex& other) const {
  auto a = vertices_.begin();
  auto b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return true;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return false;
}

bool Simplex::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::vector<Simplex> Simplex::faces() const {
  const std::size_t k = vertices_.size();
  if (k >= 31) throw std::length_error("simplex too large to enumerate faces");
  std::vector<Simplex> out;
  out.reserve((std::size_t{1} << k) - 1);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    std::vector<Vertex> f;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::uint32_t{1} << i)) f.push_back(vertices_[i]);
    out.push_back(from_sorted(std::move(f)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Simplex> Simplex::boundary_faces() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  for (std::size_t j = 0; j < vertices_.size(); ++j) {
    std::vector<Vertex> f;
    f.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (i != j) f.push_back(vertices_[i]);
    out.push_back(from_sorted(std::move(f)));
  }
  return out;
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vertices_.size(); ++i) os << (i ? "," : "") << vertices_[i];
  os << '}';
  return os.str();
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
  if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                b.vertices_.begin(), b.vertices_.end());
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  // FNV-1a over the labels
  std::uint64_t h = 1469598103934665603ULL;
  for (Vertex v : s.vertices()) {
    h ^= static_cast<std::uint32_t>(v);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace gtop
