#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtop/complex.hpp"
#include "gtop/graph.hpp"

namespace gtop {

/// Malformed input, with a 1-based line number (0 when not line oriented).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
        line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/**
 * Edge-list text: one "u v" pair per line, '#' starts a comment, blank lines
 * are skipped. A line with a single label adds an isolated vertex.
 */
Graph read_edge_list(std::istream& in, const std::string& source = "<input>");
void write_edge_list(std::ostream& out, const Graph& g);

/// JSON array of integer arrays. Simplices are canonicalized; closure is not
/// enforced here (see `validate`).
SimplicialComplex read_complex_json(std::istream& in, const std::string& source = "<input>");
void write_complex_json(std::ostream& out, const SimplicialComplex& c);

/// What a file held: a graph (Whitney complex implied) or a raw complex.
struct LoadedInput {
  bool is_graph = false;
  Graph graph;  // set when is_graph
  SimplicialComplex complex;
};

/// ".json" files are complexes, everything else is an edge list.
LoadedInput load_input(const std::string& path);

/// Plain aligned text table.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> headers) : headers_(std::move(headers)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  [[nodiscard]] std::string render() const;

 private:
  std::vector<std::string> headers_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace gtop
