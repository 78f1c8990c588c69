#include "gtop/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace gtop {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

Vertex parse_label(const std::string& tok, const std::string& source, std::size_t line) {
  Vertex v = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(source, line, "expected an integer vertex label, got '" + tok + "'");
  if (v < 0) throw ParseError(source, line, "negative vertex label " + tok);
  return v;
}

}  // namespace

Graph read_edge_list(std::istream& in, const std::string& source) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto t = tokens(line);
    if (t.empty()) continue;
    if (t.size() > 2) throw ParseError(source, n, "expected 'u v', got " + std::to_string(t.size()) + " fields");
    const Vertex a = parse_label(t[0], source, n);
    vertices.push_back(a);
    if (t.size() == 1) continue;
    const Vertex b = parse_label(t[1], source, n);
    if (a == b) throw ParseError(source, n, "self loop at " + t[0]);
    vertices.push_back(b);
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return Graph(std::move(vertices), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.degree_at(i) == 0) out << g.label(i) << '\n';
  for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

SimplicialComplex read_complex_json(std::istream& in, const std::string& source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source, 0, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError(source, 0, "expected an array of simplices");
  std::vector<Simplex> simplices;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& s = j[i];
    if (!s.is_array() || s.empty())
      throw ParseError(source, 0, "simplex " + std::to_string(i) + " is not a nonempty array");
    std::vector<Vertex> vs;
    for (const auto& v : s) {
      if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > INT32_MAX)
        throw ParseError(source, 0, "simplex " + std::to_string(i) + " has a bad label");
      vs.push_back(v.get<Vertex>());
    }
    try {
      simplices.emplace_back(std::move(vs));
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, 0, "simplex " + std::to_string(i) + ": " + e.what());
    }
  }
  return SimplicialComplex::from_simplices(std::move(simplices));
}

void write_complex_json(std::ostream& out, const SimplicialComplex& c) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& s : c.simplices()) j.push_back(std::vector<Vertex>(s.vertices().begin(), s.vertices().end()));
  out << j.dump() << '\n';
}

LoadedInput load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  LoadedInput r;
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  if (json) {
    r.complex = read_complex_json(in, path);
  } else {
    try {
      r.graph = read_edge_list(in, path);
    } catch (const std::invalid_argument& e) {
      throw ParseError(path, 0, e.what());
    }
    r.is_graph = true;
    r.complex = whitney_complex(r.graph);
  }
  return r;
}

std::string TextTable::render() const {
  std::vector<std::size_t> width(headers_.size(), 0);
  for (std::size_t c = 0; c < headers_.size(); ++c) width[c] = headers_[c].size();
  for (const auto& r : rows_)
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string cell = c < cells.size() ? cells[c] : "";
      os << (c ? "  " : "") << std::string(width[c] - cell.size(), ' ') << cell;
    }
    os << '\n';
  };
  line(headers_);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& r : rows_) line(r);
  return os.str();
}

}  // namespace gtop
