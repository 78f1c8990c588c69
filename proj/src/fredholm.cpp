#include "gtop/fredholm.hpp"

#include <algorithm>
#include <stdexcept>

namespace gtop {

bool GreenReport::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const GreenRow& r) { return r.match; });
}

bool GreenReport::holds() const {
  return abs(determinant) == 1 && determinant == psi_product && all_match();
}

IntMatrix fredholm_matrix(const ConnectionGraph& cg) {
  return IntMatrix::one_plus_adjacency(cg.graph);
}

GreenReport green_report_for(const Graph& sphere_graph, const Graph& matrix_graph,
                             const std::vector<int>& dims) {
  if (sphere_graph.vertices() != matrix_graph.vertices() || dims.size() != sphere_graph.order())
    throw std::invalid_argument("green report needs matching vertex sets");
  const IntMatrix m = IntMatrix::one_plus_adjacency(matrix_graph);
  GreenReport report;
  report.determinant = det_exact(m);
  int psi = 1;
  for (int d : dims)
    if (d % 2 != 0) psi = -psi;
  report.psi_product = psi;
  const IntMatrix g = green_inverse(m);
  report.rows.reserve(sphere_graph.order());
  for (std::size_t i = 0; i < sphere_graph.order(); ++i) {
    GreenRow row;
    row.vertex = sphere_graph.label(i);
    row.dim = dims[i];
    row.sphere_euler = euler_characteristic(sphere_graph.induced_by_index(sphere_graph.neighbor_indices(i)));
    row.index = 1 - row.sphere_euler;
    row.green = g(i, i);
    row.match = row.green == row.index;
    report.rows.push_back(std::move(row));
  }
  return report;
}

GreenReport green_report(const SimplicialComplex& c) {
  const auto g1 = barycentric(c);
  const auto cg = connection(c);
  std::vector<int> dims;
  dims.reserve(c.size());
  for (const auto& s : c.simplices()) dims.push_back(s.dim());
  GreenReport report = green_report_for(g1.graph, cg.graph, dims);
  for (auto& row : report.rows) row.simplex = g1.simplex(row.vertex);
  return report;
}

TwinResult psi_attach_cell(const SimplicialComplex& c, const SimplicialComplex& h) {
  if (!h.is_subcomplex_of(c)) throw std::invalid_argument("h is not a subcomplex of c");
  if (!c.is_full_subcomplex(h))
    throw std::invalid_argument("h is not a full subcomplex of c (attach identity needs one)");
  const auto cg = connection(c);
  const IntMatrix m = fredholm_matrix(cg);
  const auto hv = h.vertex_set();
  std::vector<BigInt> border(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto vs = c.simplices()[i].vertices();
    const bool meets = std::any_of(vs.begin(), vs.end(), [&](Vertex v) {
      return std::binary_search(hv.begin(), hv.end(), v);
    });
    border[i] = meets ? 1 : 0;
  }
  TwinResult out;
  out.actual = det_exact(m.bordered(border, 1));
  out.predicted = BigInt(1 - euler_characteristic(h)) * det_exact(m);
  return out;
}

TwinResult psi_remove_cell(const SimplicialComplex& c, const Simplex& x) {
  const auto idx = c.index_of(x);
  if (!idx) throw std::invalid_argument("simplex " + x.to_string() + " is not in the complex");
  for (const auto& s : c.simplices())
    if (x.is_proper_face_of(s))
      throw std::invalid_argument("removal breaks closure: " + x.to_string() + " is a face of " +
                                  s.to_string());
  const auto cg = connection(c);
  const IntMatrix m = fredholm_matrix(cg);
  const auto g1 = barycentric(c);
  const auto sphere = unit_sphere(g1.graph, g1.vertex(x));
  TwinResult out;
  out.actual = det_exact(m.without(*idx));
  out.predicted = BigInt(1 - euler_characteristic(sphere)) * det_exact(m);
  return out;
}

}  // namespace gtop
