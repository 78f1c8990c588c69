#include "gtop/homology.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

#include "gtop/spectral.hpp"

namespace gtop {

bool ChainComplexData::is_chain_complex() const {
  for (std::size_t k = 1; k + 1 < boundary.size(); ++k)
    if (!(boundary[k] * boundary[k + 1]).is_zero()) return false;
  return true;
}

ChainComplexData chain_complex(const SimplicialComplex& c) {
  ChainComplexData cc;
  const int d = c.dimension();
  if (d < 0) return cc;
  cc.cells.resize(static_cast<std::size_t>(d) + 1);
  for (const auto& s : c.simplices()) cc.cells[static_cast<std::size_t>(s.dim())].push_back(s);

  std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> pos(cc.cells.size());
  for (std::size_t k = 0; k < cc.cells.size(); ++k)
    for (std::size_t i = 0; i < cc.cells[k].size(); ++i) pos[k].emplace(cc.cells[k][i], i);

  cc.boundary.reserve(cc.cells.size());
  cc.boundary.emplace_back(0, cc.cells[0].size());
  for (std::size_t k = 1; k < cc.cells.size(); ++k) {
    IntMatrix b(cc.cells[k - 1].size(), cc.cells[k].size());
    for (std::size_t j = 0; j < cc.cells[k].size(); ++j) {
      const auto faces = cc.cells[k][j].boundary_faces();
      for (std::size_t f = 0; f < faces.size(); ++f) {
        auto it = pos[k - 1].find(faces[f]);
        if (it == pos[k - 1].end())
          throw std::invalid_argument("complex is not closed: missing " + faces[f].to_string());
        b(it->second, j) = (f % 2 == 0) ? 1 : -1;
      }
    }
    cc.boundary.push_back(std::move(b));
  }
  return cc;
}

BettiVector betti(const ChainComplexData& cc) {
  const std::size_t n = cc.cells.size();
  std::vector<std::size_t> rank(n + 1, 0);
  for (std::size_t k = 1; k < n; ++k) rank[k] = rank_exact(cc.boundary[k]);
  BettiVector b(n);
  for (std::size_t k = 0; k < n; ++k)
    b[k] = static_cast<std::int64_t>(cc.cells[k].size() - rank[k] - rank[k + 1]);
  return b;
}

BettiVector betti(const SimplicialComplex& c) { return betti(chain_complex(c)); }

BettiVector betti(const Graph& g) { return betti(whitney_complex(g)); }

namespace {

IntMatrix laplacian_from(const IntMatrix& lower, const IntMatrix* upper) {
  IntMatrix l = lower.transpose() * lower;
  if (upper && upper->cols() > 0) l = l + (*upper) * upper->transpose();
  return l;
}

}  // namespace

IntMatrix form_laplacian(const SimplicialComplex& c, int k) {
  const int d = c.dimension();
  if (k < 0 || k > d)
    throw std::out_of_range("form degree " + std::to_string(k) + " outside [0, " +
                            std::to_string(d) + "]");
  const auto cc = chain_complex(c);
  const auto ku = static_cast<std::size_t>(k);
  const IntMatrix* up = (ku + 1 < cc.boundary.size()) ? &cc.boundary[ku + 1] : nullptr;
  return laplacian_from(cc.boundary[ku], up);
}

IntMatrix volume_laplacian(const SimplicialComplex& c) {
  const int d = c.dimension();
  if (d < 0) return {};
  if (d > 0) return form_laplacian(c, d);
  const std::size_t n = c.size();
  IntMatrix ones(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ones(i, j) = 1;
  return ones;
}

std::vector<double> volume_laplacian_eigs(const SimplicialComplex& c) {
  return symmetric_eigenvalues(volume_laplacian(c));
}

}  // namespace gtop
