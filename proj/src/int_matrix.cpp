#include "gtop/int_matrix.hpp"

#include <sstream>
#include <utility>

namespace gtop {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::one_plus_adjacency(const Graph& g) {
  IntMatrix m = identity(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    for (auto j : g.neighbor_indices(i)) m(i, j) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

bool IntMatrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

IntMatrix IntMatrix::without(std::size_t i) const {
  if (!square() || i >= rows_) throw std::out_of_range("row/column index out of range");
  IntMatrix m(rows_ - 1, cols_ - 1);
  for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
    if (r == i) continue;
    for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
      if (c == i) continue;
      m(rr, cc++) = (*this)(r, c);
    }
    ++rr;
  }
  return m;
}

IntMatrix IntMatrix::bordered(const std::vector<BigInt>& border, const BigInt& corner) const {
  if (!square() || border.size() != rows_) throw std::invalid_argument("border size mismatch");
  const std::size_t n = rows_;
  IntMatrix m(n + 1, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = (*this)(r, c);
    m(r, n) = border[r];
    m(n, r) = border[r];
  }
  m(n, n) = corner;
  return m;
}

std::string IntMatrix::to_grid() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    os << '\n';
  }
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) p(i, j) += x * b(k, j);
    }
  return p;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  IntMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

namespace {

// Fraction-free forward elimination over the first `pivot_cols` columns of a
// rows x cols working array. Returns the rank reached and accumulates the
// sign of row swaps. Entries left of the pivot in eliminated rows become 0.
struct Elimination {
  std::size_t rank = 0;
  int sign = 1;
  std::vector<std::size_t> pivot_columns;
};

Elimination bareiss(std::vector<BigInt>& a, std::size_t rows, std::size_t cols,
                    std::size_t pivot_cols) {
  Elimination e;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
      e.sign = -e.sign;
    }
    const BigInt piv = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const BigInt f = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt& x = a[i * cols + j];
        x = (piv * x - f * a[r * cols + j]) / prev;
      }
      a[i * cols + c] = 0;
    }
    prev = piv;
    e.pivot_columns.push_back(c);
    ++r;
  }
  e.rank = r;
  return e;
}

std::vector<BigInt> copy_data(const IntMatrix& m) {
  std::vector<BigInt> a;
  a.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a.push_back(m(r, c));
  return a;
}

}  // namespace

BigInt det_exact(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  auto a = copy_data(m);
  const auto e = bareiss(a, n, n, n);
  if (e.rank < n) return 0;
  return e.sign * a[(n - 1) * n + (n - 1)];
}

std::size_t rank_exact(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto a = copy_data(m);
  return bareiss(a, m.rows(), m.cols(), m.cols()).rank;
}

IntMatrix green_inverse(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return {};
  const std::size_t w = 2 * n;
  std::vector<BigInt> a(n * w);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r * w + c] = m(r, c);
    a[r * w + n + r] = 1;
  }
  const auto e = bareiss(a, n, w, n);
  if (e.rank < n) throw NotUnimodular("matrix is singular (det = 0)");
  // Final Bareiss pivot d equals det of the row-permuted matrix.
  const BigInt d = a[(n - 1) * w + (n - 1)];
  if (abs(d) != 1)
    throw NotUnimodular("not unimodular: |det| = " + BigInt(abs(d)).str());

  // U x = b' per column; y = d * x is integral, and every division below is exact.
  IntMatrix inv(n, n);
  std::vector<BigInt> y(n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t ii = n; ii-- > 0;) {
      BigInt acc = d * a[ii * w + n + col];
      for (std::size_t j = ii + 1; j < n; ++j) acc -= a[ii * w + j] * y[j];
      y[ii] = acc / a[ii * w + ii];
    }
    for (std::size_t r = 0; r < n; ++r) inv(r, col) = y[r] / d;
  }
  return inv;
}

}  // namespace gtop
