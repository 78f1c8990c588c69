#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtop/bigint.hpp"
#include "gtop/graph.hpp"

namespace gtop {

/// Raised by `green_inverse` when |det| != 1.
class NotUnimodular : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  /// 1 + A for the adjacency matrix A of g, in vertex order.
  static IntMatrix one_plus_adjacency(const Graph& g);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] IntMatrix transpose() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_symmetric() const;
  /// Copy with row and column i removed.
  [[nodiscard]] IntMatrix without(std::size_t i) const;
  /// Copy bordered by one extra row/column `border` with `corner` on the diagonal.
  [[nodiscard]] IntMatrix bordered(const std::vector<BigInt>& border, const BigInt& corner) const;

  /// Plain integer grid, one row per line, single-space separated.
  [[nodiscard]] std::string to_grid() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Non-square throws.
BigInt det_exact(const IntMatrix& m);

/// Exact rank by fraction-free elimination.
std::size_t rank_exact(const IntMatrix& m);

/**
 * Exact integer inverse of a unimodular matrix.
 *
 * Bareiss forward elimination on [m | I], fraction-free back substitution per
 * column (which yields det * m^-1 exactly), then division by det = +-1.
 * Throws NotUnimodular when |det| != 1.
 */
IntMatrix green_inverse(const IntMatrix& m);

}  // namespace gtop
