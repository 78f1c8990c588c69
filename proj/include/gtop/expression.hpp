#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gtop/graph.hpp"

namespace gtop {

class ExpressionError : public std::invalid_argument {
 public:
  ExpressionError(const std::string& what, std::size_t column)
      : std::invalid_argument(what + " at column " + std::to_string(column)), column_(column) {}
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/**
 * Evaluates graph arithmetic such as "K3*P2" or "(C4+P2)*K2".
 *
 * Atoms: Kn, Pn (n points), Cn, Sn (star, n leaves), Ln (path, n edges),
 * Oct, star(n), cycle(n), point(n), complete(n), 0 (empty graph), 1 (K1).
 * '*' binds tighter than '+'; both associate left. Whitespace is ignored.
 */
Graph evaluate_expression(std::string_view text);

}  // namespace gtop
