#include "gtop/expression.hpp"

#include <cctype>

#include "gtop/arithmetic.hpp"
#include "gtop/named_graphs.hpp"

namespace gtop {

namespace {

constexpr std::size_t kMaxAtomSize = 1000;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Graph parse() {
    Graph g = sum();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return g;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ExpressionError(msg, pos_ + 1); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Graph sum() {
    Graph g = product();
    while (eat('+')) g = zykov_join(g, product());
    return g;
  }

  Graph product() {
    Graph g = factor();
    while (eat('*')) g = zykov_product(g, factor());
    return g;
  }

  Graph factor() {
    if (eat('(')) {
      Graph g = sum();
      if (!eat(')')) fail("expected ')'");
      return g;
    }
    return atom();
  }

  std::size_t number() {
    skip();
    const std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(s_[pos_] - '0');
      if (v > kMaxAtomSize) fail("atom size above " + std::to_string(kMaxAtomSize));
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  std::string word() {
    skip();
    std::string w;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) w += s_[pos_++];
    return w;
  }

  Graph atom() {
    skip();
    if (pos_ >= s_.size()) fail("expected a graph");
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t at = pos_;
      const std::size_t v = number();
      if (v == 0) return Graph{};
      if (v == 1) return named::complete(1);
      pos_ = at;
      fail("only 0 and 1 are numeric atoms");
    }
    const std::size_t at = pos_;
    const std::string w = word();
    if (w == "Oct") return named::octahedron();
    if (w == "star" || w == "cycle" || w == "point" || w == "complete") {
      if (!eat('(')) fail("expected '(' after " + w);
      const std::size_t n = number();
      if (!eat(')')) fail("expected ')'");
      return build(w, n, at);
    }
    if (w.size() == 1) return build(w, number(), at);
    pos_ = at;
    fail(w.empty() ? "expected a graph" : "unknown atom '" + w + "'");
  }

  Graph build(const std::string& w, std::size_t n, std::size_t at) {
    if (w == "K" || w == "complete") return named::complete(n);
    if (w == "P" || w == "point") return named::points(n);
    if (w == "S" || w == "star") return named::star(n);
    if (w == "L") return named::linear(n);
    if (w == "C" || w == "cycle") {
      if (n < 3) {
        pos_ = at;
        fail("cycles need at least 3 vertices");
      }
      return named::cycle(n);
    }
    pos_ = at;
    fail("unknown atom '" + w + "'");
  }
};

}  // namespace

Graph evaluate_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace gtop
