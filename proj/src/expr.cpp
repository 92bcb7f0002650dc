#include "voakit/expr.hpp"

#include <functional>
#include <map>
#include <vector>

#include "voakit/errors.hpp"
#include "voakit/products.hpp"

namespace voakit {

namespace {

struct Token {
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
    } else if (s[i] == '[' || s[i] == ']') {
      out.push_back({std::string(1, s[i]), i});
      ++i;
    } else {
      const std::size_t start = i;
      while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != '[' && s[i] != ']') ++i;
      out.push_back({s.substr(start, i - start), start});
    }
  }
  return out;
}

// Operation signature: leading integer parameters, then vector operands.
struct Op {
  int ints;
  int vectors;
  std::function<GradedVector(const VOA&, const std::vector<long>&, const std::vector<GradedVector>&)> fn;
};

const std::map<std::string, Op>& ops() {
  static const std::map<std::string, Op> table = {
      {"star", {1, 2, [](const VOA& A, auto& i, auto& v) { return star_n(A, v[0], v[1], int(i[0])); }}},
      {"circ", {1, 2, [](const VOA& A, auto& i, auto& v) { return circ_n(A, v[0], v[1], int(i[0])); }}},
      {"dot", {0, 2, [](const VOA& A, auto&, auto& v) { return dot_action(A, v[0], v[1]); }}},
      {"circmn", {2, 2, [](const VOA& A, auto& i, auto& v) { return circ_mn(A, v[0], v[1], int(i[0]), int(i[1])); }}},
      {"barlower",
       {2, 2, [](const VOA& A, auto& i, auto& v) { return bar_star_lower(A, v[0], v[1], int(i[0]), int(i[1])); }}},
      {"barupper",
       {2, 2, [](const VOA& A, auto& i, auto& v) { return bar_star_upper(A, v[0], v[1], int(i[0]), int(i[1])); }}},
      {"bracket",
       {3, 2,
        [](const VOA& A, auto& i, auto& v) { return bracket_star(A, v[0], i[0], v[1], int(i[1]), int(i[2])); }}},
      {"theta", {0, 1, [](const VOA& A, auto&, auto& v) { return A.theta(v[0]); }}},
      {"mode", {1, 2, [](const VOA& A, auto& i, auto& v) { return A.mode(v[0], i[0], v[1]); }}},
      {"L", {1, 1, [](const VOA& A, auto& i, auto& v) { return A.L(i[0], v[0]); }}},
      {"lr", {0, 2, [](const VOA& A, auto&, auto& v) { return lr_correction(A, v[0], v[1]); }}},
      {"add", {0, 2, [](const VOA&, auto&, auto& v) { return v[0] + v[1]; }}},
      {"sub", {0, 2, [](const VOA&, auto&, auto& v) { return v[0] - v[1]; }}},
  };
  return table;
}

class Parser {
 public:
  Parser(const VOA& A, const std::string& text) : A_(A), toks_(tokenize(text)), end_(text.size()) {}

  GradedVector parse_all() {
    GradedVector v = expr();
    if (i_ != toks_.size()) fail("unexpected token '" + toks_[i_].text + "'", toks_[i_].pos);
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t pos) {
    throw UsageError("parse error at position " + std::to_string(pos) + ": " + msg);
  }
  const Token& next(const char* what) {
    if (i_ >= toks_.size()) fail(std::string("expected ") + what, end_);
    return toks_[i_++];
  }

  GradedVector expr() {
    const Token& t = next("an operation or literal");
    auto it = ops().find(t.text);
    if (it == ops().end()) return literal(t);
    const Op& op = it->second;
    std::vector<long> ints;
    for (int k = 0; k < op.ints; ++k) {
      const Token& a = next("an integer");
      try {
        std::size_t used = 0;
        ints.push_back(std::stol(a.text, &used));
        if (used != a.text.size()) throw std::invalid_argument(a.text);
      } catch (const std::exception&) {
        fail("expected an integer, got '" + a.text + "'", a.pos);
      }
    }
    std::vector<GradedVector> vs;
    for (int k = 0; k < op.vectors; ++k) vs.push_back(operand());
    return op.fn(A_, ints, vs);
  }

  GradedVector operand() {
    const Token& t = next("an operand");
    if (t.text == "[") {
      GradedVector v = expr();
      const Token& close = next("']'");
      if (close.text != "]") fail("expected ']'", close.pos);
      return v;
    }
    if (ops().count(t.text)) fail("operation '" + t.text + "' as operand needs brackets", t.pos);
    return literal(t);
  }

  GradedVector literal(const Token& t) {
    try {
      return A_.literal(t.text);
    } catch (const TruncationError&) {
      throw;
    } catch (const std::exception&) {
      fail("unknown literal '" + t.text + "'", t.pos);
    }
  }

  const VOA& A_;
  std::vector<Token> toks_;
  std::size_t end_;
  std::size_t i_ = 0;
};

}  // namespace

GradedVector evaluate_expression(const VOA& A, const std::string& text) { return Parser(A, text).parse_all(); }

std::string expression_help() {
  return "operations (integers first, then operands):\n"
         "  star n a b      circ n a b      dot a b\n"
         "  circmn m n a b  barlower m n a b  barupper m n a b\n"
         "  bracket p m n a b  theta a  mode k a b  L k a\n"
         "  lr a b  add a b  sub a b\n"
         "literals: one, h, w (omega), e<wt>.<idx>, a(-2)a(-1)^2, L(-3)L(-2)\n"
         "subexpressions go in brackets: dot h [star 0 h h]\n";
}

}  // namespace voakit
