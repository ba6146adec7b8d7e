#include "ncforms/expr.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace ncf {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("element expression: " + what + " at offset " +
                                std::to_string(pos));
  }

  long integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return std::stol(s.substr(start, pos - start));
  }

  Rat coefficient() {
    long num = integer();
    if (peek() == '/') {
      ++pos;
      long den = integer();
      if (den == 0) fail("zero denominator");
      return make_rat(num, den);
    }
    return Rat(num);
  }

  // [ij] or [i,j]; returns the 1-based points in written order.
  std::pair<int, int> bracket() {
    if (peek() != '[') fail("expected '['");
    ++pos;
    int i, j;
    skip_ws();
    if (pos + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])) &&
        std::isdigit(static_cast<unsigned char>(s[pos + 1])) &&
        (pos + 2 >= s.size() || s[pos + 2] == ']')) {
      i = s[pos] - '0';
      j = s[pos + 1] - '0';
      pos += 2;
    } else {
      i = static_cast<int>(integer());
      if (peek() != ',') fail("expected ','");
      ++pos;
      j = static_cast<int>(integer());
    }
    if (peek() != ']') fail("expected ']'");
    ++pos;
    if (i == j) fail("degenerate transposition");
    return {i, j};
  }
};

}  // namespace

AlgElement parse_element(GradedAlgebra& alg, const std::string& text) {
  const CrossedModule& cm = alg.cm();
  Cursor c{text};
  AlgElement out = alg.one();
  out *= Rat(0);
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    char op = c.peek();
    if (op == '+' || op == '-') {
      ++c.pos;
      if (op == '-') sign = -1;
    } else if (!first) {
      c.fail("expected '+' or '-'");
    }
    first = false;
    Rat coef(sign);
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) coef *= c.coefficient();
    std::vector<std::pair<int, int>> letters;
    while (c.peek() == '[') letters.push_back(c.bracket());
    if (letters.empty() && coef == Rat(sign) &&
        !std::isdigit(static_cast<unsigned char>(text[c.pos - 1])))
      c.fail("expected a term");
    alg.build_degree(static_cast<int>(letters.size()));
    AlgElement term = alg.one();
    term *= coef;
    for (auto [i, j] : letters) {
      int lo = std::min(i, j), hi = std::max(i, j);
      int a = cm.index_of(Perm::from_cycles(cm.N(), {{lo, hi}}));
      AlgElement gen = alg.generator(a);
      if (i > j && cm.is_signed()) gen *= Rat(-1);
      term = multiply(term, gen);
    }
    out += term;
  }
  return out;
}

}  // namespace ncf
