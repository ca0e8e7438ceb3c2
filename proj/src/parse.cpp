#include "evenres/parse.hpp"

#include <cctype>
#include <sstream>

namespace evenres {

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  int number() {
    skip_ws();
    std::size_t start = pos;
    int v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 100000) throw ParseError("number too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected a number", start);
    return v;
  }
};

}  // namespace

CycleExpr parse_cycles(std::string_view text) {
  Cursor c{text};
  CycleExpr e;
  while (!c.eof()) {
    c.expect('(');
    std::vector<int> cycle;
    if (c.peek() != ')') {
      cycle.push_back(c.number());
      while (c.peek() == ',') {
        c.expect(',');
        cycle.push_back(c.number());
      }
    }
    c.expect(')');
    if (!cycle.empty()) {
      if (cycle.size() < 2)
        throw ParseError("cycle must list at least 2 points", c.pos);
      e.cycles.push_back(std::move(cycle));
    }
  }
  return e;
}

Transformation parse_transformation(std::string_view text, int n) {
  Cursor c{text};
  char first = c.peek();
  if (first == '[') {
    c.expect('[');
    std::vector<int> img;
    if (c.peek() != ']') {
      img.push_back(c.number());
      while (c.peek() == ',') {
        c.expect(',');
        img.push_back(c.number());
      }
    }
    c.expect(']');
    if (!c.eof()) throw ParseError("trailing input", c.pos);
    if (img.empty()) throw ParseError("empty image tuple", 0);
    if (n > 0 && static_cast<int>(img.size()) != n)
      throw ParseError("image tuple length disagrees with degree", 0);
    try {
      return tf_vec(img);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 0);
    }
  }
  if (first == '(') {
    if (n <= 0) throw ParseError("cycle form needs an explicit degree", 0);
    CycleExpr e = parse_cycles(text);
    try {
      return eval_cycles(e, n);
    } catch (const std::invalid_argument& ex) {
      throw ParseError(ex.what(), 0);
    }
  }
  throw ParseError("expected '[' or '('", c.pos);
}

PartialPerm parse_partial_perm(std::string_view text, int n) {
  Cursor c{text};
  c.expect('{');
  std::vector<std::pair<int, int>> pairs;
  if (c.peek() != '}') {
    for (;;) {
      int p = c.number();
      c.expect(':');
      int q = c.number();
      pairs.emplace_back(p, q);
      if (c.peek() != ',') break;
      c.expect(',');
    }
  }
  c.expect('}');
  if (!c.eof()) throw ParseError("trailing input", c.pos);
  try {
    return PartialPerm(n, std::move(pairs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string format_cycles(const Transformation& p) {
  CycleExpr e = cycle_decomposition(p);
  if (e.cycles.empty()) return "()";
  std::ostringstream os;
  for (const auto& cyc : e.cycles) {
    os << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << ',';
      os << cyc[i];
    }
    os << ')';
  }
  return os.str();
}

}  // namespace evenres
