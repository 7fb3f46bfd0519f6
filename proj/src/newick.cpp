#include "hyb/newick.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "hyb/errors.hpp"

namespace hyb {
namespace {

bool label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
}

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  TreeScaffold sc;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  std::string read_label() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && label_char(s[pos])) ++pos;
    if (pos == start) throw ParseError("expected a label", pos);
    return s.substr(start, pos - start);
  }

  void discard_length() {
    if (peek() != ':') return;
    ++pos;
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.' ||
            s[pos] == '-' || s[pos] == '+' || s[pos] == 'e' || s[pos] == 'E'))
      ++pos;
    if (pos == start) throw ParseError("expected a branch length after ':'", pos);
  }

  int subtree() {
    if (peek() == '(') {
      std::size_t open = pos;
      ++pos;
      std::vector<int> kids;
      kids.push_back(subtree());
      while (peek() == ',') {
        ++pos;
        kids.push_back(subtree());
      }
      if (peek() != ')') throw ParseError("expected ')'", pos);
      ++pos;
      if (kids.size() != 2)
        throw ParseError("non-binary internal vertex with " +
                             std::to_string(kids.size()) + " children",
                         open);
      if (label_char(peek())) read_label();  // internal label, discarded
      discard_length();
      return sc.join(kids[0], kids[1]);
    }
    std::size_t at = pos;
    std::string lbl = read_label();
    if (lbl == kRho) throw ParseError("label 'rho' is reserved", at);
    discard_length();
    return sc.leaf(lbl);
  }
};

}  // namespace

PhyloTree parse_tree(const std::string& newick) {
  Parser p(newick);
  int top = p.subtree();
  if (p.peek() != ';') throw ParseError("expected ';'", p.pos);
  ++p.pos;
  p.skip_ws();
  if (p.pos != newick.size()) throw ParseError("trailing characters", p.pos);
  return p.sc.freeze(top, /*adjoin_rho=*/true);
}

std::string write_tree(const PhyloTree& t) {
  std::function<std::string(int)> emit = [&](int v) -> std::string {
    if (t.is_leaf(v)) return t.label(v);
    int a = t.children(v)[0], b = t.children(v)[1];
    if (t.min_leaf(b) < t.min_leaf(a)) std::swap(a, b);
    return "(" + emit(a) + "," + emit(b) + ")";
  };
  int top = t.root();
  if (t.label(top) == kRho && t.children(top).size() == 1) top = t.children(top)[0];
  return emit(top) + ";";
}

}  // namespace hyb
