#include "einf/term_parser.hpp"

#include <cctype>

#include "einf/errors.hpp"
#include "einf/presentation.hpp"

namespace einf {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  TermExpr parse() {
    TermExpr e = seq();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("term: " + what + " at offset " + std::to_string(pos_));
  }

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

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  TermExpr seq() {
    TermExpr first = par();
    if (!peek(';')) return first;
    TermExpr e;
    e.kind = TermExpr::Kind::Vertical;
    e.children.push_back(std::move(first));
    while (eat(';')) e.children.push_back(par());
    return e;
  }

  TermExpr par() {
    TermExpr first = prim();
    if (!peek('|')) return first;
    TermExpr e;
    e.kind = TermExpr::Kind::Horizontal;
    e.children.push_back(std::move(first));
    while (eat('|')) e.children.push_back(prim());
    return e;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  std::string word() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }

  Rational rational_until(char close) {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && s_[pos_] != close) ++pos_;
    if (pos_ == s_.size()) fail(std::string("missing '") + close + "'");
    Rational q = parse_rational(s_.substr(b, pos_ - b));
    ++pos_;
    return q;
  }

  std::vector<int> int_list() {
    std::vector<int> out;
    skip();
    if (eat(']')) return out;
    for (;;) {
      skip();
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (b == pos_) fail("expected integer");
      out.push_back(std::stoi(std::string(s_.substr(b, pos_ - b))));
      if (eat(']')) return out;
      expect(',');
    }
  }

  TermExpr prim() {
    if (eat('(')) {
      TermExpr e = seq();
      expect(')');
      return e;
    }
    const std::size_t at = pos_;
    std::string w = word();
    TermExpr e;
    using K = TermExpr::Kind;
    if (w == "id") e.kind = K::Id;
    else if (w == "eps") e.kind = K::Eps;
    else if (w == "delta") e.kind = K::Delta;
    else if (w == "swap") e.kind = K::Swap;
    else if (w == "mu" || w == "h") {
      e.kind = w == "mu" ? K::Mu : K::H;
      if (pos_ >= s_.size() || s_[pos_] != '(') fail("expected '(' right after " + w);
      ++pos_;
      e.param = rational_until(')');
    } else if (w == "sigma" || w == "tau") {
      e.kind = w == "sigma" ? K::Sigma : K::Tau;
      if (pos_ >= s_.size() || s_[pos_] != '[') fail("expected '[' right after " + w);
      ++pos_;
      e.perm = int_list();
    } else {
      pos_ = at;
      skip();
      fail(w.empty() ? "expected a term" : "unknown atom '" + w + "'");
    }
    return e;
  }
};

}  // namespace

TermExpr parse_term_expr(std::string_view text) { return Parser(text).parse(); }

GraphTerm build_graph(const TermExpr& e) {
  using K = TermExpr::Kind;
  try {
    switch (e.kind) {
      case K::Id: return unit(1);
      case K::Eps: return corolla(Generator::Counit);
      case K::Delta: return corolla(Generator::Coproduct);
      case K::Mu: return corolla(Generator::Product, {e.param});
      case K::H: return corolla(Generator::CounitHomotopy, {e.param});
      case K::Swap: return swap_term();
      case K::Sigma: return permutation_term(Permutation::from_one_based(e.perm));
      case K::Tau: return permutation_term(Permutation::from_one_based(e.perm).inverse());
      case K::Horizontal: {
        std::vector<GraphTerm> parts;
        for (const auto& c : e.children) parts.push_back(build_graph(c));
        return horizontal_compose(parts);
      }
      case K::Vertical: {
        GraphTerm g = build_graph(e.children.front());
        for (std::size_t i = 1; i < e.children.size(); ++i) g = vertical_compose(g, build_graph(e.children[i]));
        return g;
      }
    }
  } catch (const ValidationError& err) {
    throw ParseError(std::string("term: ") + err.what());
  }
  throw ParseError("term: unknown node");
}

GraphTerm parse_term(std::string_view text) { return build_graph(parse_term_expr(text)); }

std::string to_term_string(const TermExpr& e) {
  using K = TermExpr::Kind;
  auto perm = [](const std::vector<int>& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
  };
  switch (e.kind) {
    case K::Id: return "id";
    case K::Eps: return "eps";
    case K::Delta: return "delta";
    case K::Mu: return "mu(" + to_string(e.param) + ")";
    case K::H: return "h(" + to_string(e.param) + ")";
    case K::Swap: return "swap";
    case K::Sigma: return "sigma" + perm(e.perm);
    case K::Tau: return "tau" + perm(e.perm);
    case K::Horizontal:
    case K::Vertical: {
      std::string s = "(";
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) s += e.kind == K::Horizontal ? " | " : " ; ";
        s += to_term_string(e.children[i]);
      }
      return s + ")";
    }
  }
  return "";
}

}  // namespace einf
