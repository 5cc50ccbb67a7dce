#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "einf/graph_term.hpp"
#include "einf/rational.hpp"

namespace einf {

// Term language:
//   seq  := par (";" par)*          vertical, top to bottom
//   par  := prim ("|" prim)*        horizontal, left to right
//   prim := atom | "(" seq ")"
//   atom := "id" | "eps" | "delta" | "mu(" q ")" | "h(" q ")" | "swap"
//         | "sigma[" ints "]" | "tau[" ints "]"
// "|" binds tighter than ";". sigma[l] wires input i to output l_i;
// tau[l] feeds output j from input l_j (so tau[l] = sigma[l^-1]).
struct TermExpr {
  enum class Kind { Id, Eps, Delta, Mu, H, Swap, Sigma, Tau, Vertical, Horizontal };
  Kind kind = Kind::Id;
  Rational param;
  std::vector<int> perm;  // 1-based, as written
  std::vector<TermExpr> children;
};

TermExpr parse_term_expr(std::string_view text);  // throws ParseError
GraphTerm build_graph(const TermExpr& e);
GraphTerm parse_term(std::string_view text);
std::string to_term_string(const TermExpr& e);

}  // namespace einf
