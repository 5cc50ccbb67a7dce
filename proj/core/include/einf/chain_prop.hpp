#pragma once

#include <set>
#include <string>
#include <vector>

#include "einf/graph_term.hpp"
#include "einf/term_parser.hpp"
#include "einf/weighted_surjection.hpp"

namespace einf {

// Coefficients are F₂ throughout: adding a term twice cancels it.

// Strictly increasing vertex list [v_0,...,v_k].
using Face = std::vector<int>;
using Tensor = std::vector<Face>;

struct SimplicialChain {
  int arity = 1;  // number of tensor factors
  std::set<Tensor> terms;

  void add(const Tensor& t);
  void add(const SimplicialChain& c);
  bool zero() const { return terms.empty(); }
  bool operator==(const SimplicialChain&) const = default;
  std::string to_string() const;  // "[0]⊗[0,1] + [0,1]⊗[1]", "0", "1"
};

SimplicialChain chain_of(const Tensor& t);
SimplicialChain parse_chain(const std::string& text);  // "[0,1]x[1,2] + [0]"; throws ParseError

// Faces of the standard simplex Δ^d, by dimension then lexicographically.
std::vector<Face> faces_of_simplex(int d);
// d_i of a face: drop vertex i.
Face face_delete(const Face& f, int i);
// ∂ applied factorwise (Koszul signs vanish mod 2).
SimplicialChain boundary(const SimplicialChain& c);

// Generators are surjection types; a type with m = 0 (all blocks empty) is
// the counit class.
struct ChainElement {
  int n = 1;
  int m = 1;
  int degree = 0;
  std::set<SurjectionType> support;

  void add(const SurjectionType& t);
  void add(const ChainElement& x);
  bool zero() const { return support.empty(); }
  bool operator==(const ChainElement&) const = default;
  std::string to_string() const;
};

ChainElement generator(const SurjectionType& t);
ChainElement zero_chain(int n, int m, int degree);
SurjectionType counit_type(int n);
SurjectionType identity_type(int n);
// (1,2,1,2,...) of length i+2: the cup-i generator.
SurjectionType cup_type(int i);

GraphTerm generator_graph(const SurjectionType& t);

// Sum over the boundary faces of each cell: every μ of the canonical graph is
// sent to its two attaching graphs, renormalized, kept if still of degree-1.
ChainElement differential(const ChainElement& x);

// Cellular composition: generic common refinements on each wire, kept when
// nondegenerate and of full degree.
ChainElement chain_compose(const ChainElement& top, const ChainElement& bottom);
ChainElement chain_horizontal(const ChainElement& a, const ChainElement& b);
ChainElement chain_permute_inputs(const ChainElement& x, const Permutation& sigma);
ChainElement chain_permute_outputs(const ChainElement& x, const Permutation& tau);
// top ∘_i v: v plugged into output i (0-based) of an operadic element.
ChainElement compose_at_output(const ChainElement& top, int i, const ChainElement& v);

// Evaluate a graph on chains: Δ by Alexander–Whitney, ε as augmentation,
// μ as join, φ as 0. Parameters are irrelevant (top cells).
SimplicialChain act_graph(const GraphTerm& g, const SimplicialChain& c);
SimplicialChain act(const ChainElement& x, const SimplicialChain& c);
SimplicialChain act(const SurjectionType& t, const SimplicialChain& c);

// Image of an S-term (top cells) in chains(MS): atoms become generators
// (φ becomes 0), ';' is chain_compose and '|' chain_horizontal.
ChainElement chains_S_check(const TermExpr& term);

}  // namespace einf
