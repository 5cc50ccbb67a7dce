#pragma once

#include <vector>

#include "einf/chain_prop.hpp"
#include "einf/cochains.hpp"
#include "einf/graph_term.hpp"
#include "einf/term_parser.hpp"
#include "einf/weighted_surjection.hpp"

// Independent reference implementations used to cross-check the engine.
namespace einf::verify {

// Interval flow: edge weights are propagated up from weight-1 outputs, then
// each input interval is pushed down the term (Δ cuts at its left weight, μ
// concatenates left before right). No graph rewriting involved.
MSElement evaluate_by_flow(const TermExpr& e);

// Functions {1..m+k} -> {1..m}, surjective, no equal neighbours; by exhaustion.
long brute_force_basis_count(int m, int k);

// Differential of the surjection operad mod 2: drop one entry whose value
// occurs elsewhere, keep results without equal neighbours in a block.
ChainElement combinatorial_differential(const ChainElement& x);

// Operadic x ∘_i y for (1,·) types by the overlapping-cut formula.
ChainElement surjection_compose(const SurjectionType& x, int i, const SurjectionType& y);

// (a ∪ b)(σ) = a(front face) · b(back face).
Cochain front_back_cup(const Cochain& a, const Cochain& b, const SimplicialComplex& K);

// Labeled isomorphism by trying every vertex bijection (small graphs only).
bool brute_force_isomorphic(const GraphTerm& a, const GraphTerm& b);

}  // namespace einf::verify
