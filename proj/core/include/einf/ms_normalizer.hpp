#pragma once

#include <cstdint>
#include <optional>

#include "einf/graph_term.hpp"
#include "einf/presentation.hpp"
#include "einf/weighted_surjection.hpp"

namespace einf {

// Rule scheduling for normalize().
//  Stratified: counit elimination, then Leibniz, then reassociation, each to
//  a fixpoint, repeated until nothing fires; leftmost-topological sites.
//  Shuffled: every rule that is sound before commutativity is applied
//  (counits, Leibniz, uncrossed bubbles, both rotations) at uniformly random
//  sites, seeded.
// Either way commutativity and the remaining involutions act last, on the
// strand lists of the stratified form.
struct RuleOrder {
  bool shuffled = false;
  std::uint64_t seed = 0;
};

// Output of eliminate_counits: the ε-free graph, or the counit class.
struct CounitFree {
  std::optional<GraphTerm> graph;  // empty iff m == 0
  int n = 0;
};
CounitFree eliminate_counits(const GraphTerm& g);

// Pushes every product below every coproduct, weights kept exact.
// Input must be ε-free and boundary-free.
GraphTerm leibniz_push(const GraphTerm& g);

MSElement normalize(const GraphTerm& g, const RuleOrder& order = {});
bool equal_ms(const GraphTerm& a, const GraphTerm& b);

}  // namespace einf
