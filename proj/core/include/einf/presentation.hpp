#pragma once

#include <random>
#include <string>
#include <vector>

#include "einf/graph_term.hpp"

namespace einf {

// Which relation set applies: S̃ (with φ), S (strict counit), MS (quotient).
enum class PropTag { STilde, S, MS };

const char* tag_name(PropTag t);

// Throws ValidationError for wrong parameter count or a value outside [0,1].
GraphTerm corolla(Generator kind, std::vector<Rational> params = {});

// validate() plus: φ is only admitted under S̃.
ValidationReport validate_for(const GraphTerm& g, PropTag tag);

// μ_0 = (id|ε), μ_1 = (ε|id), φ_0 = id, φ_1 = Δ;(ε|id).
GraphTerm attaching_graph(Generator kind, const Rational& s);
GraphTerm apply_attaching(const GraphTerm& g, PropTag tag);

// Counit relations to a fixpoint. S̃: Δ;(ε|ε)=ε, μ;ε=ε|ε, φ;ε=ε.
// S and MS: Δ;(ε|id)=id=Δ;(id|ε), μ;ε=ε|ε. Every rule removes a vertex.
// rng == nullptr picks the leftmost-topological site.
GraphTerm apply_relations(const GraphTerm& g, PropTag tag, std::mt19937_64* rng = nullptr);
GraphTerm apply_relations_S(const GraphTerm& g);

// Weight per edge, indexed like g.edges().
using EdgeWeighting = std::vector<Rational>;

EdgeWeighting to_edge_weights(const GraphTerm& g);

struct WeightCheck {
  bool ok = true;
  std::string message;
};
WeightCheck check_edge_weighting(const GraphTerm& g, const EdgeWeighting& w);

struct RecoveredParameters {
  GraphTerm graph;
  std::vector<int> flagged;  // μ vertices with output weight 0 (s set to 0)
};
RecoveredParameters from_edge_weights(const GraphTerm& skeleton, const EdgeWeighting& w);

// i: Δ on input 1, its left output becomes the new output 1.
GraphTerm stabilize_add(const GraphTerm& g);
// r: cap output 1 with ε.
GraphTerm stabilize_remove(const GraphTerm& g);
// The homotopy i∘r ~ id: Δ on input 1, g below the right branch, and μ_s
// joining the bypass (left) with g's first output (right).
// s = 0 gives i(r(g)); s = 1 gives (Δ;(ε|id) on input 1);g.
GraphTerm stabilize_homotopy(const GraphTerm& g, const Rational& s);
// (φ_s | id^{n-1}) ; g
GraphTerm counit_homotopy_on_input(const GraphTerm& g, const Rational& s);

}  // namespace einf
