#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "einf/graph_term.hpp"
#include "einf/permutation.hpp"
#include "einf/rational.hpp"

namespace einf {

// Combinatorial type of a canonical graph: for each input, the outputs of its
// strands in order (0-based). Blocks may be empty: that input is capped by ε.
struct SurjectionType {
  int n = 0;
  int m = 0;
  std::vector<std::vector<int>> blocks;

  int strand_count() const;
  int degree() const { return strand_count() - m; }
  std::vector<int> output_counts() const;  // k_j
  bool surjective() const;
  bool nondegenerate() const;              // no adjacent repeats in a block
  std::string to_string() const;           // "(1,2,1)", "(1,2|2)", "_" for an empty block

  auto operator<=>(const SurjectionType&) const = default;
};

struct Strand {
  int output = 0;  // 0-based
  Rational weight;
  bool operator==(const Strand&) const = default;
};

class WeightedSurjection {
 public:
  WeightedSurjection() = default;
  // Validates: surjective, weights in (0,1], per-output sums 1, nondegenerate.
  WeightedSurjection(int n, int m, std::vector<std::vector<Strand>> blocks);

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<std::vector<Strand>>& blocks() const { return blocks_; }
  SurjectionType type() const;
  int degree() const { return type().degree(); }

  bool operator==(const WeightedSurjection&) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Strand>> blocks_;
};

// The single class of biarity (n,0).
struct CounitClass {
  int n = 0;
  bool operator==(const CounitClass&) const = default;
};

using MSElement = std::variant<WeightedSurjection, CounitClass>;

int ms_inputs(const MSElement& x);
int ms_outputs(const MSElement& x);

// Drops zero-weight strands and merges adjacent equal outputs (involution),
// then validates. m == 0 gives the counit class.
MSElement canonicalize_blocks(int n, int m, std::vector<std::vector<Strand>> blocks);

// Interior point of a type: at output j every strand gets weight 1/k_j.
WeightedSurjection with_uniform_weights(const SurjectionType& t);

// Canonical graph: left Δ-combs on the inputs, left μ-combs on the outputs
// taking strands in the total order. Inputs with empty blocks get an ε.
GraphTerm canonical_graph(const WeightedSurjection& x);
GraphTerm canonical_graph(const MSElement& x);
GraphTerm canonical_graph(const SurjectionType& t);  // uniform weights

// Inverse of SurjectionType::to_string; m is the largest label.
SurjectionType parse_type(std::string_view text);

std::string to_text(const MSElement& x);       // "surj n=1 m=2 : 1:1 2:1", "counit n=2"; output:weight
MSElement parse_ms(std::string_view text);     // throws ParseError
std::string to_json(const MSElement& x, int indent = 2);
MSElement ms_from_json(const std::string& text);

MSElement horizontal(const MSElement& a, const MSElement& b);
// Match permute_inputs/permute_outputs on graphs: new block i is old block
// sigma(i); old output j becomes tau(j).
MSElement ms_permute_inputs(const MSElement& x, const Permutation& sigma);
MSElement ms_permute_outputs(const MSElement& x, const Permutation& tau);
SurjectionType permute_outputs(const SurjectionType& t, const Permutation& tau);
SurjectionType permute_inputs(const SurjectionType& t, const Permutation& sigma);

// Rectangle refinement on every intermediate wire.
MSElement compose_weighted(const MSElement& top, const MSElement& bottom);

// All nondegenerate surjective types with r - m = degree (r_i >= 0).
std::vector<SurjectionType> enumerate_basis(int n, int m, int degree);

}  // namespace einf
