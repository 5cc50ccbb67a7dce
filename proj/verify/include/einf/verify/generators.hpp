#pragma once

#include <random>

#include "einf/chain_prop.hpp"
#include "einf/cochains.hpp"
#include "einf/term_parser.hpp"
#include "einf/weighted_surjection.hpp"

namespace einf::verify {

struct TermOptions {
  int max_vertices = 12;
  int max_inputs = 3;
  bool counits = true;
  bool homotopies = false;  // φ_s, S̃ only
  bool boundary_params = true;  // let s hit 0 and 1
};

// Layered random term: each layer is one generator (or a transposition)
// on a random wire, padded with identities.
TermExpr random_term(std::mt19937_64& rng, const TermOptions& opt = {});
Rational random_weight_param(std::mt19937_64& rng, bool boundary);

// Random positive weights on a type, normalized per output.
WeightedSurjection random_weights(const SurjectionType& t, std::mt19937_64& rng);
SurjectionType random_type(int n, int m, int degree, std::mt19937_64& rng);
WeightedSurjection random_surjection(int max_n, int max_m, int max_degree, std::mt19937_64& rng);

// Sum of random basis cells of one biarity and degree.
ChainElement random_chain_element(int n, int m, int degree, std::mt19937_64& rng);

// δ of a random cochain: a cocycle on any complex (a coboundary on Δ^d).
Cochain random_coboundary(const SimplicialComplex& K, int degree, std::mt19937_64& rng);

}  // namespace einf::verify
