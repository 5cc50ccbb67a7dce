#pragma once

#include <random>
#include <string>
#include <vector>

#include "einf/graph_term.hpp"
#include "einf/simplex_action.hpp"

namespace einf {

// A simplex of Γ in Eilenberg–Zilber form: a nondegenerate cell together with
// a monotone surjection theta : [dim] -> [dim cell].
struct Simplex {
  int cell = 0;
  std::vector<int> theta;

  int dim() const { return static_cast<int>(theta.size()) - 1; }
  bool operator==(const Simplex&) const = default;
};

struct Cell {
  std::string name;
  int dim = 0;
  std::vector<Simplex> faces;  // faces[j] = d_j, the face opposite vertex j
};

// Finite simplicial set given by its nondegenerate cells and face tables.
class SimplicialSet {
 public:
  SimplicialSet() = default;
  // Throws ValidationError on malformed tables or failed identities d_i d_j = d_{j-1} d_i.
  explicit SimplicialSet(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }
  int find(const std::string& name) const;  // -1 if absent
  Simplex cell_simplex(int c) const;

  // alpha^* s for a monotone vertex map alpha : [k] -> [dim s].
  Simplex pullback(const Simplex& s, const std::vector<int>& alpha) const;
  Simplex face(const Simplex& s, int j) const;
  Simplex degeneracy(const Simplex& s, int j) const;

 private:
  std::vector<Cell> cells_;
};

SimplicialSet standard_simplex_set(int n);
// One vertex and one nondegenerate n-cell whose faces all collapse to it.
SimplicialSet sphere_set(int n);

// {"cells":[{"name":"v","dim":0},
//           {"name":"e","dim":1,"faces":["v",{"cell":"v","map":[0]}]}]}
// A face is a cell name (identity map) or {cell, map} with map = theta.
SimplicialSet parse_simplicial_set(const std::string& json_text);
std::string to_json(const SimplicialSet& G);

// A point of |Γ|: a nondegenerate cell and an interior point of its simplex.
struct RealizationPoint {
  int cell = 0;
  SimplexPoint x;
  bool operator==(const RealizationPoint&) const = default;
};

// Pull back to the carrier face of x, then push x forward along the
// degeneracy part.
RealizationPoint canonicalize(const SimplicialSet& G, const Simplex& s, const SimplexPoint& x);

// (γ, x) ↦ ((γ, π_1Φ(g,x)), ..., (γ, π_mΦ(g,x))), canonicalized.
// Throws ValidationError unless g has one input.
std::vector<RealizationPoint> realization_act(const SimplicialSet& G, const GraphTerm& g, const Simplex& s,
                                              const SimplexPoint& x);

std::string to_string(const SimplicialSet& G, const RealizationPoint& p);

// Random simplices and monotone maps; the check compares realization_act on
// (α^*γ, x) and (γ, α_*x).
Simplex random_simplex(const SimplicialSet& G, int max_extra_degeneracy, std::mt19937_64& rng);
std::vector<int> random_monotone(int k, int d, std::mt19937_64& rng);
CheckReport check_realization_well_defined(const SimplicialSet& G, const GraphTerm& g, long samples,
                                           std::mt19937_64& rng);

}  // namespace einf
