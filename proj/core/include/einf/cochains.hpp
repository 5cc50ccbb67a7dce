#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "einf/chain_prop.hpp"

namespace einf {

// Ordered simplicial complex: vertices are integers ordered as integers,
// faces are the downward closure of the maximal faces.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  explicit SimplicialComplex(std::vector<Face> maximal);

  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<Face>& faces(int k) const;  // empty for k out of range
  bool contains(const Face& f) const { return all_.count(f) > 0; }
  const std::vector<Face>& maximal() const { return maximal_; }
  int euler_characteristic() const;

 private:
  std::vector<Face> maximal_;
  std::vector<std::vector<Face>> by_dim_;
  std::set<Face> all_;
};

// One maximal face per line, integers separated by blanks or commas; '#' starts a comment.
SimplicialComplex parse_complex(const std::string& text);
SimplicialComplex standard_simplex(int d);

// F₂ cochain: the set of faces on which it is 1.
struct Cochain {
  int degree = 0;
  std::set<Face> support;

  void add(const Face& f);
  void add(const Cochain& c);
  bool zero() const { return support.empty(); }
  bool operator==(const Cochain&) const = default;
  std::string to_string() const;
};

// Same line format as complexes; every face must have the same dimension.
// An empty file needs the degree passed in.
Cochain parse_cochain(const std::string& text, std::optional<int> degree = std::nullopt);
Cochain dual(const Face& f);

Cochain coboundary(const SimplicialComplex& K, const Cochain& a);
bool is_cocycle(const SimplicialComplex& K, const Cochain& a);

// (a ∪_i b)(σ) = (a⊗b)(act(cup_type(i))(σ)). Zero for i < 0.
Cochain cup_i(int i, const Cochain& a, const Cochain& b, const SimplicialComplex& K);

// Sq^k(x) = x ∪_{|x|-k} x; zero for k > |x| or k < 0. Throws ValidationError
// when x is not a cocycle.
Cochain steenrod_square(int k, const Cochain& x, const SimplicialComplex& K);

// Linear algebra over F₂ on the cochain complex of K.
bool is_coboundary(const SimplicialComplex& K, const Cochain& c);
bool cohomologous(const SimplicialComplex& K, const Cochain& a, const Cochain& b);
// Cocycle representatives of a basis of H^k(K; F₂).
std::vector<Cochain> cohomology_basis(const SimplicialComplex& K, int k);

}  // namespace einf
