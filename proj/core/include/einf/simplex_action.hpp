#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "einf/chain_prop.hpp"
#include "einf/graph_term.hpp"
#include "einf/rational.hpp"

namespace einf {

// A point of Δ^d as a monotone chain 0 ≤ x_1 ≤ ... ≤ x_d ≤ 1. Δ^0 is the
// empty chain. T is Rational (exact) or double (float mode).
template <class T>
struct BasicSimplexPoint {
  std::vector<T> x;

  int dim() const { return static_cast<int>(x.size()); }
  bool operator==(const BasicSimplexPoint&) const = default;
};

using SimplexPoint = BasicSimplexPoint<Rational>;
using FloatPoint = BasicSimplexPoint<double>;
template <class T>
using PointTuple = std::vector<BasicSimplexPoint<T>>;

template <class T>
bool is_valid(const BasicSimplexPoint<T>& p);
// Number of distinct coordinate values other than 0 and 1.
template <class T>
int skeleton_level(const BasicSimplexPoint<T>& p);
template <class T>
int skeleton_level(const PointTuple<T>& ps);

// δ_0 prepends 0, δ_i (0<i<d+1) repeats x_i, δ_{d+1} appends 1.
template <class T>
BasicSimplexPoint<T> coface(int i, const BasicSimplexPoint<T>& p);
// σ_i drops x_i, 1 ≤ i ≤ d+1 for p ∈ Δ^{d+1}.
template <class T>
BasicSimplexPoint<T> codegeneracy(int i, const BasicSimplexPoint<T>& p);

// Vertex [j] of Δ^d has its last j coordinates equal to 1.
template <class T>
BasicSimplexPoint<T> vertex_point(int j, int d);
// t_0..t_d with p = Σ t_j [j].
template <class T>
std::vector<T> barycentric(const BasicSimplexPoint<T>& p);
template <class T>
BasicSimplexPoint<T> from_barycentric(const std::vector<T>& t);
// Vertices with positive barycentric weight: the open cell containing p.
template <class T>
Face support(const BasicSimplexPoint<T>& p);
// Affine map of a monotone vertex map alpha: [d] -> [e].
template <class T>
BasicSimplexPoint<T> push_forward(const BasicSimplexPoint<T>& p, const std::vector<int>& alpha, int e);

// Vertex maps of the cosimplicial operators above. δ_i misses vertex d+1-i,
// σ_i identifies vertices d+1-i and d+2-i.
std::vector<int> coface_vertex_map(int i, int d);
std::vector<int> codegeneracy_vertex_map(int i, int d);

// The interval structure. psi(s, x, y) = (1-s)x + s·y so that μ_0 keeps the
// left strand and μ_1 the right one.
template <class T>
T delta_left(const T& x);   // π₁Δ
template <class T>
T delta_right(const T& x);  // π₂Δ
template <class T>
T psi(const T& s, const T& x, const T& y);
template <class T>
T phi(const T& s, const T& x);

// Coordinatewise action of one generator. Throws ValidationError on a
// parameter outside [0,1], invalid points, or an arity mismatch.
template <class T>
PointTuple<T> eval_generator(Generator kind, const T& s, const PointTuple<T>& in);

// Evaluate an S̃-graph in topological order.
template <class T>
PointTuple<T> eval_term(const GraphTerm& g, const PointTuple<T>& in);

template <class T>
T scalar_from(const Rational& q);

// Random points: coordinates mix 0, 1, 1/2 and random rationals so that the
// piecewise breakpoints are hit.
SimplexPoint random_point(int d, std::mt19937_64& rng);
FloatPoint to_float(const SimplexPoint& p);
Rational random_parameter(std::mt19937_64& rng);

std::string to_string(const SimplexPoint& p);           // "(0, 1/2)"
std::string to_string(const PointTuple<Rational>& ps);  // "(0), (1/2)"
SimplexPoint parse_point(const std::string& text);      // "1/4,1/2"; "" is Δ^0

struct CheckReport {
  long samples = 0;
  long violations = 0;
  std::string first_violation;
  bool ok() const { return violations == 0; }
  void fail(const std::string& what) {
    if (violations++ == 0) first_violation = what;
  }
};

using PointMap = std::function<PointTuple<Rational>(const PointTuple<Rational>&)>;

// Skeleton level of the output tuple never exceeds that of the input tuple
// plus `extra`, the dimension of the parameter cell the map comes from.
CheckReport check_cellular(const PointMap& f, int inputs, int d, long samples, std::mt19937_64& rng, int extra = 0);
// The parameter cell of g: one dimension per μ_s / φ_s with 0 < s < 1.
int parameter_cell_dimension(const GraphTerm& g);
CheckReport check_cellular(const GraphTerm& g, int d, long samples, std::mt19937_64& rng);

enum class Cosimplicial { Coface, Codegeneracy };

// Φ(g, τx) = τΦ(g, x) for τ = δ_index : Δ^d → Δ^{d+1} or σ_index : Δ^{d+1} → Δ^d.
// Float mode compares within tolerance.
CheckReport check_naturality(const GraphTerm& g, Cosimplicial op, int index, int d, long samples,
                             std::mt19937_64& rng, bool float_mode = false, double tolerance = 1e-12);

// Cell images under one generator: Δ gives the pairs [v_0..v_i]×[v_i..v_k],
// ε the point, μ (all s) the spanned face, φ (all s) the face itself.
// For μ the input has two factors.
std::vector<Tensor> face_action(Generator kind, const Tensor& faces);

// Samples interior points of the input cells and checks the supports of the
// outputs lie in the cells predicted by face_action.
CheckReport check_face_action_numeric(Generator kind, const Tensor& faces, int d, long samples,
                                      std::mt19937_64& rng);
// Union of the supports of ψ_s(barycenter a, barycenter b) for s on a grid
// of the given resolution.
Face product_grid_cover(const Face& a, const Face& b, int d, int resolution);

}  // namespace einf
