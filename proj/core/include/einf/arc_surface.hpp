#pragma once

#include <random>
#include <string>
#include <vector>

#include "einf/graph_term.hpp"
#include "einf/rational.hpp"
#include "einf/weighted_surjection.hpp"

namespace einf {

enum class RibbonVertexKind { Interior, Incoming, Outgoing };

struct RibbonVertex {
  RibbonVertexKind kind = RibbonVertexKind::Interior;
  int label = 0;                         // port index, or graph vertex index
  Generator generator = Generator::Unit;  // interior vertices only
  std::vector<int> darts;                // cyclic order
};

// Dart 2e sits at the tail of edge e, dart 2e+1 at its head.
struct RibbonEdge {
  int tail = 0;
  int head = 0;
  bool boundary_loop = false;  // the interval glued into a boundary circle
  Rational weight = 0;
};

struct RibbonGraph {
  std::vector<RibbonVertex> vertices;
  std::vector<RibbonEdge> edges;

  bool is_boundary(int v) const { return vertices[static_cast<std::size_t>(v)].kind != RibbonVertexKind::Interior; }
  int dart_vertex(int dart) const;
  int inputs() const;
  int outputs() const;
  int boundary_vertex(RibbonVertexKind kind, int label) const;  // -1 if absent
};

// Empty string when every cyclic order is a permutation of the incident darts.
std::string ribbon_problems(const RibbonGraph& rg);

// Compactified canonical graph with the boundary intervals glued in. Interior
// vertices order their darts (inputs..., outputs...). Boundary vertices use
// (interval tail, interval head, strand ends...) unless rng is given, in which
// case their cyclic orders are drawn at random. Throws ValidationError for m = 0.
RibbonGraph to_ribbon(const WeightedSurjection& x, std::mt19937_64* rng = nullptr);

// Contract edges with exactly one end on a boundary circle whose interior end
// has no other edge of the same direction, until none is left.
RibbonGraph collapse_edges(const RibbonGraph& rg);

// Orbits of dart -> next dart after its opposite end; each starts at its
// smallest dart, listed in order of that dart.
std::vector<std::vector<int>> ribbon_loops(const RibbonGraph& rg);

struct Arc {
  int input = 0;
  int output = 0;
  Rational weight;
  bool operator==(const Arc&) const = default;
};

struct SurfaceSummary {
  int vertices = 0;
  int edges = 0;
  int faces = 0;  // ribbon loops minus the removed boundary disks
  int euler = 0;
  int genus = 0;
  int boundary = 0;
  int components = 0;
  std::vector<Arc> arcs;  // by input, in cyclic order after the interval
  bool operator==(const SurfaceSummary&) const = default;
};

SurfaceSummary surface_summary(const RibbonGraph& rg);
// Summary of the collapsed ribbon graph of x.
SurfaceSummary surface_summary(const WeightedSurjection& x, std::mt19937_64* rng = nullptr);

// Read the element back from a collapsed ribbon graph whose non-loop edges all
// run from an incoming to an outgoing circle. Throws InvariantError otherwise.
WeightedSurjection recover_surjection(const RibbonGraph& collapsed);

// Edge id of the k-th arc leaving incoming circle i.
int arc_at(const RibbonGraph& collapsed, int input, int k);
// The weight of the arc goes to 0: drop it, rescale the other arcs into the
// same output and merge arcs that became parallel neighbours.
RibbonGraph remove_arc(const RibbonGraph& collapsed, int edge);
// The same limit on the element: strand k of block i removed, its output's
// other strands rescaled, renormalized.
MSElement strand_weight_to_zero(const WeightedSurjection& x, int block, int k);

std::string to_dot(const RibbonGraph& rg);
std::string to_json(const SurfaceSummary& s, int indent = 2);
// Boundary circles in two rows with the arcs between them.
std::string to_svg(const WeightedSurjection& x);

}  // namespace einf
