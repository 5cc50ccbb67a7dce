#pragma once

// Mutable graph used by the rewrite engines. Slot tables are kept in sync
// with the edge list by set_from/set_to; dead entries are compacted only when
// converting back to a GraphTerm.

#include <random>
#include <vector>

#include "einf/graph_term.hpp"
#include "einf/rational.hpp"

namespace einf::detail {

struct WEdge {
  Endpoint from;
  Endpoint to;
  Rational w;
  bool alive = true;
};

struct WVertex {
  Generator kind = Generator::Counit;
  Rational param;
  bool has_param = false;
  bool alive = true;
  std::vector<int> in;
  std::vector<int> out;
};

enum class Rule {
  CoproductCounitLeft,   // Δ;(ε|id) -> id
  CoproductCounitRight,  // Δ;(id|ε) -> id
  CoproductCounitBoth,   // Δ;(ε|ε) -> ε
  ProductCounit,         // μ;ε -> ε|ε
  HomotopyCounit,        // φ;ε -> ε
  Leibniz,               // μ;Δ -> three cases by weight
  Bubble,                // Δ;μ (uncrossed) -> id
  CoassocRotate,         // Δ;(id|Δ) -> Δ;(Δ|id)
  AssocRotate,           // (id|μ);μ -> (μ|id);μ
};

struct Site {
  Rule rule;
  int v;  // the upper vertex of the pattern
};

class WorkGraph {
 public:
  WorkGraph(const GraphTerm& g, const std::vector<Rational>* weights);

  int n = 0, m = 0;
  bool weighted = false;
  std::vector<WVertex> V;
  std::vector<WEdge> E;
  std::vector<int> in_port, out_port;

  int add_vertex(Generator kind, int nin, int nout);
  int add_edge(Endpoint from, Endpoint to, const Rational& w);
  void set_from(int e, Endpoint f);
  void set_to(int e, Endpoint t);
  void kill_edge(int e) { E[static_cast<std::size_t>(e)].alive = false; }
  void kill_vertex(int v) { V[static_cast<std::size_t>(v)].alive = false; }

  const WVertex& vx(int v) const { return V[static_cast<std::size_t>(v)]; }
  WVertex& vx(int v) { return V[static_cast<std::size_t>(v)]; }
  const WEdge& ed(int e) const { return E[static_cast<std::size_t>(e)]; }
  WEdge& ed(int e) { return E[static_cast<std::size_t>(e)]; }

  // Vertex at the far end of an edge, or -1 for a port.
  int head(int e) const { return ed(e).to.is_port() ? -1 : ed(e).to.vertex; }
  int tail(int e) const { return ed(e).from.is_port() ? -1 : ed(e).from.vertex; }
  bool head_is(int e, Generator k) const { return head(e) >= 0 && vx(head(e)).kind == k; }
  bool tail_is(int e, Generator k) const { return tail(e) >= 0 && vx(tail(e)).kind == k; }

  std::vector<int> topo_order() const;
  int alive_vertices() const;
  GraphTerm to_graph() const;
};

std::vector<Site> find_sites(const WorkGraph& g, const std::vector<Rule>& rules);
void apply_site(WorkGraph& g, const Site& s);

// Runs the rules to a fixpoint. With rng == nullptr the first site in
// topological order (ties: rule order as listed) is taken; otherwise a
// uniformly random site. Returns the number of rewrites.
long rewrite_to_fixpoint(WorkGraph& g, const std::vector<Rule>& rules, std::mt19937_64* rng);

}  // namespace einf::detail
