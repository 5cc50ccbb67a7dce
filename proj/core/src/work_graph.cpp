#include "work_graph.hpp"

#include <queue>

#include "einf/errors.hpp"

namespace einf::detail {

WorkGraph::WorkGraph(const GraphTerm& g, const std::vector<Rational>* weights)
    : n(g.inputs()), m(g.outputs()), weighted(weights != nullptr) {
  for (const Vertex& v : g.vertices()) {
    if (v.kind == Generator::Unit || !v.in_perm.images().empty() || !v.out_perm.images().empty())
      throw InvariantError("rewrite engine expects absorbed graphs");
    WVertex w;
    w.kind = v.kind;
    w.has_param = !v.params.empty();
    if (w.has_param) w.param = v.params[0];
    w.in.assign(static_cast<std::size_t>(in_arity(v)), -1);
    w.out.assign(static_cast<std::size_t>(out_arity(v)), -1);
    V.push_back(std::move(w));
  }
  in_port.assign(static_cast<std::size_t>(n), -1);
  out_port.assign(static_cast<std::size_t>(m), -1);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& x = g.edges()[e];
    add_edge(x.from, x.to, weights ? (*weights)[e] : Rational(0));
  }
}

int WorkGraph::add_vertex(Generator kind, int nin, int nout) {
  WVertex w;
  w.kind = kind;
  w.in.assign(static_cast<std::size_t>(nin), -1);
  w.out.assign(static_cast<std::size_t>(nout), -1);
  V.push_back(std::move(w));
  return static_cast<int>(V.size()) - 1;
}

int WorkGraph::add_edge(Endpoint from, Endpoint to, const Rational& w) {
  E.push_back({from, to, w, true});
  const int id = static_cast<int>(E.size()) - 1;
  set_from(id, from);
  set_to(id, to);
  return id;
}

void WorkGraph::set_from(int e, Endpoint f) {
  ed(e).from = f;
  if (f.is_port()) in_port[static_cast<std::size_t>(f.slot)] = e;
  else vx(f.vertex).out[static_cast<std::size_t>(f.slot)] = e;
}

void WorkGraph::set_to(int e, Endpoint t) {
  ed(e).to = t;
  if (t.is_port()) out_port[static_cast<std::size_t>(t.slot)] = e;
  else vx(t.vertex).in[static_cast<std::size_t>(t.slot)] = e;
}

std::vector<int> WorkGraph::topo_order() const {
  std::vector<int> indeg(V.size(), 0);
  for (const auto& e : E)
    if (e.alive && !e.to.is_port() && !e.from.is_port()) ++indeg[static_cast<std::size_t>(e.to.vertex)];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (std::size_t v = 0; v < V.size(); ++v)
    if (V[v].alive && indeg[v] == 0) ready.push(static_cast<int>(v));
  std::vector<int> order;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int e : vx(v).out) {
      int h = head(e);
      if (h >= 0 && --indeg[static_cast<std::size_t>(h)] == 0) ready.push(h);
    }
  }
  if (static_cast<int>(order.size()) != alive_vertices()) throw InvariantError("rewrite produced a cycle");
  return order;
}

int WorkGraph::alive_vertices() const {
  int c = 0;
  for (const auto& v : V) c += v.alive ? 1 : 0;
  return c;
}

GraphTerm WorkGraph::to_graph() const {
  std::vector<int> vmap(V.size(), -1);
  std::vector<Vertex> vs;
  for (std::size_t v = 0; v < V.size(); ++v) {
    if (!V[v].alive) continue;
    vmap[v] = static_cast<int>(vs.size());
    Vertex out;
    out.kind = V[v].kind;
    if (V[v].has_param) {
      Rational s = V[v].param;
      if (weighted && V[v].kind == Generator::Product) {
        const Rational& a = ed(V[v].out[0]).w;
        if (a > 0) s = ed(V[v].in[1]).w / a;
      }
      out.params.push_back(s);
    }
    vs.push_back(std::move(out));
  }
  std::vector<Edge> es;
  for (const auto& e : E) {
    if (!e.alive) continue;
    Edge x{e.from, e.to};
    if (!x.from.is_port()) x.from.vertex = vmap[static_cast<std::size_t>(x.from.vertex)];
    if (!x.to.is_port()) x.to.vertex = vmap[static_cast<std::size_t>(x.to.vertex)];
    if ((!x.from.is_port() && x.from.vertex < 0) || (!x.to.is_port() && x.to.vertex < 0))
      throw InvariantError("live edge attached to a dead vertex");
    es.push_back(x);
  }
  return GraphTerm(n, m, std::move(vs), std::move(es));
}

namespace {

bool matches(const WorkGraph& g, Rule r, int v) {
  const WVertex& x = g.vx(v);
  using G = Generator;
  switch (r) {
    case Rule::CoproductCounitLeft:
      return x.kind == G::Coproduct && g.head_is(x.out[0], G::Counit);
    case Rule::CoproductCounitRight:
      return x.kind == G::Coproduct && g.head_is(x.out[1], G::Counit);
    case Rule::CoproductCounitBoth:
      return x.kind == G::Coproduct && g.head_is(x.out[0], G::Counit) && g.head_is(x.out[1], G::Counit);
    case Rule::ProductCounit:
      return x.kind == G::Product && g.head_is(x.out[0], G::Counit);
    case Rule::HomotopyCounit:
      return x.kind == G::CounitHomotopy && g.head_is(x.out[0], G::Counit);
    case Rule::Leibniz:
      return x.kind == G::Product && g.head_is(x.out[0], G::Coproduct);
    case Rule::Bubble: {
      if (x.kind != G::Coproduct || !g.head_is(x.out[0], G::Product)) return false;
      const Endpoint a = g.ed(x.out[0]).to, b = g.ed(x.out[1]).to;
      return a.slot == 0 && b == Endpoint{a.vertex, 1};
    }
    case Rule::CoassocRotate:
      return x.kind == G::Coproduct && g.head_is(x.out[1], G::Coproduct);
    case Rule::AssocRotate:
      return x.kind == G::Product && g.tail_is(x.in[1], G::Product);
  }
  return false;
}

}  // namespace

std::vector<Site> find_sites(const WorkGraph& g, const std::vector<Rule>& rules) {
  std::vector<Site> out;
  for (int v : g.topo_order())
    for (Rule r : rules)
      if (matches(g, r, v)) out.push_back({r, v});
  return out;
}

void apply_site(WorkGraph& g, const Site& s) {
  const int v = s.v;
  switch (s.rule) {
    case Rule::CoproductCounitLeft:
    case Rule::CoproductCounitRight: {
      const int k = s.rule == Rule::CoproductCounitLeft ? 0 : 1;
      const int ek = g.vx(v).out[static_cast<std::size_t>(k)];
      const int eo = g.vx(v).out[static_cast<std::size_t>(1 - k)];
      const int ei = g.vx(v).in[0];
      const int z = g.head(ek);
      g.ed(ei).w = g.ed(eo).w;
      g.set_to(ei, g.ed(eo).to);
      g.kill_edge(ek);
      g.kill_edge(eo);
      g.kill_vertex(z);
      g.kill_vertex(v);
      break;
    }
    case Rule::CoproductCounitBoth: {
      const int e0 = g.vx(v).out[0], e1 = g.vx(v).out[1], ei = g.vx(v).in[0];
      const int z0 = g.head(e0), z1 = g.head(e1);
      g.set_to(ei, slot(z0, 0));
      g.kill_edge(e0);
      g.kill_edge(e1);
      g.kill_vertex(z1);
      g.kill_vertex(v);
      break;
    }
    case Rule::ProductCounit: {
      const int eo = g.vx(v).out[0], p = g.vx(v).in[0], q = g.vx(v).in[1];
      const int z = g.head(eo);
      g.set_to(p, slot(z, 0));
      const int z2 = g.add_vertex(Generator::Counit, 1, 0);
      g.set_to(q, slot(z2, 0));
      g.kill_edge(eo);
      g.kill_vertex(v);
      break;
    }
    case Rule::HomotopyCounit: {
      const int eo = g.vx(v).out[0], ei = g.vx(v).in[0];
      g.set_to(ei, g.ed(eo).to);
      g.kill_edge(eo);
      g.kill_vertex(v);
      break;
    }
    case Rule::Leibniz: {
      if (!g.weighted) throw InvariantError("Leibniz needs edge weights");
      const int M = v;
      const int emd = g.vx(M).out[0];
      const int D = g.head(emd);
      const int P = g.vx(M).in[0], Q = g.vx(M).in[1];
      const int R = g.vx(D).out[0], T = g.vx(D).out[1];
      const Rational a1 = g.ed(P).w, b1 = g.ed(R).w;
      if (a1 > b1) {
        g.set_to(P, slot(D, 0));
        g.set_from(emd, slot(D, 1));
        g.set_to(emd, slot(M, 0));
        g.ed(emd).w = a1 - b1;
        g.set_from(T, slot(M, 0));
      } else if (a1 == b1) {
        g.set_to(P, g.ed(R).to);
        g.set_to(Q, g.ed(T).to);
        g.kill_edge(R);
        g.kill_edge(T);
        g.kill_edge(emd);
        g.kill_vertex(M);
        g.kill_vertex(D);
      } else {
        g.set_to(Q, slot(D, 0));
        g.set_from(emd, slot(D, 0));
        g.set_to(emd, slot(M, 1));
        g.ed(emd).w = b1 - a1;
        g.set_from(R, slot(M, 0));
      }
      break;
    }
    case Rule::Bubble: {
      const int e0 = g.vx(v).out[0], e1 = g.vx(v).out[1], ei = g.vx(v).in[0];
      const int M = g.head(e0);
      const int eo = g.vx(M).out[0];
      g.set_to(ei, g.ed(eo).to);
      g.kill_edge(e0);
      g.kill_edge(e1);
      g.kill_edge(eo);
      g.kill_vertex(M);
      g.kill_vertex(v);
      break;
    }
    case Rule::CoassocRotate: {
      const int D = v;
      const int A = g.vx(D).out[0], eb = g.vx(D).out[1];
      const int D2 = g.head(eb);
      const int B = g.vx(D2).out[0], C = g.vx(D2).out[1];
      g.ed(eb).w = g.ed(A).w + g.ed(B).w;
      g.set_from(C, slot(D, 1));
      g.set_from(A, slot(D2, 0));
      g.set_from(B, slot(D2, 1));
      g.set_from(eb, slot(D, 0));
      break;
    }
    case Rule::AssocRotate: {
      const int M = v;
      const int A = g.vx(M).in[0], eb = g.vx(M).in[1];
      const int M2 = g.tail(eb);
      const int B = g.vx(M2).in[0], C = g.vx(M2).in[1];
      g.ed(eb).w = g.ed(A).w + g.ed(B).w;
      g.set_to(C, slot(M, 1));
      g.set_to(A, slot(M2, 0));
      g.set_to(B, slot(M2, 1));
      g.set_to(eb, slot(M, 0));
      // stored parameters are refreshed from weights when converting back;
      // in unweighted mode the rotation is only used on parameter-free data
      break;
    }
  }
}

long rewrite_to_fixpoint(WorkGraph& g, const std::vector<Rule>& rules, std::mt19937_64* rng) {
  long steps = 0;
  const long cap = 100000;
  for (;;) {
    auto sites = find_sites(g, rules);
    if (sites.empty()) return steps;
    std::size_t pick = 0;
    if (rng) pick = std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(*rng);
    apply_site(g, sites[pick]);
    if (++steps > cap) throw InvariantError("rewrite did not terminate");
  }
}

}  // namespace einf::detail
