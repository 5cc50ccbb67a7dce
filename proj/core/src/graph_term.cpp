#include "einf/graph_term.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "einf/errors.hpp"

namespace einf {

const char* generator_name(Generator g) {
  switch (g) {
    case Generator::Counit: return "eps";
    case Generator::Coproduct: return "delta";
    case Generator::Product: return "mu";
    case Generator::CounitHomotopy: return "h";
    case Generator::Unit: return "unit";
  }
  return "?";
}

int generator_dimension(Generator g) {
  return (g == Generator::Product || g == Generator::CounitHomotopy) ? 1 : 0;
}

int in_arity(const Vertex& v) {
  switch (v.kind) {
    case Generator::Counit:
    case Generator::Coproduct:
    case Generator::CounitHomotopy: return 1;
    case Generator::Product: return 2;
    case Generator::Unit: return v.unit_arity;
  }
  return 0;
}

int out_arity(const Vertex& v) {
  switch (v.kind) {
    case Generator::Counit: return 0;
    case Generator::Coproduct: return 2;
    case Generator::Product:
    case Generator::CounitHomotopy: return 1;
    case Generator::Unit: return v.unit_arity;
  }
  return 0;
}

Incidence incidence(const GraphTerm& g) {
  Incidence inc;
  const auto& vs = g.vertices();
  inc.in.resize(vs.size());
  inc.out.resize(vs.size());
  for (std::size_t v = 0; v < vs.size(); ++v) {
    inc.in[v].assign(static_cast<std::size_t>(in_arity(vs[v])), -1);
    inc.out[v].assign(static_cast<std::size_t>(out_arity(vs[v])), -1);
  }
  inc.input_port.assign(static_cast<std::size_t>(g.inputs()), -1);
  inc.output_port.assign(static_cast<std::size_t>(g.outputs()), -1);
  const auto& es = g.edges();
  for (std::size_t e = 0; e < es.size(); ++e) {
    const int id = static_cast<int>(e);
    const Edge& ed = es[e];
    if (ed.from.is_port())
      inc.input_port.at(static_cast<std::size_t>(ed.from.slot)) = id;
    else
      inc.out.at(static_cast<std::size_t>(ed.from.vertex)).at(static_cast<std::size_t>(ed.from.slot)) = id;
    if (ed.to.is_port())
      inc.output_port.at(static_cast<std::size_t>(ed.to.slot)) = id;
    else
      inc.in.at(static_cast<std::size_t>(ed.to.vertex)).at(static_cast<std::size_t>(ed.to.slot)) = id;
  }
  return inc;
}

bool ValidationReport::has(ViolationKind k) const {
  return std::any_of(violations.begin(), violations.end(), [k](const Violation& v) { return v.kind == k; });
}

std::string ValidationReport::summary() const {
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += v.message;
  }
  return s.empty() ? "ok" : s;
}

namespace {

// Returns vertices in Kahn order; shorter than |V| iff there is a cycle.
// Edges whose endpoints are out of range are ignored here.
std::vector<int> kahn(const GraphTerm& g) {
  const int nv = static_cast<int>(g.vertices().size());
  std::vector<int> indeg(static_cast<std::size_t>(nv), 0);
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(nv));
  for (const Edge& e : g.edges()) {
    if (e.from.is_port() || e.to.is_port()) continue;
    if (e.from.vertex < 0 || e.from.vertex >= nv || e.to.vertex < 0 || e.to.vertex >= nv) continue;
    succ[static_cast<std::size_t>(e.from.vertex)].push_back(e.to.vertex);
    ++indeg[static_cast<std::size_t>(e.to.vertex)];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < nv; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
  std::vector<int> order;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int w : succ[static_cast<std::size_t>(v)])
      if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push(w);
  }
  return order;
}

std::string where(const Endpoint& p, bool source) {
  if (p.is_port()) return std::string(source ? "input port " : "output port ") + std::to_string(p.slot + 1);
  return "vertex " + std::to_string(p.vertex) + (source ? " out-slot " : " in-slot ") + std::to_string(p.slot);
}

}  // namespace

ValidationReport validate(const GraphTerm& g) {
  ValidationReport rep;
  auto add = [&rep](ViolationKind k, std::string msg) { rep.violations.push_back({k, std::move(msg)}); };
  const auto& vs = g.vertices();
  const int nv = static_cast<int>(vs.size());

  for (int v = 0; v < nv; ++v) {
    const Vertex& vx = vs[static_cast<std::size_t>(v)];
    if (static_cast<int>(vx.params.size()) != generator_dimension(vx.kind))
      add(ViolationKind::BadParameter, "vertex " + std::to_string(v) + " has wrong parameter count");
    for (const auto& p : vx.params)
      if (!in_unit_interval(p))
        add(ViolationKind::BadParameter, "vertex " + std::to_string(v) + " parameter " + to_string(p) + " outside [0,1]");
    if (vx.kind == Generator::Unit && vx.unit_arity < 0)
      add(ViolationKind::ArityMismatch, "unit vertex with negative arity");
    if (!vx.in_perm.images().empty() && static_cast<int>(vx.in_perm.size()) != in_arity(vx))
      add(ViolationKind::ArityMismatch, "vertex " + std::to_string(v) + " input decoration has wrong size");
    if (!vx.out_perm.images().empty() && static_cast<int>(vx.out_perm.size()) != out_arity(vx))
      add(ViolationKind::ArityMismatch, "vertex " + std::to_string(v) + " output decoration has wrong size");
  }

  std::map<Endpoint, int> src_use, dst_use;
  for (const Edge& e : g.edges()) {
    bool ok = true;
    if (e.from.is_port()) {
      if (e.from.slot < 0 || e.from.slot >= g.inputs()) {
        add(ViolationKind::BadPort, "edge from nonexistent " + where(e.from, true));
        ok = false;
      }
    } else if (e.from.vertex < 0 || e.from.vertex >= nv) {
      add(ViolationKind::BadPort, "edge from nonexistent vertex " + std::to_string(e.from.vertex));
      ok = false;
    } else if (e.from.slot < 0 || e.from.slot >= out_arity(vs[static_cast<std::size_t>(e.from.vertex)])) {
      add(ViolationKind::ArityMismatch, "edge from " + where(e.from, true) + " beyond the vertex's arity");
      ok = false;
    }
    if (e.to.is_port()) {
      if (e.to.slot < 0 || e.to.slot >= g.outputs()) {
        add(ViolationKind::BadPort, "edge to nonexistent " + where(e.to, false));
        ok = false;
      }
    } else if (e.to.vertex < 0 || e.to.vertex >= nv) {
      add(ViolationKind::BadPort, "edge to nonexistent vertex " + std::to_string(e.to.vertex));
      ok = false;
    } else if (e.to.slot < 0 || e.to.slot >= in_arity(vs[static_cast<std::size_t>(e.to.vertex)])) {
      add(ViolationKind::ArityMismatch, "edge to " + where(e.to, false) + " beyond the vertex's arity");
      ok = false;
    }
    if (!ok) continue;
    if (++src_use[e.from] == 2) add(ViolationKind::DuplicateEndpoint, where(e.from, true) + " has several edges");
    if (++dst_use[e.to] == 2) add(ViolationKind::DuplicateEndpoint, where(e.to, false) + " has several edges");
  }
  for (int i = 0; i < g.inputs(); ++i)
    if (!src_use.count(port(i))) add(ViolationKind::DanglingSlot, where(port(i), true) + " is not wired");
  for (int j = 0; j < g.outputs(); ++j)
    if (!dst_use.count(port(j))) add(ViolationKind::DanglingSlot, where(port(j), false) + " is not wired");
  for (int v = 0; v < nv; ++v) {
    const Vertex& vx = vs[static_cast<std::size_t>(v)];
    for (int k = 0; k < in_arity(vx); ++k)
      if (!dst_use.count(slot(v, k))) add(ViolationKind::DanglingSlot, where(slot(v, k), false) + " is not wired");
    for (int k = 0; k < out_arity(vx); ++k)
      if (!src_use.count(slot(v, k))) add(ViolationKind::DanglingSlot, where(slot(v, k), true) + " is not wired");
  }
  for (const Edge& e : g.edges())
    if (!e.from.is_port() && e.from.vertex == e.to.vertex) {
      add(ViolationKind::Cycle, "vertex " + std::to_string(e.from.vertex) + " feeds itself");
      return rep;
    }
  if (static_cast<int>(kahn(g).size()) != nv) add(ViolationKind::Cycle, "directed cycle found");
  return rep;
}

void require_valid(const GraphTerm& g) {
  auto rep = validate(g);
  if (!rep.ok()) throw ValidationError(rep.summary());
}

std::vector<int> topological_order(const GraphTerm& g) {
  auto order = kahn(g);
  if (order.size() != g.vertices().size()) throw ValidationError("directed cycle found");
  return order;
}

GraphTerm unit(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back({port(i), port(i)});
  return GraphTerm(n, n, {}, std::move(es));
}

GraphTerm single_vertex(const Vertex& v) {
  std::vector<Edge> es;
  const int a = in_arity(v), b = out_arity(v);
  for (int k = 0; k < a; ++k) es.push_back({port(k), slot(0, k)});
  for (int k = 0; k < b; ++k) es.push_back({slot(0, k), port(k)});
  return GraphTerm(a, b, {v}, std::move(es));
}

GraphTerm permutation_term(const Permutation& sigma) {
  std::vector<Edge> es;
  const int k = static_cast<int>(sigma.size());
  for (int i = 0; i < k; ++i) es.push_back({port(i), port(sigma(i))});
  return GraphTerm(k, k, {}, std::move(es));
}

GraphTerm swap_term() { return permutation_term(Permutation({1, 0})); }

GraphTerm horizontal_compose(const std::vector<GraphTerm>& gs) {
  int n = 0, m = 0;
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (const auto& g : gs) {
    const int voff = static_cast<int>(vs.size());
    vs.insert(vs.end(), g.vertices().begin(), g.vertices().end());
    for (Edge e : g.edges()) {
      if (e.from.is_port()) e.from.slot += n; else e.from.vertex += voff;
      if (e.to.is_port()) e.to.slot += m; else e.to.vertex += voff;
      es.push_back(e);
    }
    n += g.inputs();
    m += g.outputs();
  }
  return GraphTerm(n, m, std::move(vs), std::move(es));
}

GraphTerm horizontal_compose(const GraphTerm& a, const GraphTerm& b) { return horizontal_compose(std::vector<GraphTerm>{a, b}); }

GraphTerm vertical_compose(const GraphTerm& top, const GraphTerm& bottom) {
  if (top.outputs() != bottom.inputs())
    throw ValidationError("biarity mismatch: top has " + std::to_string(top.outputs()) + " outputs, bottom has " +
                          std::to_string(bottom.inputs()) + " inputs");
  const int voff = static_cast<int>(top.vertices().size());
  std::vector<Vertex> vs = top.vertices();
  vs.insert(vs.end(), bottom.vertices().begin(), bottom.vertices().end());
  std::vector<Endpoint> wire_src(static_cast<std::size_t>(top.outputs()));
  std::vector<Edge> es;
  for (const Edge& e : top.edges()) {
    if (e.to.is_port()) wire_src[static_cast<std::size_t>(e.to.slot)] = e.from;
    else es.push_back(e);
  }
  for (Edge e : bottom.edges()) {
    if (!e.to.is_port()) e.to.vertex += voff;
    if (e.from.is_port()) e.from = wire_src.at(static_cast<std::size_t>(e.from.slot));
    else e.from.vertex += voff;
    es.push_back(e);
  }
  return GraphTerm(top.inputs(), bottom.outputs(), std::move(vs), std::move(es));
}

GraphTerm permute_inputs(const GraphTerm& g, const Permutation& sigma) {
  if (static_cast<int>(sigma.size()) != g.inputs()) throw ValidationError("permutation size does not match input count");
  return vertical_compose(permutation_term(sigma), g);
}

GraphTerm permute_outputs(const GraphTerm& g, const Permutation& tau) {
  if (static_cast<int>(tau.size()) != g.outputs()) throw ValidationError("permutation size does not match output count");
  return vertical_compose(g, permutation_term(tau));
}

GraphTerm remove_vertices(int n, int m, const std::vector<Vertex>& vertices, const std::vector<Edge>& edges,
                          const std::vector<char>& dead_vertex) {
  std::vector<int> remap(vertices.size(), -1);
  std::vector<Vertex> vs;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (!dead_vertex[v]) {
      remap[v] = static_cast<int>(vs.size());
      vs.push_back(vertices[v]);
    }
  std::vector<Edge> es;
  for (Edge e : edges) {
    if (!e.from.is_port()) e.from.vertex = remap.at(static_cast<std::size_t>(e.from.vertex));
    if (!e.to.is_port()) e.to.vertex = remap.at(static_cast<std::size_t>(e.to.vertex));
    if ((!e.from.is_port() && e.from.vertex < 0) || (!e.to.is_port() && e.to.vertex < 0))
      throw InvariantError("edge left attached to a removed vertex");
    es.push_back(e);
  }
  return GraphTerm(n, m, std::move(vs), std::move(es));
}

GraphTerm substitute_vertex(const GraphTerm& g, int v, const GraphTerm& h) {
  const Vertex& vx = g.vertices().at(static_cast<std::size_t>(v));
  if (h.inputs() != in_arity(vx) || h.outputs() != out_arity(vx))
    throw ValidationError("substitute_vertex: biarity mismatch");
  const int voff = static_cast<int>(g.vertices().size());
  std::vector<Vertex> vs = g.vertices();
  vs.insert(vs.end(), h.vertices().begin(), h.vertices().end());
  std::vector<Endpoint> in_src(static_cast<std::size_t>(h.inputs()));
  std::vector<Endpoint> out_dst(static_cast<std::size_t>(h.outputs()));
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    const bool into_v = !e.to.is_port() && e.to.vertex == v;
    const bool out_of_v = !e.from.is_port() && e.from.vertex == v;
    if (into_v) in_src[static_cast<std::size_t>(e.to.slot)] = e.from;
    if (out_of_v) out_dst[static_cast<std::size_t>(e.from.slot)] = e.to;
    if (!into_v && !out_of_v) es.push_back(e);
  }
  // a self-loop at v is impossible in a valid graph, so in_src/out_dst never point at v
  for (Edge e : h.edges()) {
    Endpoint from = e.from.is_port() ? in_src[static_cast<std::size_t>(e.from.slot)] : Endpoint{e.from.vertex + voff, e.from.slot};
    Endpoint to = e.to.is_port() ? out_dst[static_cast<std::size_t>(e.to.slot)] : Endpoint{e.to.vertex + voff, e.to.slot};
    es.push_back({from, to});
  }
  std::vector<char> dead(vs.size(), 0);
  dead[static_cast<std::size_t>(v)] = 1;
  return remove_vertices(g.inputs(), g.outputs(), vs, es, dead);
}

GraphTerm absorb_equivalences(const GraphTerm& g) {
  std::vector<Vertex> vs = g.vertices();
  std::vector<Edge> es = g.edges();
  for (std::size_t v = 0; v < vs.size(); ++v) {
    Vertex& vx = vs[v];
    for (Edge& e : es) {
      if (!e.to.is_port() && e.to.vertex == static_cast<int>(v) && !vx.in_perm.images().empty())
        e.to.slot = vx.in_perm(e.to.slot);
      if (!e.from.is_port() && e.from.vertex == static_cast<int>(v) && !vx.out_perm.images().empty())
        e.from.slot = vx.out_perm(e.from.slot);
    }
    vx.in_perm = Permutation();
    vx.out_perm = Permutation();
  }
  // Unit vertices become through-strands. Splice one at a time; chains of
  // units resolve because each splice rewires to the current endpoints.
  std::vector<char> dead(vs.size(), 0);
  for (std::size_t v = 0; v < vs.size(); ++v) {
    if (vs[v].kind != Generator::Unit) continue;
    const int k = vs[v].unit_arity;
    for (int t = 0; t < k; ++t) {
      int ein = -1, eout = -1;
      for (std::size_t e = 0; e < es.size(); ++e) {
        if (es[e].to == slot(static_cast<int>(v), t)) ein = static_cast<int>(e);
        if (es[e].from == slot(static_cast<int>(v), t)) eout = static_cast<int>(e);
      }
      if (ein < 0 || eout < 0) throw ValidationError("unit vertex with unwired slot");
      es[static_cast<std::size_t>(ein)].to = es[static_cast<std::size_t>(eout)].to;
      es.erase(es.begin() + eout);
    }
    dead[v] = 1;
  }
  return remove_vertices(g.inputs(), g.outputs(), vs, es, dead);
}

namespace {

std::string describe(const Vertex& v) {
  std::string s = generator_name(v.kind);
  if (v.kind == Generator::Unit) s += "#" + std::to_string(v.unit_arity);
  for (const auto& p : v.params) s += "(" + to_string(p) + ")";
  if (!v.in_perm.images().empty() && !v.in_perm.is_identity()) s += "<" + v.in_perm.to_string();
  if (!v.out_perm.images().empty() && !v.out_perm.is_identity()) s += ">" + v.out_perm.to_string();
  return s;
}

}  // namespace

std::string canonical_serialization(const GraphTerm& g) {
  // Label vertices in order of discovery from the input ports (breadth first,
  // output slots in order). Ports and slots are labeled, so the order depends
  // only on the isomorphism class.
  const auto inc = incidence(g);
  const auto& vs = g.vertices();
  const auto& es = g.edges();
  std::vector<int> label(vs.size(), -1);
  std::vector<int> order;
  std::queue<int> q;
  for (int e : inc.input_port) q.push(e);
  while (!q.empty()) {
    const Edge& e = es[static_cast<std::size_t>(q.front())];
    q.pop();
    if (e.to.is_port()) continue;
    const auto v = static_cast<std::size_t>(e.to.vertex);
    if (label[v] >= 0) continue;
    label[v] = static_cast<int>(order.size());
    order.push_back(static_cast<int>(v));
    for (int oe : inc.out[v]) q.push(oe);
  }
  // Vertices without inputs (only 0-ary units) are not reachable; they carry
  // no wiring so a sorted multiset of descriptions suffices.
  std::vector<std::string> isolated;
  for (std::size_t v = 0; v < vs.size(); ++v)
    if (label[v] < 0) {
      if (in_arity(vs[v]) != 0) throw InvariantError("unreachable vertex with inputs");
      isolated.push_back(describe(vs[v]));
    }
  std::sort(isolated.begin(), isolated.end());

  auto src = [&](int e) {
    const Endpoint& f = es[static_cast<std::size_t>(e)].from;
    if (f.is_port()) return "i" + std::to_string(f.slot);
    return "v" + std::to_string(label[static_cast<std::size_t>(f.vertex)]) + "." + std::to_string(f.slot);
  };
  std::ostringstream os;
  os << g.inputs() << "," << g.outputs() << "|";
  for (int v : order) {
    os << describe(vs[static_cast<std::size_t>(v)]) << "[";
    for (int e : inc.in[static_cast<std::size_t>(v)]) os << src(e) << " ";
    os << "]";
  }
  os << "|";
  for (int e : inc.output_port) os << src(e) << " ";
  os << "|";
  for (const auto& s : isolated) os << s << " ";
  return os.str();
}

bool iso_equal(const GraphTerm& a, const GraphTerm& b) {
  if (a.inputs() != b.inputs() || a.outputs() != b.outputs()) return false;
  return canonical_serialization(absorb_equivalences(a)) == canonical_serialization(absorb_equivalences(b));
}

int count_kind(const GraphTerm& g, Generator k) {
  return static_cast<int>(std::count_if(g.vertices().begin(), g.vertices().end(),
                                        [k](const Vertex& v) { return v.kind == k; }));
}

}  // namespace einf
