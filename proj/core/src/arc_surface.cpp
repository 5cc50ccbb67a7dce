#include "einf/arc_surface.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "einf/errors.hpp"
#include "einf/presentation.hpp"
#include "json.hpp"

namespace einf {

int RibbonGraph::dart_vertex(int dart) const {
  const RibbonEdge& e = edges[static_cast<std::size_t>(dart / 2)];
  return dart % 2 ? e.head : e.tail;
}

int RibbonGraph::inputs() const {
  return static_cast<int>(std::count_if(vertices.begin(), vertices.end(),
                                        [](const RibbonVertex& v) { return v.kind == RibbonVertexKind::Incoming; }));
}

int RibbonGraph::outputs() const {
  return static_cast<int>(std::count_if(vertices.begin(), vertices.end(),
                                        [](const RibbonVertex& v) { return v.kind == RibbonVertexKind::Outgoing; }));
}

int RibbonGraph::boundary_vertex(RibbonVertexKind kind, int label) const {
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (vertices[v].kind == kind && vertices[v].label == label) return static_cast<int>(v);
  return -1;
}

std::string ribbon_problems(const RibbonGraph& rg) {
  std::vector<int> seen(rg.edges.size() * 2, 0);
  for (std::size_t v = 0; v < rg.vertices.size(); ++v)
    for (int d : rg.vertices[v].darts) {
      if (d < 0 || d >= static_cast<int>(seen.size())) return "dart out of range at vertex " + std::to_string(v);
      if (rg.dart_vertex(d) != static_cast<int>(v)) return "dart " + std::to_string(d) + " listed at the wrong vertex";
      if (seen[static_cast<std::size_t>(d)]++) return "dart " + std::to_string(d) + " listed twice";
    }
  for (std::size_t d = 0; d < seen.size(); ++d)
    if (!seen[d]) return "dart " + std::to_string(d) + " missing from its cyclic order";
  return "";
}

namespace {

// Drop dead vertices and edges, renumbering darts.
RibbonGraph compact(const RibbonGraph& rg, const std::vector<char>& vdead, const std::vector<char>& edead) {
  std::vector<int> vmap(rg.vertices.size(), -1), emap(rg.edges.size(), -1);
  RibbonGraph out;
  for (std::size_t v = 0; v < rg.vertices.size(); ++v)
    if (!vdead[v]) {
      vmap[v] = static_cast<int>(out.vertices.size());
      out.vertices.push_back(rg.vertices[v]);
    }
  for (std::size_t e = 0; e < rg.edges.size(); ++e)
    if (!edead[e]) {
      emap[e] = static_cast<int>(out.edges.size());
      RibbonEdge x = rg.edges[e];
      x.tail = vmap[static_cast<std::size_t>(x.tail)];
      x.head = vmap[static_cast<std::size_t>(x.head)];
      out.edges.push_back(x);
    }
  for (auto& v : out.vertices)
    for (int& d : v.darts) d = 2 * emap[static_cast<std::size_t>(d / 2)] + d % 2;
  return out;
}

int position(const std::vector<int>& darts, int d) {
  return static_cast<int>(std::find(darts.begin(), darts.end(), d) - darts.begin());
}

int interval_dart_edge(const RibbonGraph& rg, int v) {
  for (int d : rg.vertices[static_cast<std::size_t>(v)].darts)
    if (rg.edges[static_cast<std::size_t>(d / 2)].boundary_loop) return d / 2;
  return -1;
}

// Non-interval darts at a boundary vertex, read cyclically from just after the interval.
std::vector<int> strand_darts(const RibbonGraph& rg, int v) {
  const auto& ds = rg.vertices[static_cast<std::size_t>(v)].darts;
  const int k = static_cast<int>(ds.size());
  int start = 0;
  for (int i = 0; i < k; ++i) {
    const bool here = rg.edges[static_cast<std::size_t>(ds[static_cast<std::size_t>(i)] / 2)].boundary_loop;
    const bool next = rg.edges[static_cast<std::size_t>(ds[static_cast<std::size_t>((i + 1) % k)] / 2)].boundary_loop;
    if (here && !next) start = (i + 1) % k;
  }
  std::vector<int> out;
  for (int i = 0; i < k; ++i) {
    const int d = ds[static_cast<std::size_t>((start + i) % k)];
    if (!rg.edges[static_cast<std::size_t>(d / 2)].boundary_loop) out.push_back(d);
  }
  return out;
}

}  // namespace

RibbonGraph to_ribbon(const WeightedSurjection& x, std::mt19937_64* rng) {
  if (x.m() < 1) throw ValidationError("surfaces need at least one output");
  const GraphTerm g = absorb_equivalences(canonical_graph(x));
  const EdgeWeighting w = to_edge_weights(g);
  const Incidence inc = incidence(g);
  RibbonGraph rg;
  const int nv = static_cast<int>(g.vertices().size());
  for (int v = 0; v < nv; ++v) {
    RibbonVertex rv;
    rv.kind = RibbonVertexKind::Interior;
    rv.label = v;
    rv.generator = g.vertices()[static_cast<std::size_t>(v)].kind;
    for (int e : inc.in[static_cast<std::size_t>(v)]) rv.darts.push_back(2 * e + 1);
    for (int e : inc.out[static_cast<std::size_t>(v)]) rv.darts.push_back(2 * e);
    rg.vertices.push_back(std::move(rv));
  }
  for (int i = 0; i < g.inputs(); ++i) rg.vertices.push_back({RibbonVertexKind::Incoming, i, Generator::Unit, {}});
  for (int j = 0; j < g.outputs(); ++j) rg.vertices.push_back({RibbonVertexKind::Outgoing, j, Generator::Unit, {}});
  auto vertex_of = [&](const Endpoint& p, bool source) {
    if (!p.is_port()) return p.vertex;
    return source ? nv + p.slot : nv + g.inputs() + p.slot;
  };
  for (std::size_t e = 0; e < g.edges().size(); ++e)
    rg.edges.push_back({vertex_of(g.edges()[e].from, true), vertex_of(g.edges()[e].to, false), false, w[e]});
  for (int b = nv; b < static_cast<int>(rg.vertices.size()); ++b) {
    const int loop = static_cast<int>(rg.edges.size());
    rg.edges.push_back({b, b, true, 0});
    auto& ds = rg.vertices[static_cast<std::size_t>(b)].darts;
    ds = {2 * loop, 2 * loop + 1};
    const int label = rg.vertices[static_cast<std::size_t>(b)].label;
    const bool incoming = rg.vertices[static_cast<std::size_t>(b)].kind == RibbonVertexKind::Incoming;
    const int e = incoming ? inc.input_port[static_cast<std::size_t>(label)] : inc.output_port[static_cast<std::size_t>(label)];
    ds.push_back(incoming ? 2 * e : 2 * e + 1);
    if (rng) std::shuffle(ds.begin(), ds.end(), *rng);
  }
  return rg;
}

RibbonGraph collapse_edges(const RibbonGraph& rg0) {
  RibbonGraph rg = rg0;
  std::vector<char> vdead(rg.vertices.size(), 0), edead(rg.edges.size(), 0);
  for (;;) {
    int pick = -1;
    for (std::size_t e = 0; e < rg.edges.size() && pick < 0; ++e) {
      const RibbonEdge& x = rg.edges[e];
      if (edead[e] || x.boundary_loop || rg.is_boundary(x.tail) == rg.is_boundary(x.head)) continue;
      const int w = rg.is_boundary(x.tail) ? x.head : x.tail;
      const bool incoming_at_w = x.head == w;
      bool alone = true;
      for (int d : rg.vertices[static_cast<std::size_t>(w)].darts)
        if (d / 2 != static_cast<int>(e) && (d % 2 == 1) == incoming_at_w) alone = false;
      if (alone) pick = static_cast<int>(e);
    }
    if (pick < 0) break;
    const RibbonEdge x = rg.edges[static_cast<std::size_t>(pick)];
    const bool tail_on_boundary = rg.is_boundary(x.tail);
    const int u = tail_on_boundary ? x.tail : x.head, w = tail_on_boundary ? x.head : x.tail;
    const int du = tail_on_boundary ? 2 * pick : 2 * pick + 1, dw = du ^ 1;
    auto& U = rg.vertices[static_cast<std::size_t>(u)].darts;
    const auto& W = rg.vertices[static_cast<std::size_t>(w)].darts;
    const int p = position(U, du), q = position(W, dw);
    std::vector<int> merged(U.begin(), U.begin() + p);
    for (std::size_t i = 1; i < W.size(); ++i) merged.push_back(W[(static_cast<std::size_t>(q) + i) % W.size()]);
    merged.insert(merged.end(), U.begin() + p + 1, U.end());
    for (int d : W) {
      auto& e = rg.edges[static_cast<std::size_t>(d / 2)];
      (d % 2 ? e.head : e.tail) = u;
    }
    U = std::move(merged);
    rg.vertices[static_cast<std::size_t>(w)].darts.clear();
    edead[static_cast<std::size_t>(pick)] = 1;
    vdead[static_cast<std::size_t>(w)] = 1;
  }
  return compact(rg, vdead, edead);
}

std::vector<std::vector<int>> ribbon_loops(const RibbonGraph& rg) {
  const std::size_t nd = rg.edges.size() * 2;
  std::vector<int> next_at(nd, -1);  // σ: next dart in the cyclic order
  for (const auto& v : rg.vertices)
    for (std::size_t i = 0; i < v.darts.size(); ++i)
      next_at[static_cast<std::size_t>(v.darts[i])] = v.darts[(i + 1) % v.darts.size()];
  std::vector<char> seen(nd, 0);
  std::vector<std::vector<int>> loops;
  for (std::size_t s = 0; s < nd; ++s) {
    if (seen[s]) continue;
    std::vector<int> loop;
    int d = static_cast<int>(s);
    while (!seen[static_cast<std::size_t>(d)]) {
      seen[static_cast<std::size_t>(d)] = 1;
      loop.push_back(d);
      d = next_at[static_cast<std::size_t>(d ^ 1)];
      if (d < 0) throw InvariantError("dart without a cyclic position");
    }
    loops.push_back(std::move(loop));
  }
  return loops;
}

SurfaceSummary surface_summary(const RibbonGraph& rg) {
  if (auto p = ribbon_problems(rg); !p.empty()) throw InvariantError("ribbon graph: " + p);
  const auto loops = ribbon_loops(rg);
  // One removed disk per boundary circle: a one-dart loop on its interval.
  std::set<std::size_t> removed;
  int circles = 0;
  for (std::size_t v = 0; v < rg.vertices.size(); ++v) {
    if (!rg.is_boundary(static_cast<int>(v))) continue;
    ++circles;
    const int loop_edge = interval_dart_edge(rg, static_cast<int>(v));
    std::size_t found = loops.size();
    for (int end : {1, 0})
      for (std::size_t l = 0; l < loops.size() && found == loops.size(); ++l)
        if (loops[l].size() == 1 && loops[l][0] == 2 * loop_edge + end && !removed.count(l)) found = l;
    if (found == loops.size()) throw InvariantError("boundary circle does not bound a disk");
    removed.insert(found);
  }
  std::vector<int> parent(rg.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  for (const auto& e : rg.edges) parent[static_cast<std::size_t>(root(e.tail))] = root(e.head);
  SurfaceSummary s;
  s.vertices = static_cast<int>(rg.vertices.size());
  s.edges = static_cast<int>(rg.edges.size());
  s.faces = static_cast<int>(loops.size() - removed.size());
  s.euler = s.vertices - s.edges + s.faces;
  s.boundary = circles;
  for (std::size_t v = 0; v < rg.vertices.size(); ++v) s.components += root(static_cast<int>(v)) == static_cast<int>(v) ? 1 : 0;
  const int twice_genus = 2 * s.components - s.boundary - s.euler;
  if (twice_genus < 0 || twice_genus % 2) throw InvariantError("surface with non-integral genus");
  s.genus = twice_genus / 2;
  for (std::size_t v = 0; v < rg.vertices.size(); ++v) {
    if (rg.vertices[v].kind != RibbonVertexKind::Incoming) continue;
    for (int d : strand_darts(rg, static_cast<int>(v))) {
      const RibbonEdge& e = rg.edges[static_cast<std::size_t>(d / 2)];
      const int other = d % 2 ? e.tail : e.head;
      const auto& ov = rg.vertices[static_cast<std::size_t>(other)];
      s.arcs.push_back({rg.vertices[v].label, ov.kind == RibbonVertexKind::Outgoing ? ov.label : -1, e.weight});
    }
  }
  std::stable_sort(s.arcs.begin(), s.arcs.end(), [](const Arc& a, const Arc& b) { return a.input < b.input; });
  return s;
}

SurfaceSummary surface_summary(const WeightedSurjection& x, std::mt19937_64* rng) {
  return surface_summary(collapse_edges(to_ribbon(x, rng)));
}

WeightedSurjection recover_surjection(const RibbonGraph& rg) {
  const int n = rg.inputs(), m = rg.outputs();
  std::vector<std::vector<Strand>> blocks(static_cast<std::size_t>(n));
  for (const auto& e : rg.edges) {
    if (e.boundary_loop) continue;
    if (rg.vertices[static_cast<std::size_t>(e.tail)].kind != RibbonVertexKind::Incoming ||
        rg.vertices[static_cast<std::size_t>(e.head)].kind != RibbonVertexKind::Outgoing)
      throw InvariantError("ribbon graph is not fully collapsed");
  }
  for (int i = 0; i < n; ++i) {
    const int v = rg.boundary_vertex(RibbonVertexKind::Incoming, i);
    for (int d : strand_darts(rg, v)) {
      const RibbonEdge& e = rg.edges[static_cast<std::size_t>(d / 2)];
      blocks[static_cast<std::size_t>(i)].push_back({rg.vertices[static_cast<std::size_t>(e.head)].label, e.weight});
    }
  }
  return WeightedSurjection(n, m, std::move(blocks));
}

int arc_at(const RibbonGraph& rg, int input, int k) {
  const int v = rg.boundary_vertex(RibbonVertexKind::Incoming, input);
  if (v < 0) throw ValidationError("no such incoming circle");
  const auto ds = strand_darts(rg, v);
  if (k < 0 || k >= static_cast<int>(ds.size())) throw ValidationError("no such arc");
  return ds[static_cast<std::size_t>(k)] / 2;
}

RibbonGraph remove_arc(const RibbonGraph& rg0, int edge) {
  RibbonGraph rg = rg0;
  std::vector<char> vdead(rg.vertices.size(), 0), edead(rg.edges.size(), 0);
  const RibbonEdge gone = rg.edges.at(static_cast<std::size_t>(edge));
  if (gone.boundary_loop) throw ValidationError("cannot remove a boundary interval");
  if (gone.weight >= 1) throw ValidationError("the only arc into an output cannot vanish");
  auto drop = [&](int e) {
    edead[static_cast<std::size_t>(e)] = 1;
    for (int d : {2 * e, 2 * e + 1}) {
      auto& ds = rg.vertices[static_cast<std::size_t>(rg.dart_vertex(d))].darts;
      ds.erase(std::find(ds.begin(), ds.end(), d));
    }
  };
  drop(edge);
  for (std::size_t e = 0; e < rg.edges.size(); ++e)
    if (!edead[e] && !rg.edges[e].boundary_loop && rg.edges[e].head == gone.head) rg.edges[e].weight /= 1 - gone.weight;
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t v = 0; v < rg.vertices.size() && !merged; ++v) {
      if (rg.vertices[v].kind != RibbonVertexKind::Incoming) continue;
      const auto ds = strand_darts(rg, static_cast<int>(v));
      for (std::size_t i = 0; i + 1 < ds.size() && !merged; ++i) {
        const int a = ds[i] / 2, b = ds[i + 1] / 2;
        if (rg.edges[static_cast<std::size_t>(a)].head != rg.edges[static_cast<std::size_t>(b)].head) continue;
        rg.edges[static_cast<std::size_t>(a)].weight += rg.edges[static_cast<std::size_t>(b)].weight;
        drop(b);
        merged = true;
      }
    }
  }
  return compact(rg, vdead, edead);
}

MSElement strand_weight_to_zero(const WeightedSurjection& x, int block, int k) {
  auto blocks = x.blocks();
  auto& b = blocks.at(static_cast<std::size_t>(block));
  const Strand gone = b.at(static_cast<std::size_t>(k));
  if (gone.weight >= 1) throw ValidationError("the only strand into an output cannot vanish");
  b.erase(b.begin() + k);
  for (auto& bl : blocks)
    for (auto& s : bl)
      if (s.output == gone.output) s.weight /= 1 - gone.weight;
  return canonicalize_blocks(x.n(), x.m(), std::move(blocks));
}

std::string to_dot(const RibbonGraph& rg) {
  std::ostringstream os;
  os << "graph ribbon {\n";
  for (std::size_t v = 0; v < rg.vertices.size(); ++v) {
    const auto& x = rg.vertices[v];
    os << "  v" << v << " [label=\"";
    switch (x.kind) {
      case RibbonVertexKind::Incoming: os << "in" << x.label + 1 << "\", shape=doublecircle"; break;
      case RibbonVertexKind::Outgoing: os << "out" << x.label + 1 << "\", shape=doublecircle"; break;
      case RibbonVertexKind::Interior: os << generator_name(x.generator) << "\", shape=point"; break;
    }
    os << ", order=\"";
    for (std::size_t i = 0; i < x.darts.size(); ++i) os << (i ? " " : "") << x.darts[i];
    os << "\"];\n";
  }
  for (std::size_t e = 0; e < rg.edges.size(); ++e) {
    const auto& x = rg.edges[e];
    os << "  v" << x.tail << " -- v" << x.head;
    if (x.boundary_loop) os << " [style=dashed, label=\"e" << e << "\"];\n";
    else os << " [dir=forward, label=\"e" << e << ": " << to_string(x.weight) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_json(const SurfaceSummary& s, int indent) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& a : s.arcs) arcs.push_back({{"input", a.input + 1}, {"output", a.output + 1}, {"weight", to_string(a.weight)}});
  nlohmann::json j{{"vertices", s.vertices}, {"edges", s.edges},   {"faces", s.faces},
                   {"euler", s.euler},       {"genus", s.genus},   {"boundary", s.boundary},
                   {"components", s.components}, {"arcs", arcs}};
  return j.dump(indent);
}

std::string to_svg(const WeightedSurjection& x) {
  const int cols = std::max(x.n(), x.m());
  const double width = 120.0 * cols + 40, height = 260;
  auto cx = [&](int i, int count) { return 20 + (width - 40) * (i + 0.5) / count; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  for (int i = 0; i < x.n(); ++i)
    os << "  <ellipse cx=\"" << cx(i, x.n()) << "\" cy=\"30\" rx=\"40\" ry=\"12\" fill=\"none\" stroke=\"black\"/>\n";
  for (int j = 0; j < x.m(); ++j)
    os << "  <ellipse cx=\"" << cx(j, x.m()) << "\" cy=\"230\" rx=\"40\" ry=\"12\" fill=\"none\" stroke=\"black\"/>\n";
  const auto counts = x.type().output_counts();
  std::vector<int> used(static_cast<std::size_t>(x.m()), 0);
  for (int i = 0; i < x.n(); ++i) {
    const auto& b = x.blocks()[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < b.size(); ++k) {
      const int j = b[k].output;
      const double x0 = cx(i, x.n()) - 30 + 60.0 * (static_cast<double>(k) + 0.5) / static_cast<double>(b.size());
      const int slot = used[static_cast<std::size_t>(j)]++;
      const double x1 = cx(j, x.m()) - 30 + 60.0 * (slot + 0.5) / counts[static_cast<std::size_t>(j)];
      os << "  <path d=\"M " << x0 << " 42 C " << x0 << " 130, " << x1 << " 130, " << x1
         << " 218\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
      os << "  <text x=\"" << (x0 + x1) / 2 << "\" y=\"" << 120 + 12 * static_cast<double>(k) << "\" font-size=\"11\">"
         << to_string(b[k].weight) << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace einf
