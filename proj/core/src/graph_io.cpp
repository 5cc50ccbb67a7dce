#include "einf/graph_io.hpp"

#include <sstream>

#include "einf/errors.hpp"
#include "json.hpp"

namespace einf {

using nlohmann::json;

namespace {

json endpoint_json(const Endpoint& p) {
  if (p.is_port()) return json{{"port", p.slot}};
  return json{{"vertex", p.vertex}, {"slot", p.slot}};
}

Endpoint endpoint_from(const json& j) {
  if (j.contains("port")) return port(j.at("port").get<int>());
  return slot(j.at("vertex").get<int>(), j.at("slot").get<int>());
}

Generator kind_from(const std::string& s) {
  if (s == "eps") return Generator::Counit;
  if (s == "delta") return Generator::Coproduct;
  if (s == "mu") return Generator::Product;
  if (s == "h") return Generator::CounitHomotopy;
  if (s == "unit") return Generator::Unit;
  throw ParseError("unknown vertex kind '" + s + "'");
}

}  // namespace

std::string to_json(const GraphTerm& g, int indent) {
  json j;
  j["inputs"] = g.inputs();
  j["outputs"] = g.outputs();
  const auto inc = incidence(g);
  json vs = json::array();
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    const Vertex& vx = g.vertices()[v];
    json jv;
    jv["kind"] = generator_name(vx.kind);
    json ps = json::array();
    for (const auto& p : vx.params) ps.push_back(to_string(p));
    jv["params"] = ps;
    if (vx.kind == Generator::Unit) jv["arity"] = vx.unit_arity;
    if (!vx.in_perm.images().empty()) jv["in_perm"] = vx.in_perm.images();
    if (!vx.out_perm.images().empty()) jv["out_perm"] = vx.out_perm.images();
    jv["in"] = inc.in[v];
    jv["out"] = inc.out[v];
    vs.push_back(jv);
  }
  j["vertices"] = vs;
  json es = json::array();
  for (const Edge& e : g.edges()) es.push_back(json{{"from", endpoint_json(e.from)}, {"to", endpoint_json(e.to)}});
  j["edges"] = es;
  return j.dump(indent);
}

GraphTerm graph_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    std::vector<Vertex> vs;
    for (const auto& jv : j.at("vertices")) {
      Vertex v;
      v.kind = kind_from(jv.at("kind").get<std::string>());
      for (const auto& p : jv.value("params", json::array())) v.params.push_back(parse_rational(p.get<std::string>()));
      if (v.kind == Generator::Unit) v.unit_arity = jv.value("arity", 1);
      if (jv.contains("in_perm")) v.in_perm = Permutation(jv.at("in_perm").get<std::vector<int>>());
      if (jv.contains("out_perm")) v.out_perm = Permutation(jv.at("out_perm").get<std::vector<int>>());
      vs.push_back(std::move(v));
    }
    std::vector<Edge> es;
    for (const auto& je : j.at("edges")) es.push_back({endpoint_from(je.at("from")), endpoint_from(je.at("to"))});
    GraphTerm g(j.at("inputs").get<int>(), j.at("outputs").get<int>(), std::move(vs), std::move(es));
    require_valid(g);
    // the per-vertex slot lists are redundant; reject files where they disagree
    const auto inc = incidence(g);
    const auto& jvs = j.at("vertices");
    for (std::size_t v = 0; v < jvs.size(); ++v) {
      if (jvs[v].contains("in") && jvs[v].at("in").get<std::vector<int>>() != inc.in[v])
        throw ParseError("vertex " + std::to_string(v) + ": 'in' disagrees with edge list");
      if (jvs[v].contains("out") && jvs[v].at("out").get<std::vector<int>>() != inc.out[v])
        throw ParseError("vertex " + std::to_string(v) + ": 'out' disagrees with edge list");
    }
    return g;
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  } catch (const ValidationError& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
}

std::string to_dot(const GraphTerm& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=TB;\n";
  for (int i = 0; i < g.inputs(); ++i) os << "  in" << i << " [shape=point, xlabel=\"" << i + 1 << "\"];\n";
  for (int j = 0; j < g.outputs(); ++j) os << "  out" << j << " [shape=point, xlabel=\"" << j + 1 << "\"];\n";
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    const Vertex& vx = g.vertices()[v];
    const char* shape = "box";
    switch (vx.kind) {
      case Generator::Counit: shape = "circle"; break;
      case Generator::Coproduct: shape = "invtriangle"; break;
      case Generator::Product: shape = "triangle"; break;
      case Generator::CounitHomotopy: shape = "diamond"; break;
      case Generator::Unit: shape = "box"; break;
    }
    os << "  v" << v << " [shape=" << shape << ", label=\"" << generator_name(vx.kind);
    for (const auto& p : vx.params) os << " " << to_string(p);
    os << "\"];\n";
  }
  auto node = [](const Endpoint& p, bool source) {
    if (p.is_port()) return std::string(source ? "in" : "out") + std::to_string(p.slot);
    return "v" + std::to_string(p.vertex);
  };
  for (const Edge& e : g.edges()) {
    os << "  " << node(e.from, true) << " -> " << node(e.to, false);
    os << " [taillabel=\"" << (e.from.is_port() ? "" : std::to_string(e.from.slot + 1)) << "\", headlabel=\""
       << (e.to.is_port() ? "" : std::to_string(e.to.slot + 1)) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_text(const GraphTerm& g) {
  std::ostringstream os;
  os << "graph n=" << g.inputs() << " m=" << g.outputs() << " vertices=" << g.vertices().size() << " :";
  for (const auto& v : g.vertices()) {
    os << " " << generator_name(v.kind);
    for (const auto& p : v.params) os << "(" << to_string(p) << ")";
  }
  return os.str();
}

}  // namespace einf
