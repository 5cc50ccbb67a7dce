#include "einf/presentation.hpp"

#include "einf/errors.hpp"
#include "work_graph.hpp"

namespace einf {

const char* tag_name(PropTag t) {
  switch (t) {
    case PropTag::STilde: return "S~";
    case PropTag::S: return "S";
    case PropTag::MS: return "MS";
  }
  return "?";
}

GraphTerm corolla(Generator kind, std::vector<Rational> params) {
  if (kind == Generator::Unit) return unit(1);
  if (static_cast<int>(params.size()) != generator_dimension(kind))
    throw ValidationError(std::string(generator_name(kind)) + " takes " + std::to_string(generator_dimension(kind)) +
                          " parameter(s)");
  for (const auto& p : params)
    if (!in_unit_interval(p)) throw ValidationError("parameter " + to_string(p) + " outside [0,1]");
  Vertex v;
  v.kind = kind;
  v.params = std::move(params);
  return single_vertex(v);
}

ValidationReport validate_for(const GraphTerm& g, PropTag tag) {
  ValidationReport rep = validate(g);
  if (tag != PropTag::STilde)
    for (std::size_t v = 0; v < g.vertices().size(); ++v)
      if (g.vertices()[v].kind == Generator::CounitHomotopy)
        rep.violations.push_back({ViolationKind::ForbiddenGenerator,
                                  "vertex " + std::to_string(v) + ": h only exists in S~"});
  return rep;
}

GraphTerm attaching_graph(Generator kind, const Rational& s) {
  const GraphTerm eps = corolla(Generator::Counit);
  if (kind == Generator::Product) {
    if (s == 0) return horizontal_compose(unit(1), eps);
    if (s == 1) return horizontal_compose(eps, unit(1));
  } else if (kind == Generator::CounitHomotopy) {
    if (s == 0) return unit(1);
    if (s == 1) return vertical_compose(corolla(Generator::Coproduct), horizontal_compose(eps, unit(1)));
  }
  throw ValidationError("no attaching map at this parameter");
}

GraphTerm apply_attaching(const GraphTerm& g, PropTag tag) {
  auto rep = validate_for(g, tag);
  if (!rep.ok()) throw ValidationError(rep.summary());
  GraphTerm cur = absorb_equivalences(g);
  // replacement graphs carry no parameters, so one sweep suffices; restart
  // after each substitution because indices shift
  for (;;) {
    int hit = -1;
    for (std::size_t v = 0; v < cur.vertices().size(); ++v) {
      const Vertex& x = cur.vertices()[v];
      if (!x.params.empty() && (x.params[0] == 0 || x.params[0] == 1)) {
        hit = static_cast<int>(v);
        break;
      }
    }
    if (hit < 0) return cur;
    const Vertex& x = cur.vertices()[static_cast<std::size_t>(hit)];
    cur = substitute_vertex(cur, hit, attaching_graph(x.kind, x.params[0]));
  }
}

GraphTerm apply_relations(const GraphTerm& g, PropTag tag, std::mt19937_64* rng) {
  auto rep = validate_for(g, tag);
  if (!rep.ok()) throw ValidationError(rep.summary());
  using detail::Rule;
  std::vector<Rule> rules;
  if (tag == PropTag::STilde)
    rules = {Rule::CoproductCounitBoth, Rule::ProductCounit, Rule::HomotopyCounit};
  else
    rules = {Rule::CoproductCounitLeft, Rule::CoproductCounitRight, Rule::ProductCounit};
  detail::WorkGraph w(absorb_equivalences(g), nullptr);
  detail::rewrite_to_fixpoint(w, rules, rng);
  return w.to_graph();
}

GraphTerm apply_relations_S(const GraphTerm& g) { return apply_relations(g, PropTag::S); }

EdgeWeighting to_edge_weights(const GraphTerm& g) {
  require_valid(g);
  const auto inc = incidence(g);
  EdgeWeighting w(g.edges().size(), Rational(0));
  std::vector<char> known(g.edges().size(), 0);
  for (int e : inc.output_port) {
    w[static_cast<std::size_t>(e)] = 1;
    known[static_cast<std::size_t>(e)] = 1;
  }
  auto order = topological_order(g);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto v = static_cast<std::size_t>(*it);
    const Vertex& x = g.vertices()[v];
    auto out = [&](int k) {
      const auto e = static_cast<std::size_t>(inc.out[v][static_cast<std::size_t>(k)]);
      if (!known[e]) throw InvariantError("weight propagation out of order");
      return w[e];
    };
    auto set_in = [&](int k, const Rational& q) {
      const auto e = static_cast<std::size_t>(inc.in[v][static_cast<std::size_t>(k)]);
      w[e] = q;
      known[e] = 1;
    };
    switch (x.kind) {
      case Generator::Counit: set_in(0, 0); break;
      case Generator::Coproduct: set_in(0, out(0) + out(1)); break;
      case Generator::Product: {
        const Rational a = out(0);
        set_in(0, (1 - x.params[0]) * a);
        set_in(1, x.params[0] * a);
        break;
      }
      case Generator::CounitHomotopy:
        throw ValidationError("edge weights are defined over S only (found h)");
      case Generator::Unit:
        for (int k = 0; k < x.unit_arity; ++k) set_in(k, out(k));
        break;
    }
  }
  return w;
}

WeightCheck check_edge_weighting(const GraphTerm& g, const EdgeWeighting& w) {
  if (w.size() != g.edges().size()) return {false, "weighting has wrong length"};
  for (const auto& q : w)
    if (q < 0) return {false, "negative weight"};
  const auto inc = incidence(g);
  for (int e : inc.output_port)
    if (w[static_cast<std::size_t>(e)] != 1) return {false, "output edge without weight 1"};
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    Rational in = 0, out = 0;
    for (int e : inc.in[v]) in += w[static_cast<std::size_t>(e)];
    for (int e : inc.out[v]) out += w[static_cast<std::size_t>(e)];
    if (g.vertices()[v].kind == Generator::Counit) {
      if (in != 0) return {false, "edge into eps with nonzero weight"};
    } else if (in != out) {
      return {false, "weight not conserved at vertex " + std::to_string(v)};
    }
  }
  return {true, "ok"};
}

RecoveredParameters from_edge_weights(const GraphTerm& skeleton, const EdgeWeighting& w) {
  require_valid(skeleton);
  auto chk = check_edge_weighting(skeleton, w);
  if (!chk.ok) throw ValidationError(chk.message);
  const auto inc = incidence(skeleton);
  std::vector<Vertex> vs = skeleton.vertices();
  RecoveredParameters out;
  for (std::size_t v = 0; v < vs.size(); ++v) {
    if (vs[v].kind == Generator::CounitHomotopy) throw ValidationError("edge weights are defined over S only");
    if (vs[v].kind != Generator::Product) continue;
    const Rational& a = w[static_cast<std::size_t>(inc.out[v][0])];
    if (a > 0) {
      vs[v].params = {w[static_cast<std::size_t>(inc.in[v][1])] / a};
    } else {
      vs[v].params = {Rational(0)};
      out.flagged.push_back(static_cast<int>(v));
    }
  }
  out.graph = GraphTerm(skeleton.inputs(), skeleton.outputs(), std::move(vs), skeleton.edges());
  return out;
}

GraphTerm stabilize_add(const GraphTerm& g) {
  if (g.inputs() < 1) throw ValidationError("stabilize_add needs at least one input");
  GraphTerm top = horizontal_compose(corolla(Generator::Coproduct), unit(g.inputs() - 1));
  return vertical_compose(top, horizontal_compose(unit(1), g));
}

GraphTerm stabilize_remove(const GraphTerm& g) {
  if (g.outputs() < 1) throw ValidationError("stabilize_remove needs at least one output");
  return vertical_compose(g, horizontal_compose(corolla(Generator::Counit), unit(g.outputs() - 1)));
}

GraphTerm stabilize_homotopy(const GraphTerm& g, const Rational& s) {
  if (g.inputs() < 1 || g.outputs() < 1) throw ValidationError("stabilize_homotopy needs inputs and outputs");
  GraphTerm top = horizontal_compose(corolla(Generator::Coproduct), unit(g.inputs() - 1));
  GraphTerm mid = horizontal_compose(unit(1), g);
  GraphTerm bot = horizontal_compose(corolla(Generator::Product, {s}), unit(g.outputs() - 1));
  return vertical_compose(vertical_compose(top, mid), bot);
}

GraphTerm counit_homotopy_on_input(const GraphTerm& g, const Rational& s) {
  if (g.inputs() < 1) throw ValidationError("needs at least one input");
  return vertical_compose(horizontal_compose(corolla(Generator::CounitHomotopy, {s}), unit(g.inputs() - 1)), g);
}

}  // namespace einf
