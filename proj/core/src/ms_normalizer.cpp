#include "einf/ms_normalizer.hpp"

#include <random>

#include "einf/errors.hpp"
#include "work_graph.hpp"

namespace einf {

using detail::Rule;
using detail::WorkGraph;

namespace {

const std::vector<Rule> kCounitRules = {Rule::CoproductCounitLeft, Rule::CoproductCounitRight, Rule::ProductCounit};
const std::vector<Rule> kLeibniz = {Rule::Leibniz};
const std::vector<Rule> kRotations = {Rule::CoassocRotate, Rule::AssocRotate};
const std::vector<Rule> kAllBeforeCommutativity = {Rule::CoproductCounitLeft, Rule::CoproductCounitRight,
                                                   Rule::ProductCounit,       Rule::Leibniz,
                                                   Rule::Bubble,              Rule::CoassocRotate,
                                                   Rule::AssocRotate};

GraphTerm prepare(const GraphTerm& g) {
  auto rep = validate_for(g, PropTag::MS);
  if (!rep.ok()) throw ValidationError(rep.summary());
  return apply_attaching(absorb_equivalences(g), PropTag::MS);
}

WorkGraph weighted_work_graph(const GraphTerm& g) {
  auto w = to_edge_weights(g);
  return WorkGraph(g, &w);
}

void stratified(WorkGraph& w) {
  for (;;) {
    long steps = detail::rewrite_to_fixpoint(w, kCounitRules, nullptr);
    steps += detail::rewrite_to_fixpoint(w, kLeibniz, nullptr);
    steps += detail::rewrite_to_fixpoint(w, kRotations, nullptr);
    if (steps == 0) return;
  }
}

// Leaves of the Δ-tree hanging below edge e, left to right.
void coproduct_leaves(const WorkGraph& w, int e, std::vector<int>& out) {
  const int h = w.head(e);
  if (h >= 0 && w.vx(h).kind == Generator::Coproduct) {
    coproduct_leaves(w, w.vx(h).out[0], out);
    coproduct_leaves(w, w.vx(h).out[1], out);
    return;
  }
  out.push_back(e);
}

// Leaves of the μ-tree above edge e, left to right.
void product_leaves(const WorkGraph& w, int e, std::vector<int>& out) {
  const int t = w.tail(e);
  if (t >= 0 && w.vx(t).kind == Generator::Product) {
    product_leaves(w, w.vx(t).in[0], out);
    product_leaves(w, w.vx(t).in[1], out);
    return;
  }
  out.push_back(e);
}

// Reads the strand structure of a graph where every Δ lies above every μ and
// no ε remains except caps on inputs. Order at the outputs is forgotten
// (commutativity); adjacent strands of one block into the same output merge
// (involution, once the μ-comb is sorted).
MSElement read_off(const WorkGraph& w) {
  if (w.m == 0) return CounitClass{w.n};
  std::vector<int> output_of(w.E.size(), -1);
  for (int j = 0; j < w.m; ++j) {
    std::vector<int> leaves;
    product_leaves(w, w.out_port[static_cast<std::size_t>(j)], leaves);
    for (int e : leaves) output_of[static_cast<std::size_t>(e)] = j;
  }
  std::vector<std::vector<Strand>> blocks(static_cast<std::size_t>(w.n));
  for (int i = 0; i < w.n; ++i) {
    const int e0 = w.in_port[static_cast<std::size_t>(i)];
    if (w.head_is(e0, Generator::Counit)) continue;
    std::vector<int> leaves;
    coproduct_leaves(w, e0, leaves);
    for (int e : leaves) {
      const int j = output_of[static_cast<std::size_t>(e)];
      if (j < 0) throw InvariantError("strand does not reach an output through products only");
      blocks[static_cast<std::size_t>(i)].push_back({j, w.ed(e).w});
    }
  }
  std::size_t strands = 0;
  for (const auto& b : blocks) strands += b.size();
  std::size_t reached = 0;
  for (int j : output_of) reached += j >= 0 ? 1 : 0;
  if (strands != reached) throw InvariantError("output leaves not matched by input leaves");
  return canonicalize_blocks(w.n, w.m, std::move(blocks));
}

}  // namespace

CounitFree eliminate_counits(const GraphTerm& g) {
  GraphTerm h = prepare(g);
  WorkGraph w(h, nullptr);
  detail::rewrite_to_fixpoint(w, kCounitRules, nullptr);
  if (w.m == 0) return {std::nullopt, w.n};
  // the only ε left cap inputs directly; an input capped this way is a
  // strand-free block, which the canonical graph also represents by an ε
  return {w.to_graph(), w.n};
}

GraphTerm leibniz_push(const GraphTerm& g) {
  GraphTerm h = prepare(g);
  WorkGraph w = weighted_work_graph(h);
  detail::rewrite_to_fixpoint(w, kLeibniz, nullptr);
  return w.to_graph();
}

MSElement normalize(const GraphTerm& g, const RuleOrder& order) {
  GraphTerm h = prepare(g);
  WorkGraph w = weighted_work_graph(h);
  if (order.shuffled) {
    std::mt19937_64 rng(order.seed);
    detail::rewrite_to_fixpoint(w, kAllBeforeCommutativity, &rng);
  } else {
    stratified(w);
  }
  return read_off(w);
}

bool equal_ms(const GraphTerm& a, const GraphTerm& b) {
  if (a.inputs() != b.inputs() || a.outputs() != b.outputs()) throw ValidationError("biarity mismatch");
  return normalize(a) == normalize(b);
}

}  // namespace einf
