#include <gtest/gtest.h>

#include <random>

#include "einf/errors.hpp"
#include "einf/ms_normalizer.hpp"
#include "einf/presentation.hpp"
#include "einf/term_parser.hpp"
#include "einf/verify/generators.hpp"

using namespace einf;

TEST(Corolla, Shapes) {
  const GraphTerm d = corolla(Generator::Coproduct);
  EXPECT_EQ(d.inputs(), 1);
  EXPECT_EQ(d.outputs(), 2);
  const GraphTerm m = corolla(Generator::Product, {Rational(1, 2)});
  EXPECT_EQ(m.inputs(), 2);
  EXPECT_EQ(m.outputs(), 1);
  EXPECT_EQ(m.vertices().front().params.front(), Rational(1, 2));
  EXPECT_THROW(corolla(Generator::Product, {Rational(3, 2)}), ValidationError);
  EXPECT_THROW(corolla(Generator::Product), ValidationError);
}

TEST(Attaching, BoundaryParameters) {
  EXPECT_TRUE(iso_equal(apply_attaching(corolla(Generator::Product, {Rational(0)}), PropTag::STilde), parse_term("id|eps")));
  EXPECT_TRUE(iso_equal(apply_attaching(corolla(Generator::Product, {Rational(1)}), PropTag::STilde), parse_term("eps|id")));
  EXPECT_TRUE(iso_equal(apply_attaching(corolla(Generator::CounitHomotopy, {Rational(0)}), PropTag::STilde), unit(1)));
  EXPECT_TRUE(iso_equal(apply_attaching(corolla(Generator::CounitHomotopy, {Rational(1)}), PropTag::STilde),
                        parse_term("delta;(eps|id)")));
  const GraphTerm inner = corolla(Generator::Product, {Rational(1, 3)});
  EXPECT_TRUE(iso_equal(apply_attaching(inner, PropTag::STilde), inner));
  // nested boundary cells resolve recursively
  EXPECT_TRUE(iso_equal(apply_attaching(parse_term("(h(1)|id);mu(0)"), PropTag::STilde), parse_term("(delta|id);(eps|id|eps)")));
}

TEST(Relations, CounitRules) {
  EXPECT_TRUE(iso_equal(apply_relations_S(parse_term("delta;(eps|id)")), unit(1)));
  EXPECT_TRUE(iso_equal(apply_relations_S(parse_term("delta;(id|eps)")), unit(1)));
  EXPECT_TRUE(iso_equal(apply_relations_S(parse_term("mu(2/7);eps")), parse_term("eps|eps")));
  EXPECT_TRUE(iso_equal(apply_relations(parse_term("h(1/2);eps"), PropTag::STilde), parse_term("eps")));
  EXPECT_TRUE(iso_equal(apply_relations(parse_term("delta;(eps|eps)"), PropTag::STilde), parse_term("eps")));
  // Δ;(ε|id) is the φ_1 cell in S̃, not a relation there
  EXPECT_FALSE(iso_equal(apply_relations(parse_term("delta;(eps|id)"), PropTag::STilde), unit(1)));
}

TEST(Relations, RandomOrdersAgree) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 300; ++k) {
    const GraphTerm g = build_graph(verify::random_term(rng));
    const GraphTerm a = apply_relations_S(g);
    std::mt19937_64 r2(rng());
    const GraphTerm b = apply_relations(g, PropTag::S, &r2);
    ASSERT_TRUE(iso_equal(a, b));
    ASSERT_TRUE(iso_equal(apply_relations_S(a), a));
    EXPECT_EQ(a.inputs(), g.inputs());
    EXPECT_EQ(a.outputs(), g.outputs());
  }
}

TEST(Validation, PhiOnlyInSTilde) {
  EXPECT_TRUE(validate_for(parse_term("h(1/2)"), PropTag::STilde).ok());
  EXPECT_TRUE(validate_for(parse_term("h(1/2)"), PropTag::S).has(ViolationKind::ForbiddenGenerator));
}

namespace {

std::vector<Rational> sorted(std::vector<Rational> w) {
  std::sort(w.begin(), w.end());
  return w;
}

}  // namespace

TEST(EdgeWeights, Examples) {
  EXPECT_EQ(sorted(to_edge_weights(corolla(Generator::Product, {Rational(1, 2)}))),
            (std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(1)}));
  EXPECT_EQ(sorted(to_edge_weights(corolla(Generator::Coproduct))),
            (std::vector<Rational>{Rational(1), Rational(1), Rational(2)}));
  EXPECT_EQ(sorted(to_edge_weights(parse_term("delta;mu(1/3)"))),
            (std::vector<Rational>{Rational(1, 3), Rational(2, 3), Rational(1), Rational(1)}));
  EXPECT_EQ(sorted(to_edge_weights(parse_term("delta;(eps|id)"))),
            (std::vector<Rational>{Rational(0), Rational(1), Rational(1)}));
}

TEST(EdgeWeights, ParameterRecovery) {
  const GraphTerm m = corolla(Generator::Product, {Rational(1, 2)});
  const auto back = from_edge_weights(m, to_edge_weights(m));
  EXPECT_EQ(back.graph.vertices().front().params.front(), Rational(1, 2));
  // inputs 2/3 and 1/3: s is the second input's share
  const GraphTerm skeleton = corolla(Generator::Product, {Rational(1, 2)});
  const auto inc = incidence(skeleton);
  EdgeWeighting w(skeleton.edges().size());
  w[static_cast<std::size_t>(inc.in[0][0])] = Rational(2, 3);
  w[static_cast<std::size_t>(inc.in[0][1])] = Rational(1, 3);
  w[static_cast<std::size_t>(inc.out[0][0])] = Rational(1);
  EXPECT_TRUE(check_edge_weighting(skeleton, w).ok);
  EXPECT_EQ(from_edge_weights(skeleton, w).graph.vertices().front().params.front(), Rational(1, 3));
  w[static_cast<std::size_t>(inc.out[0][0])] = Rational(2);
  EXPECT_FALSE(check_edge_weighting(skeleton, w).ok);
  EXPECT_THROW(from_edge_weights(skeleton, w), ValidationError);
}

TEST(EdgeWeights, RoundTripOnRandomTerms) {
  std::mt19937_64 rng(23);
  verify::TermOptions opt;
  opt.counits = false;
  opt.boundary_params = false;
  for (int k = 0; k < 200; ++k) {
    const GraphTerm g = build_graph(verify::random_term(rng, opt));
    const auto w = to_edge_weights(g);
    ASSERT_TRUE(check_edge_weighting(g, w).ok);
    ASSERT_TRUE(iso_equal(from_edge_weights(g, w).graph, g));
  }
}

TEST(Stabilization, Examples) {
  EXPECT_TRUE(iso_equal(stabilize_add(unit(1)), corolla(Generator::Coproduct)));
  EXPECT_TRUE(iso_equal(apply_relations_S(stabilize_remove(stabilize_add(unit(1)))), unit(1)));
  EXPECT_THROW(stabilize_add(unit(0)), ValidationError);
}
