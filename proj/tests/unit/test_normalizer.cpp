#include <gtest/gtest.h>

#include <random>

#include "einf/errors.hpp"
#include "einf/ms_normalizer.hpp"
#include "einf/presentation.hpp"
#include "einf/term_parser.hpp"
#include "einf/verify/generators.hpp"
#include "einf/verify/oracles.hpp"

using namespace einf;

namespace {

MSElement nf(const std::string& t) { return normalize(parse_term(t)); }
MSElement ms(const std::string& t) { return parse_ms(t); }

}  // namespace

TEST(Counits, Elimination) {
  const auto a = eliminate_counits(parse_term("delta;(eps|id)"));
  ASSERT_TRUE(a.graph.has_value());
  EXPECT_TRUE(iso_equal(*a.graph, unit(1)));
  const auto b = eliminate_counits(parse_term("mu(1/3);eps"));
  EXPECT_FALSE(b.graph.has_value());
  EXPECT_EQ(b.n, 2);
  const GraphTerm plain = parse_term("(delta|id);(id|mu(1/2))");
  EXPECT_TRUE(iso_equal(*eliminate_counits(plain).graph, plain));
}

TEST(Leibniz, EqualSplitGivesTwoStrands) {
  // product then coproduct with a = b = (1,1): the two strands pass straight through
  EXPECT_EQ(nf("mu(1/2);delta"), ms("surj n=2 m=2 : 1:1 ; 2:1"));
  const GraphTerm pushed = leibniz_push(parse_term("mu(1/2);delta"));
  EXPECT_EQ(count_kind(pushed, Generator::Coproduct), 0);
  EXPECT_EQ(count_kind(pushed, Generator::Product), 0);
}

TEST(Leibniz, UnequalSplitKeepsTheDifference) {
  // a = (2/3, 1/3) above, b = (1/3, 2/3) below: the crossing edge carries 1/3
  const GraphTerm g = parse_term("mu(1/3);delta;mu(2/3)");
  const GraphTerm p = leibniz_push(g);
  EXPECT_EQ(count_kind(p, Generator::Coproduct), 1);
  const auto w = to_edge_weights(p);
  const auto inc = incidence(p);
  bool found = false;
  for (std::size_t v = 0; v < p.vertices().size(); ++v)
    if (p.vertices()[v].kind == Generator::Coproduct)
      for (int e : inc.out[v]) {
        const auto& to = p.edges()[static_cast<std::size_t>(e)].to;
        if (!to.is_port() && p.vertices()[static_cast<std::size_t>(to.vertex)].kind == Generator::Product &&
            w[static_cast<std::size_t>(e)] == Rational(1, 3))
          found = true;
      }
  EXPECT_TRUE(found);
  EXPECT_EQ(normalize(p), normalize(g));
  EXPECT_TRUE(iso_equal(leibniz_push(parse_term("delta;(delta|id)")), parse_term("delta;(delta|id)")));
}

TEST(Normalize, Examples) {
  EXPECT_EQ(nf("delta"), ms("surj n=1 m=2 : 1:1 2:1"));
  EXPECT_EQ(nf("delta;mu(1/3)"), ms("surj n=1 m=1 : 1:1"));
  EXPECT_EQ(nf("delta;(delta|id)"), nf("delta;(id|delta)"));
  EXPECT_EQ(nf("delta;(delta|id)"), ms("surj n=1 m=3 : 1:1 2:1 3:1"));
  EXPECT_EQ(nf("(mu(1/2)|id);mu(1/3)"), nf("(id|mu(1/2));mu(2/3)"));
  EXPECT_NE(nf("delta"), nf("delta;swap"));
  EXPECT_EQ(nf("delta;swap;mu(1/4)"), nf("id"));
  EXPECT_EQ(nf("mu(1/2);eps"), nf("eps|eps"));
  EXPECT_TRUE(equal_ms(parse_term("eps|eps|eps"), parse_term("(mu(1/5)|id);mu(1/2);eps")));
  EXPECT_FALSE(equal_ms(parse_term("delta"), parse_term("delta;swap")));
  EXPECT_THROW(equal_ms(parse_term("delta"), parse_term("id")), ValidationError);
}

TEST(Normalize, RuleOrderIndependence) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 300; ++k) {
    const TermExpr e = verify::random_term(rng);
    const GraphTerm g = build_graph(e);
    const MSElement a = normalize(g);
    ASSERT_EQ(a, normalize(g, RuleOrder{true, rng()})) << to_term_string(e);
    ASSERT_EQ(a, verify::evaluate_by_flow(e)) << to_term_string(e);
    // re-normalizing the canonical graph is the identity
    ASSERT_EQ(normalize(canonical_graph(a)), a);
  }
}

TEST(Normalize, SingleRelationInstancesInContext) {
  // each relation applied inside the same context leaves the normal form alone
  const std::string top = "(delta|mu(2/5));(id|delta|id);";
  EXPECT_EQ(nf(top + "(id|(delta;mu(1/2))|id|id)"), nf(top + "(id|id|id|id)"));                          // involutive
  EXPECT_EQ(nf(top + "(id|(delta;(delta|id))|id|id)"), nf(top + "(id|(delta;(id|delta))|id|id)"));      // coassociative
  EXPECT_EQ(nf(top + "(id|((mu(1/2)|id);mu(1/3)))"), nf(top + "(id|((id|mu(1/2));mu(2/3)))"));          // associative
  EXPECT_EQ(nf(top + "(id|(swap;mu(1/4))|id)"), nf(top + "(id|mu(3/4)|id)"));                           // commutative
  EXPECT_EQ(nf(top + "(id|id|(mu(1/2);delta))"), nf(top + "(id|id|id|id)"));  // Leibniz, equal split
}

TEST(Normalize, CounitClassIsUnique) {
  EXPECT_EQ(nf("eps|eps"), nf("mu(1/7);eps"));
  EXPECT_EQ(nf("((delta|id);(id|id|eps);mu(1/2);eps)|eps"), nf("eps|eps|eps"));
  EXPECT_EQ(nf("((delta|id);(id|id|eps);mu(1/2);eps)|eps"), MSElement(CounitClass{3}));
}

TEST(TextFormat, RoundTrip) {
  std::mt19937_64 rng(37);
  for (int k = 0; k < 200; ++k) {
    const MSElement x = verify::random_surjection(3, 3, 3, rng);
    ASSERT_EQ(parse_ms(to_text(x)), x);
    ASSERT_EQ(ms_from_json(to_json(x)), x);
  }
  EXPECT_EQ(to_text(nf("eps|eps")), "counit n=2");
  EXPECT_THROW(parse_ms("surj n=1 m=2 : 1:1 1:1 2:1"), ParseError);  // adjacent repeat
  EXPECT_THROW(parse_ms("surj n=1 m=1 : 1:1/2"), ParseError);        // weights do not sum to 1
}

TEST(ComposeWeighted, UnitAndExamples) {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 100; ++k) {
    const WeightedSurjection x = verify::random_surjection(3, 3, 3, rng);
    std::vector<std::vector<Strand>> id;
    for (int j = 0; j < x.m(); ++j) id.push_back({{j, Rational(1)}});
    ASSERT_EQ(compose_weighted(x, WeightedSurjection(x.m(), x.m(), id)), MSElement(x));
  }
  EXPECT_EQ(compose_weighted(nf("delta"), nf("delta|id")), ms("surj n=1 m=3 : 1:1 2:1 3:1"));
  EXPECT_EQ(compose_weighted(nf("mu(1/2)"), nf("delta")), nf("mu(1/2);delta"));
}

TEST(ComposeWeighted, AgreesWithGraftingCanonicalGraphs) {
  // Normal forms compose by refining rectangles once each is read as its canonical graph.
  std::mt19937_64 rng(43);
  int compared = 0;
  for (int k = 0; k < 400 && compared < 150; ++k) {
    const WeightedSurjection x = verify::random_surjection(2, 3, 2, rng);
    const WeightedSurjection y = verify::random_surjection(3, 3, 2, rng);
    if (x.m() != y.n()) continue;
    ++compared;
    ASSERT_EQ(compose_weighted(x, y), normalize(vertical_compose(canonical_graph(x), canonical_graph(y))))
        << to_text(x) << " then " << to_text(y);
  }
  EXPECT_GT(compared, 20);
}

TEST(ComposeWeighted, RightNestingMatchesTheFullGraft) {
  std::mt19937_64 rng(47);
  for (int k = 0; k < 200; ++k) {
    const WeightedSurjection x = verify::random_surjection(1, 2, 2, rng);
    const WeightedSurjection y = verify::random_surjection(1, 2, 1, rng);
    const WeightedSurjection z = verify::random_surjection(1, 2, 1, rng);
    MSElement yid = y, zid = z;
    for (int j = 1; j < x.m(); ++j) yid = horizontal(yid, parse_ms("surj n=1 m=1 : 1:1"));
    for (int j = 1; j < ms_outputs(yid); ++j) zid = horizontal(zid, parse_ms("surj n=1 m=1 : 1:1"));
    const GraphTerm full = vertical_compose(vertical_compose(canonical_graph(x), canonical_graph(yid)), canonical_graph(zid));
    ASSERT_EQ(compose_weighted(x, compose_weighted(yid, zid)), normalize(full)) << to_text(x);
  }
}

// Edge weights are fixed by the outputs, so the normal form of x;y forgets
// where its coproducts cut once more is grafted below. Left nesting then
// differs from the full graft.
TEST(ComposeWeighted, LeftNestingLosesTheCutPositions) {
  const MSElement x = ms("surj n=1 m=2 : 2:2/9 1:2/7 2:7/9 1:5/7");
  const MSElement y = ms("surj n=2 m=3 : 1:1 2:1 ; 3:1");
  const MSElement z = ms("surj n=3 m=4 : 2:1/3 1:1 2:2/3 ; 3:1 ; 4:1");
  const MSElement full = ms("surj n=1 m=4 : 4:2/9 2:1/3 1:11/21 4:7/9 1:10/21 2:2/3 3:1");
  EXPECT_EQ(compose_weighted(x, compose_weighted(y, z)), full);
  EXPECT_EQ(compose_weighted(compose_weighted(x, y), z), ms("surj n=1 m=4 : 4:2/9 2:1/3 1:17/21 4:7/9 1:4/21 2:2/3 3:1"));
}

TEST(Horizontal, BlockConcatenation) {
  EXPECT_EQ(horizontal(nf("delta"), nf("mu(1/3)")), nf("delta|mu(1/3)"));
  EXPECT_EQ(horizontal(nf("delta"), nf("mu(1/3)")), ms("surj n=3 m=3 : 1:1 2:1 ; 3:2/3 ; 3:1/3"));
}

TEST(Basis, Examples) {
  EXPECT_EQ(enumerate_basis(1, 2, 0).size(), 2u);
  const auto b = enumerate_basis(1, 2, 1);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].to_string(), "(1,2,1)");
  EXPECT_EQ(b[1].to_string(), "(2,1,2)");
  for (int k = 1; k <= 4; ++k) EXPECT_TRUE(enumerate_basis(1, 1, k).empty());
  for (int m = 1; m <= 4; ++m)
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(static_cast<long>(enumerate_basis(1, m, k).size()), verify::brute_force_basis_count(m, k));
  EXPECT_EQ(parse_type("(1,2|2)").to_string(), "(1,2|2)");
  EXPECT_EQ(parse_type("(_|1)").to_string(), "(_|1)");
  EXPECT_THROW(parse_type("(1,3)"), ParseError);
}
