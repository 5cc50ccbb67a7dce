#include <gtest/gtest.h>

#include <random>

#include "einf/chain_prop.hpp"
#include "einf/errors.hpp"
#include "einf/term_parser.hpp"
#include "einf/verify/generators.hpp"
#include "einf/verify/oracles.hpp"

using namespace einf;

namespace {

ChainElement gen(const std::string& t) { return generator(parse_type(t)); }

}  // namespace

TEST(Differential, Examples) {
  EXPECT_TRUE(differential(gen("(1,2)")).zero());
  ChainElement want = gen("(1,2)");
  want.add(parse_type("(2,1)"));
  EXPECT_EQ(differential(gen("(1,2,1)")), want);
  ChainElement want3 = gen("(1,2,1)");
  want3.add(parse_type("(2,1,2)"));
  EXPECT_EQ(differential(gen("(1,2,1,2)")), want3);
  // μ: its two attaching graphs, one strand with the other input capped
  ChainElement want_mu = gen("(_|1)");
  want_mu.add(parse_type("(1|_)"));
  EXPECT_EQ(differential(gen("(1|1)")), want_mu);
}

TEST(Differential, SquaresToZero) {
  for (int m = 1; m <= 3; ++m)
    for (int d = 0; d <= 3; ++d)
      for (const auto& t : enumerate_basis(1, m, d)) {
        const ChainElement dx = differential(generator(t));
        ASSERT_EQ(dx, verify::combinatorial_differential(generator(t))) << t.to_string();
        ASSERT_TRUE(differential(dx).zero()) << t.to_string();
      }
  for (const auto& t : enumerate_basis(2, 2, 2)) ASSERT_TRUE(differential(differential(generator(t))).zero());
}

TEST(Act, ChainExamples) {
  const SimplicialChain delta = act(parse_type("(1,2)"), parse_chain("[0,1]"));
  EXPECT_EQ(delta, parse_chain("[0]x[0,1] + [0,1]x[1]"));
  EXPECT_EQ(act(parse_type("(1|1)"), parse_chain("[0]x[1,2]")), parse_chain("[0,1,2]"));
  EXPECT_TRUE(act(parse_type("(1|1)"), parse_chain("[0,1]x[1,2]")).zero());
  EXPECT_TRUE(act_graph(parse_term("eps"), parse_chain("[0,1]")).zero());
  const SimplicialChain unit_chain = act_graph(parse_term("eps"), parse_chain("[3]"));
  EXPECT_EQ(unit_chain.terms.size(), 1u);
  EXPECT_EQ(unit_chain.to_string(), "1");
  EXPECT_TRUE(act_graph(parse_term("h(1/2)"), parse_chain("[0,1]")).zero());
}

TEST(Act, TermsMatchTheirTopCells) {
  // act of a term equals act of its image under the quotient
  for (const std::string t : {"delta", "mu(1/2)", "delta;(delta|id)", "(delta|id);(id|mu(1/3))", "mu(1/2);delta"}) {
    const TermExpr e = parse_term_expr(t);
    const ChainElement x = chains_S_check(e);
    for (int d = 0; d <= 3; ++d)
      for (const auto& f : faces_of_simplex(d)) {
        Tensor in(static_cast<std::size_t>(x.n), f);
        ASSERT_EQ(act_graph(build_graph(e), chain_of(in)), act(x, chain_of(in))) << t;
      }
  }
}

TEST(ChainsS, TopCells) {
  EXPECT_EQ(chains_S_check(parse_term_expr("mu(1/2)")), gen("(1|1)"));
  EXPECT_TRUE(chains_S_check(parse_term_expr("h(1/2)")).zero());
  // product followed by counit: the 1-cell collapses onto a 0-cell, so its top cell is 0
  EXPECT_TRUE(chains_S_check(parse_term_expr("mu(1/2);eps")).zero());
  EXPECT_EQ(chains_S_check(parse_term_expr("eps|eps")), gen("(_|_)"));
  EXPECT_EQ(chains_S_check(parse_term_expr("delta;(eps|id)")), chains_S_check(parse_term_expr("id")));
}

TEST(Compose, OperadicInsertionMatchesOverlappingCuts) {
  for (const auto& x : enumerate_basis(1, 2, 1))
    for (const auto& y : enumerate_basis(1, 2, 1))
      for (int i = 0; i < 2; ++i)
        EXPECT_EQ(compose_at_output(generator(x), i, generator(y)), verify::surjection_compose(x, i, y))
            << x.to_string() << " o" << i << " " << y.to_string();
}

TEST(Compose, DifferentialIsADerivation) {
  // ∂(x ∘_i y) = ∂x ∘_i y + x ∘_i ∂y over F₂
  for (const auto& x : enumerate_basis(1, 2, 2))
    for (const auto& y : enumerate_basis(1, 2, 1))
      for (int i = 0; i < 2; ++i) {
        const ChainElement lhs = differential(compose_at_output(generator(x), i, generator(y)));
        ChainElement rhs = zero_chain(lhs.n, lhs.m, lhs.degree);
        for (const auto& t : differential(generator(x)).support) rhs.add(compose_at_output(generator(t), i, generator(y)));
        for (const auto& t : differential(generator(y)).support) rhs.add(compose_at_output(generator(x), i, generator(t)));
        ASSERT_EQ(lhs, rhs) << x.to_string() << " o" << i << " " << y.to_string();
      }
}

TEST(Chains, ParseAndBoundary) {
  const SimplicialChain c = parse_chain("[0,1,2]");
  EXPECT_EQ(boundary(c), parse_chain("[1,2] + [0,2] + [0,1]"));
  EXPECT_TRUE(boundary(boundary(c)).zero());
  EXPECT_EQ(parse_chain("[0,1] + [0,1]").zero(), true);
  EXPECT_THROW(parse_chain("[1,0]"), ParseError);
  EXPECT_EQ(faces_of_simplex(2).size(), 7u);
  EXPECT_EQ(face_delete({0, 1, 2}, 1), (Face{0, 2}));
}

TEST(Types, CupAndCounit) {
  EXPECT_EQ(cup_type(0).to_string(), "(1,2)");
  EXPECT_EQ(cup_type(2).to_string(), "(1,2,1,2)");
  EXPECT_EQ(identity_type(2).to_string(), "(1|2)");
  EXPECT_EQ(counit_type(2).m, 0);
}
