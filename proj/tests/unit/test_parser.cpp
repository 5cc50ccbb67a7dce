#include <gtest/gtest.h>

#include <random>

#include "einf/errors.hpp"
#include "einf/graph_io.hpp"
#include "einf/presentation.hpp"
#include "einf/term_parser.hpp"
#include "einf/verify/generators.hpp"

using namespace einf;

TEST(Parser, Atoms) {
  EXPECT_TRUE(iso_equal(parse_term("delta"), corolla(Generator::Coproduct)));
  EXPECT_TRUE(iso_equal(parse_term("eps"), corolla(Generator::Counit)));
  EXPECT_TRUE(iso_equal(parse_term("mu(1/2)"), corolla(Generator::Product, {Rational(1, 2)})));
  EXPECT_TRUE(iso_equal(parse_term("h(2/3)"), corolla(Generator::CounitHomotopy, {Rational(2, 3)})));
  EXPECT_TRUE(iso_equal(parse_term("swap"), swap_term()));
}

TEST(Parser, BarBindsTighterThanSemicolon) {
  const GraphTerm a = parse_term("delta ; id | id");
  const GraphTerm b = parse_term("delta ; (id | id)");
  EXPECT_TRUE(iso_equal(a, b));
}

TEST(Parser, SigmaAndTauAreInverse) {
  EXPECT_TRUE(iso_equal(parse_term("sigma[2,3,1]"), parse_term("tau[3,1,2]")));
  EXPECT_TRUE(iso_equal(parse_term("sigma[2,3,1];sigma[3,1,2]"), unit(3)));
}

TEST(Parser, Errors) {
  EXPECT_THROW(parse_term("delta;;mu(1/2)"), ParseError);
  EXPECT_THROW(parse_term("mu(1/2"), ParseError);
  EXPECT_THROW(parse_term("frob"), ParseError);
  EXPECT_THROW(parse_term("delta;delta"), ParseError);  // (1,2) then (1,2)
  EXPECT_THROW(parse_term("sigma[1,1]"), ParseError);
  EXPECT_ANY_THROW(parse_term("mu(3/2)"));
}

TEST(Parser, PrintParseRoundTrip) {
  std::mt19937_64 rng(3);
  verify::TermOptions opt;
  opt.homotopies = true;
  for (int k = 0; k < 300; ++k) {
    const TermExpr e = verify::random_term(rng, opt);
    const std::string s = to_term_string(e);
    ASSERT_TRUE(iso_equal(parse_term(s), build_graph(e))) << s;
  }
}

TEST(GraphJson, RoundTrip) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const GraphTerm g = build_graph(verify::random_term(rng));
    ASSERT_TRUE(iso_equal(graph_from_json(to_json(g)), g));
  }
  EXPECT_THROW(graph_from_json("{\"inputs\": 1"), ParseError);
  EXPECT_NE(to_dot(parse_term("delta")).find("digraph"), std::string::npos);
}
