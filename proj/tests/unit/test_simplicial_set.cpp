#include <gtest/gtest.h>

#include <random>

#include "einf/errors.hpp"
#include "einf/simplicial_set.hpp"
#include "einf/term_parser.hpp"
#include "einf/verify/generators.hpp"

using namespace einf;

TEST(SimplicialSet, Presets) {
  const SimplicialSet D = standard_simplex_set(2);
  EXPECT_EQ(D.cells().size(), 7u);
  const int top = D.find("[0,1,2]");
  ASSERT_GE(top, 0);
  EXPECT_EQ(D.face(D.cell_simplex(top), 0).cell, D.find("[1,2]"));
  EXPECT_EQ(D.face(D.cell_simplex(top), 2).cell, D.find("[0,1]"));
  const SimplicialSet S = sphere_set(2);
  const Simplex f = S.face(S.cell_simplex(S.find("c")), 1);
  EXPECT_EQ(f.cell, S.find("v"));
  EXPECT_EQ(f.dim(), 1);
  EXPECT_THROW(sphere_set(0), ValidationError);
}

TEST(SimplicialSet, JsonRoundTripAndErrors) {
  const SimplicialSet D = standard_simplex_set(2);
  const SimplicialSet E = parse_simplicial_set(to_json(D));
  EXPECT_EQ(to_json(E), to_json(D));
  EXPECT_THROW(parse_simplicial_set("{\"cells\": [{\"name\": \"e\", \"dim\": 1, \"faces\": [\"v\", \"v\"]}]}"), ParseError);
  // faces violating d_i d_j = d_{j-1} d_i
  const std::string bad = R"({"cells": [
    {"name": "a", "dim": 0}, {"name": "b", "dim": 0},
    {"name": "x", "dim": 1, "faces": ["b", "a"]}, {"name": "y", "dim": 1, "faces": ["a", "b"]},
    {"name": "t", "dim": 2, "faces": ["x", "x", "y"]}]})";
  EXPECT_THROW(parse_simplicial_set(bad), ParseError);
}

TEST(SimplicialSet, DegeneraciesPullBack) {
  const SimplicialSet D = standard_simplex_set(1);
  const Simplex e = D.cell_simplex(D.find("[0,1]"));
  const Simplex s = D.degeneracy(e, 0);
  EXPECT_EQ(s.cell, e.cell);
  EXPECT_EQ(s.theta, (std::vector<int>{0, 0, 1}));
  EXPECT_EQ(D.face(s, 0), e);
  EXPECT_EQ(D.face(s, 1), e);
  EXPECT_EQ(D.face(s, 2).cell, D.find("[0]"));
}

TEST(Realization, Examples) {
  const SimplicialSet D = standard_simplex_set(1);
  const Simplex e = D.cell_simplex(D.find("[0,1]"));
  const auto id = realization_act(D, unit(1), e, parse_point("1/3"));
  ASSERT_EQ(id.size(), 1u);
  EXPECT_EQ(id[0].cell, e.cell);
  const auto d = realization_act(D, parse_term("delta"), e, parse_point("1/4"));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(to_string(D, d[0]), "([0], ())");
  EXPECT_EQ(to_string(D, d[1]), "([0,1], (1/2))");
  EXPECT_THROW(realization_act(D, parse_term("mu(1/2)"), e, parse_point("1/4")), ValidationError);
}

TEST(Realization, WellDefinedOnEquivalentRepresentatives) {
  std::mt19937_64 rng(89);
  verify::TermOptions opt;
  opt.max_inputs = 1;
  opt.homotopies = true;
  opt.max_vertices = 5;
  for (const auto& G : {standard_simplex_set(3), sphere_set(1), sphere_set(3)})
    for (int k = 0; k < 30; ++k) {
      const GraphTerm g = build_graph(verify::random_term(rng, opt));
      const auto r = check_realization_well_defined(G, g, 10, rng);
      ASSERT_TRUE(r.ok()) << r.first_violation;
    }
}
