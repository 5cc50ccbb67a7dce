#include <gtest/gtest.h>

#include <random>

#include "einf/graph_term.hpp"
#include "einf/presentation.hpp"
#include "einf/term_parser.hpp"
#include "einf/verify/generators.hpp"
#include "einf/verify/oracles.hpp"

using namespace einf;

namespace {

Vertex mu_vertex() {
  Vertex v;
  v.kind = Generator::Product;
  v.params = {Rational(1, 2)};
  return v;
}

}  // namespace

TEST(Validate, IdentityStrand) {
  const GraphTerm g(1, 1, {}, {{port(0), port(0)}});
  EXPECT_TRUE(validate(g).ok());
}

TEST(Validate, SelfLoopIsACycle) {
  Vertex phi;
  phi.kind = Generator::CounitHomotopy;
  phi.params = {Rational(1, 2)};
  const GraphTerm g(0, 0, {phi}, {{slot(0, 0), slot(0, 0)}});
  const auto r = validate(g);
  EXPECT_TRUE(r.has(ViolationKind::Cycle)) << r.summary();
}

TEST(Validate, ProductWithThreeInputs) {
  const GraphTerm g(3, 1, {mu_vertex()},
                    {{port(0), slot(0, 0)}, {port(1), slot(0, 1)}, {port(2), slot(0, 2)}, {slot(0, 0), port(0)}});
  const auto r = validate(g);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.has(ViolationKind::ArityMismatch)) << r.summary();
}

TEST(Units, Shapes) {
  EXPECT_EQ(unit(0).inputs(), 0);
  EXPECT_TRUE(unit(0).edges().empty());
  EXPECT_TRUE(iso_equal(unit(1), GraphTerm(1, 1, {}, {{port(0), port(0)}})));
  const GraphTerm g = parse_term("(delta|mu(1/3)|id);(id|eps|id|id)");
  EXPECT_TRUE(iso_equal(vertical_compose(unit(4), g), g));
  EXPECT_TRUE(iso_equal(vertical_compose(g, unit(3)), g));
}

TEST(Horizontal, Concatenation) {
  EXPECT_TRUE(iso_equal(parse_term("id|id"), unit(2)));
  const GraphTerm g = horizontal_compose(corolla(Generator::Counit), corolla(Generator::Coproduct));
  EXPECT_EQ(g.inputs(), 2);
  EXPECT_EQ(g.outputs(), 2);
  EXPECT_EQ(count_kind(g, Generator::Counit), 1);
  EXPECT_EQ(count_kind(g, Generator::Coproduct), 1);
  const GraphTerm empty = horizontal_compose(std::vector<GraphTerm>{});
  EXPECT_EQ(empty.inputs(), 0);
  EXPECT_EQ(empty.outputs(), 0);
  EXPECT_TRUE(empty.vertices().empty());
}

TEST(Vertical, Bubble) {
  const GraphTerm b = vertical_compose(corolla(Generator::Coproduct), corolla(Generator::Product, {Rational(1, 3)}));
  EXPECT_EQ(b.inputs(), 1);
  EXPECT_EQ(b.outputs(), 1);
  EXPECT_EQ(b.vertices().size(), 2u);
  EXPECT_EQ(b.edges().size(), 4u);
  EXPECT_TRUE(validate(b).ok());
}

TEST(Vertical, BiarityMismatchThrows) {
  EXPECT_ANY_THROW(vertical_compose(corolla(Generator::Coproduct), unit(3)));
}

TEST(Permute, IdentityAndSwap) {
  const GraphTerm g = parse_term("(delta|id);(id|mu(1/4))");
  EXPECT_TRUE(iso_equal(permute_inputs(g, Permutation::identity(2)), g));
  EXPECT_TRUE(iso_equal(permute_inputs(unit(2), Permutation::from_one_based({2, 1})), swap_term()));
  EXPECT_FALSE(iso_equal(unit(2), swap_term()));
}

TEST(Permute, InverseRoundTrip) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 500; ++k) {
    const GraphTerm g = build_graph(verify::random_term(rng));
    auto perms_in = all_permutations(static_cast<std::size_t>(g.inputs()));
    auto perms_out = all_permutations(static_cast<std::size_t>(g.outputs()));
    const auto& s = perms_in[std::uniform_int_distribution<std::size_t>(0, perms_in.size() - 1)(rng)];
    const auto& t = perms_out[std::uniform_int_distribution<std::size_t>(0, perms_out.size() - 1)(rng)];
    const GraphTerm h = permute_outputs(permute_inputs(g, s), t);
    const GraphTerm back = permute_inputs(permute_outputs(h, t.inverse()), s.inverse());
    ASSERT_TRUE(iso_equal(back, g)) << k;
  }
}

TEST(Iso, InterchangeLawAgainstBruteForce) {
  const std::vector<std::string> strands = {"id", "delta;mu(1/3)", "h(1/2)", "delta;(id|eps)", "delta;(h(1/4)|id);mu(2/3)"};
  const GraphTerm c = corolla(Generator::Coproduct);
  int compared = 0;
  for (const auto& ta : strands)
    for (const auto& tb : strands) {
      const GraphTerm a = parse_term(ta), b = parse_term(tb);
      // (a|b);(c|id) and (a;c)|b: the same graph assembled in two orders
      const GraphTerm x = vertical_compose(horizontal_compose(a, b), horizontal_compose(c, parse_term("id")));
      const GraphTerm y = horizontal_compose(vertical_compose(a, c), b);
      EXPECT_TRUE(iso_equal(x, y)) << ta << " " << tb;
      EXPECT_EQ(iso_equal(x, y), verify::brute_force_isomorphic(x, y));
      const GraphTerm z = permute_outputs(x, Permutation::from_one_based({2, 1, 3}));
      EXPECT_EQ(iso_equal(x, z), verify::brute_force_isomorphic(x, z)) << ta << " " << tb;
      ++compared;
    }
  EXPECT_EQ(compared, 25);
}

TEST(Absorb, UnitVertexDisappears) {
  Vertex u;
  u.kind = Generator::Unit;
  u.unit_arity = 1;
  const GraphTerm g(1, 1, {u}, {{port(0), slot(0, 0)}, {slot(0, 0), port(0)}});
  const GraphTerm a = absorb_equivalences(g);
  EXPECT_TRUE(a.vertices().empty());
  EXPECT_TRUE(iso_equal(a, unit(1)));
  const GraphTerm p = parse_term("id;delta;tau[1,2]");
  EXPECT_TRUE(iso_equal(absorb_equivalences(p), corolla(Generator::Coproduct)));
}
