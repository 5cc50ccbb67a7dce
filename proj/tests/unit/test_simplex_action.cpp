#include <gtest/gtest.h>

#include <random>

#include "einf/errors.hpp"
#include "einf/presentation.hpp"
#include "einf/simplex_action.hpp"
#include "einf/term_parser.hpp"

using namespace einf;

namespace {

SimplexPoint pt(const std::string& s) { return parse_point(s); }
Rational q(long p, long r) { return Rational(p, r); }

}  // namespace

TEST(Interval, Formulas) {
  EXPECT_EQ(to_string(eval_term(parse_term("delta"), PointTuple<Rational>{pt("1/4")})), "(0), (1/2)");
  EXPECT_EQ(psi(q(1, 2), q(1, 5), q(3, 5)), q(2, 5));
  EXPECT_EQ(psi(Rational(0), q(1, 5), q(3, 5)), q(1, 5));
  EXPECT_EQ(delta_left(q(3, 4)), q(1, 2));
  EXPECT_EQ(delta_right(q(3, 4)), Rational(1));
  // both branches of φ meet at the corner x = (2-s)/2
  const Rational s = q(1, 3);
  EXPECT_EQ(phi(s, Rational((2 - s) / 2)), Rational(1));
  EXPECT_EQ(phi(s, q(1, 2)), q(3, 5));
  std::mt19937_64 rng(59);
  for (int k = 0; k < 1000; ++k) {
    const SimplexPoint p = random_point(1, rng);
    ASSERT_EQ(phi(Rational(0), p.x[0]), p.x[0]);
  }
}

TEST(Interval, AttachingAndRelationsPointwise) {
  std::mt19937_64 rng(61);
  for (int k = 0; k < 2000; ++k) {
    std::uniform_int_distribution<int> dd(0, 4);
    const int d = dd(rng);
    const SimplexPoint x = random_point(d, rng), y = random_point(d, rng);
    const PointTuple<Rational> one{x}, two{x, y};
    ASSERT_EQ(eval_term(unit(1), one), one);
    ASSERT_EQ(eval_term(parse_term("mu(0)"), two), eval_term(parse_term("id|eps"), two));
    ASSERT_EQ(eval_term(parse_term("mu(1)"), two), eval_term(parse_term("eps|id"), two));
    ASSERT_EQ(eval_term(parse_term("mu(1/3);eps"), two), eval_term(parse_term("eps|eps"), two));
    ASSERT_TRUE(eval_term(parse_term("mu(1/3);eps"), two).empty());
    ASSERT_EQ(eval_term(parse_term("h(1)"), one), eval_term(parse_term("delta;(eps|id)"), one));
  }
}

TEST(Interval, CappedCoproductIsPhiOneNotTheIdentity) {
  const PointTuple<Rational> x{pt("1/4")};
  EXPECT_EQ(eval_term(parse_term("delta;(eps|id)"), x), PointTuple<Rational>{pt("1/2")});
  EXPECT_EQ(eval_term(parse_term("delta;(eps|id)"), x), eval_term(parse_term("h(1)"), x));
  EXPECT_NE(eval_term(parse_term("delta;(eps|id)"), x), x);
}

TEST(Interval, BadInput) {
  EXPECT_THROW(eval_term(parse_term("delta"), PointTuple<Rational>{SimplexPoint{{q(1, 2), q(1, 4)}}}), ValidationError);
  EXPECT_THROW(eval_term(parse_term("mu(1/2)"), PointTuple<Rational>{pt("1/2")}), ValidationError);
  EXPECT_THROW(parse_point("1/2,x"), ParseError);
}

TEST(Simplex, CofacesAndCodegeneracies) {
  EXPECT_EQ(coface(0, pt("1/2")), pt("0,1/2"));
  EXPECT_EQ(coface(1, pt("1/2")), pt("1/2,1/2"));
  EXPECT_EQ(coface(2, pt("1/2")), pt("1/2,1"));
  EXPECT_EQ(codegeneracy(1, pt("1/4,1/2")), pt("1/2"));
  EXPECT_EQ(skeleton_level(pt("0,1/3,1/3,1")), 1);
  EXPECT_EQ(skeleton_level(pt("1/4,1/3")), 2);
  EXPECT_EQ(barycentric(pt("1/4,1/2")), (std::vector<Rational>{q(1, 2), q(1, 4), q(1, 4)}));
  EXPECT_EQ(from_barycentric(barycentric(pt("1/5,2/3,1"))), pt("1/5,2/3,1"));
  EXPECT_EQ(vertex_point<Rational>(1, 2), pt("0,1"));
  EXPECT_EQ(support(pt("0,1")), (Face{1}));
  // vertex maps agree with the coordinate formulas
  std::mt19937_64 rng(67);
  for (int d = 0; d <= 4; ++d)
    for (int k = 0; k < 50; ++k) {
      const SimplexPoint p = random_point(d, rng);
      for (int i = 0; i <= d + 1; ++i) ASSERT_EQ(push_forward(p, coface_vertex_map(i, d), d + 1), coface(i, p));
      const SimplexPoint r = random_point(d + 1, rng);
      for (int i = 1; i <= d + 1; ++i) ASSERT_EQ(push_forward(r, codegeneracy_vertex_map(i, d), d), codegeneracy(i, r));
    }
}

TEST(Cellular, Generators) {
  std::mt19937_64 rng(71);
  EXPECT_TRUE(check_cellular(corolla(Generator::Coproduct), 3, 10000, rng).ok());
  for (int k = 0; k < 1000; ++k)
    ASSERT_EQ(skeleton_level(eval_term(parse_term("eps"), PointTuple<Rational>{random_point(3, rng)})), 0);
  const PointMap third = [](const PointTuple<Rational>& in) {
    PointTuple<Rational> out = in;
    for (auto& p : out)
      for (auto& x : p.x) x /= 3;
    return out;
  };
  const auto bad = check_cellular(third, 1, 2, 2000, rng);
  EXPECT_FALSE(bad.ok());
  EXPECT_FALSE(bad.first_violation.empty());
  EXPECT_EQ(parameter_cell_dimension(parse_term("mu(1/2);h(0)")), 1);
}

TEST(Naturality, AllOperators) {
  std::mt19937_64 rng(73);
  for (const std::string t : {"delta", "eps", "mu(2/7)", "h(1/3)", "delta;(delta|id);(mu(1/2)|id)", "(h(1/5)|id);mu(1/2);delta"})
    for (int d = 0; d <= 3; ++d) {
      const GraphTerm g = parse_term(t);
      for (int i = 0; i <= d + 1; ++i) ASSERT_TRUE(check_naturality(g, Cosimplicial::Coface, i, d, 100, rng).ok()) << t;
      for (int i = 1; i <= d + 1; ++i) ASSERT_TRUE(check_naturality(g, Cosimplicial::Codegeneracy, i, d, 100, rng).ok()) << t;
      ASSERT_TRUE(check_naturality(g, Cosimplicial::Coface, d, d, 100, rng, true, 1e-12).ok()) << t;
    }
}

TEST(FloatMode, MatchesExact) {
  std::mt19937_64 rng(79);
  const GraphTerm h = parse_term("mu(1/3);delta;(h(2/5)|delta);(id|id|eps)");
  for (int k = 0; k < 500; ++k) {
    const PointTuple<Rational> in{random_point(3, rng), random_point(3, rng)};
    const auto exact = eval_term(h, in);
    const auto approx = eval_term(h, PointTuple<double>{to_float(in[0]), to_float(in[1])});
    ASSERT_EQ(exact.size(), approx.size());
    for (std::size_t i = 0; i < exact.size(); ++i)
      for (std::size_t j = 0; j < exact[i].x.size(); ++j) ASSERT_NEAR(to_float(exact[i]).x[j], approx[i].x[j], 1e-12);
  }
}

TEST(FaceAction, Examples) {
  const auto d = face_action(Generator::Coproduct, Tensor{{0, 2}});
  EXPECT_EQ(d, (std::vector<Tensor>{{{0}, {0, 2}}, {{0, 2}, {2}}}));
  EXPECT_EQ(face_action(Generator::Counit, Tensor{{0, 1, 2}}), (std::vector<Tensor>{Tensor{}}));
  EXPECT_EQ(face_action(Generator::Product, Tensor{{0}, {1, 2}}), (std::vector<Tensor>{{{0, 1, 2}}}));
  EXPECT_EQ(product_grid_cover({0}, {1, 2}, 2, 8), (Face{0, 1, 2}));
  std::mt19937_64 rng(83);
  EXPECT_TRUE(check_face_action_numeric(Generator::Coproduct, Tensor{{0, 1, 2}}, 2, 500, rng).ok());
  EXPECT_TRUE(check_face_action_numeric(Generator::Product, Tensor{{0, 1}, {1, 3}}, 3, 500, rng).ok());
  EXPECT_TRUE(check_face_action_numeric(Generator::CounitHomotopy, Tensor{{1, 2}}, 2, 500, rng).ok());
}
