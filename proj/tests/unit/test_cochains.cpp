#include <gtest/gtest.h>

#include <random>

#include "einf/cochains.hpp"
#include "einf/errors.hpp"
#include "einf/verify/complexes.hpp"
#include "einf/verify/generators.hpp"
#include "einf/verify/oracles.hpp"

using namespace einf;

TEST(Complex, ParseAndCount) {
  const SimplicialComplex K = parse_complex("# a square\n0 1 2\n0,2,3  # second\n");
  EXPECT_EQ(K.faces(0).size(), 4u);
  EXPECT_EQ(K.faces(1).size(), 5u);
  EXPECT_EQ(K.faces(2).size(), 2u);
  EXPECT_EQ(K.euler_characteristic(), 1);
  EXPECT_THROW(parse_complex("0 x 2"), ParseError);
  EXPECT_EQ(verify::rp2().euler_characteristic(), 1);
  EXPECT_EQ(verify::torus().euler_characteristic(), 0);
  EXPECT_EQ(verify::sphere2().euler_characteristic(), 2);
}

TEST(Complex, CohomologyRanks) {
  auto ranks = [](const SimplicialComplex& K) {
    std::vector<std::size_t> r;
    for (int k = 0; k <= 2; ++k) r.push_back(cohomology_basis(K, k).size());
    return r;
  };
  EXPECT_EQ(ranks(verify::rp2()), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(ranks(verify::torus()), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(ranks(verify::sphere2()), (std::vector<std::size_t>{1, 0, 1}));
  EXPECT_EQ(ranks(standard_simplex(3)), (std::vector<std::size_t>{1, 0, 0}));
}

TEST(Cochain, TextRoundTrip) {
  const Cochain a = parse_cochain("# degree 1\n0 1\n1 2\n");
  EXPECT_EQ(parse_cochain(a.to_string()), a);
  EXPECT_EQ(parse_cochain("", 2).degree, 2);
  EXPECT_THROW(parse_cochain("0 1\n0 1 2\n"), ParseError);
}

TEST(Cup, Examples) {
  const SimplicialComplex D2 = standard_simplex(2);
  EXPECT_EQ(cup_i(0, dual({0, 1}), dual({1, 2}), D2), dual({0, 1, 2}));
  const SimplicialComplex D1 = standard_simplex(1);
  EXPECT_EQ(cup_i(1, dual({0, 1}), dual({0, 1}), D1), dual({0, 1}));
  EXPECT_TRUE(cup_i(3, dual({0, 1}), dual({1, 2}), D2).zero());
  EXPECT_TRUE(cup_i(-1, dual({0, 1}), dual({1, 2}), D2).zero());
}

TEST(Cup, FrontBackOracle) {
  for (int d = 0; d <= 3; ++d) {
    const SimplicialComplex K = standard_simplex(d);
    for (const auto& f : faces_of_simplex(d))
      for (const auto& g : faces_of_simplex(d))
        ASSERT_EQ(cup_i(0, dual(f), dual(g), K), verify::front_back_cup(dual(f), dual(g), K));
  }
}

TEST(Cup, CoboundaryFormula) {
  std::mt19937_64 rng(53);
  for (int i = 1; i <= 3; ++i)
    for (int trial = 0; trial < 20; ++trial) {
      const SimplicialComplex K = standard_simplex(4);
      const Cochain a = verify::random_coboundary(K, 1 + trial % 2, rng);
      const Cochain b = verify::random_coboundary(K, 1 + (trial / 2) % 2, rng);
      if (i > a.degree + b.degree) continue;  // a ∪_i b would sit in negative degree
      Cochain rhs = cup_i(i - 1, a, b, K);
      rhs.add(cup_i(i - 1, b, a, K));
      ASSERT_EQ(coboundary(K, cup_i(i, a, b, K)), rhs) << "i=" << i;
    }
}

TEST(Steenrod, Squares) {
  const SimplicialComplex P = verify::rp2();
  const Cochain x = cohomology_basis(P, 1).front();
  EXPECT_FALSE(is_coboundary(P, steenrod_square(1, x, P)));
  EXPECT_TRUE(cohomologous(P, steenrod_square(0, x, P), x));
  EXPECT_TRUE(steenrod_square(2, x, P).zero());
  const SimplicialComplex T = verify::torus();
  for (const auto& y : cohomology_basis(T, 1)) EXPECT_TRUE(is_coboundary(T, steenrod_square(1, y, T)));
  Cochain not_cocycle = dual({0, 1});
  EXPECT_THROW(steenrod_square(1, not_cocycle, P), ValidationError);
}
