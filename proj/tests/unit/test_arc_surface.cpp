#include <gtest/gtest.h>

#include <random>

#include "einf/arc_surface.hpp"
#include "einf/errors.hpp"
#include "einf/ms_normalizer.hpp"
#include "einf/term_parser.hpp"

using namespace einf;

namespace {

WeightedSurjection ws(const std::string& text) { return std::get<WeightedSurjection>(parse_ms(text)); }

RibbonGraph theta(std::vector<int> second) {
  RibbonGraph rg;
  rg.vertices.push_back({RibbonVertexKind::Interior, 0, Generator::Unit, {0, 2, 4}});
  rg.vertices.push_back({RibbonVertexKind::Interior, 1, Generator::Unit, std::move(second)});
  for (int e = 0; e < 3; ++e) rg.edges.push_back({0, 1, false, Rational(1)});
  return rg;
}

}  // namespace

TEST(Ribbon, Anchors) {
  const SurfaceSummary id = surface_summary(ws("surj n=1 m=1 : 1:1"));
  EXPECT_EQ(id.genus, 0);
  EXPECT_EQ(id.boundary, 2);
  EXPECT_EQ(id.arcs, (std::vector<Arc>{{0, 0, Rational(1)}}));
  const SurfaceSummary d = surface_summary(ws("surj n=1 m=2 : 1:1 2:1"));
  EXPECT_EQ(d.genus, 0);
  EXPECT_EQ(d.boundary, 3);
  EXPECT_EQ(d.euler, -1);
  const SurfaceSummary x = surface_summary(ws("surj n=1 m=2 : 1:1/2 2:1 1:1/2"));
  EXPECT_EQ(x.euler, x.vertices - x.edges + x.faces);
  EXPECT_EQ(x.euler, 2 * x.components - 2 * x.genus - x.boundary);
  EXPECT_GE(x.boundary, 3);
  EXPECT_EQ(x.arcs.size(), 3u);
}

TEST(Ribbon, CollapseAndRecover) {
  const WeightedSurjection x = ws("surj n=2 m=2 : 1:1/3 2:1/2 ; 1:2/3 2:1/2");
  const RibbonGraph rg = to_ribbon(x);
  EXPECT_TRUE(ribbon_problems(rg).empty());
  const RibbonGraph c = collapse_edges(rg);
  EXPECT_EQ(recover_surjection(c), x);
  const RibbonGraph cc = collapse_edges(c);
  EXPECT_EQ(cc.edges.size(), c.edges.size());
  EXPECT_EQ(surface_summary(cc), surface_summary(c));
  EXPECT_EQ(surface_summary(rg).genus, surface_summary(c).genus);
}

TEST(Ribbon, Loops) {
  RibbonGraph one;
  one.vertices.push_back({RibbonVertexKind::Interior, 0, Generator::Unit, {0}});
  one.vertices.push_back({RibbonVertexKind::Interior, 1, Generator::Unit, {1}});
  one.edges.push_back({0, 1, false, Rational(1)});
  const auto l = ribbon_loops(one);
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(l[0].size(), 2u);
  EXPECT_EQ(ribbon_loops(theta({1, 3, 5})).size(), 1u);
  EXPECT_EQ(ribbon_loops(theta({1, 5, 3})).size(), 3u);
  RibbonGraph bad = theta({1, 3});
  EXPECT_FALSE(ribbon_problems(bad).empty());
}

TEST(Ribbon, RemoveArcMatchesWeightLimit) {
  const WeightedSurjection x = ws("surj n=2 m=2 : 1:1/3 2:1/2 ; 1:2/3 2:1/2");
  const RibbonGraph c = collapse_edges(to_ribbon(x));
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      const MSElement limit = strand_weight_to_zero(x, i, k);
      ASSERT_TRUE(std::holds_alternative<WeightedSurjection>(limit));
      EXPECT_EQ(surface_summary(std::get<WeightedSurjection>(limit)), surface_summary(remove_arc(c, arc_at(c, i, k))));
    }
}

TEST(Ribbon, RandomBoundaryOrdersStayValid) {
  std::mt19937_64 rng(97);
  const WeightedSurjection x = ws("surj n=1 m=2 : 1:1/2 2:1 1:1/2");
  for (int k = 0; k < 50; ++k) {
    const RibbonGraph rg = to_ribbon(x, &rng);
    ASSERT_TRUE(ribbon_problems(rg).empty());
    const SurfaceSummary s = surface_summary(rg);
    ASSERT_EQ(s.euler, 2 * s.components - 2 * s.genus - s.boundary);
  }
}

TEST(Ribbon, Output) {
  const WeightedSurjection x = ws("surj n=1 m=2 : 1:1 2:1");
  EXPECT_NE(to_dot(to_ribbon(x)).find("graph"), std::string::npos);
  EXPECT_NE(to_json(surface_summary(x)).find("\"genus\""), std::string::npos);
  EXPECT_NE(to_svg(x).find("<svg"), std::string::npos);
}
