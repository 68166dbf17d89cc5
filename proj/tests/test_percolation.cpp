#include "cmlab/percolation.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "cmlab/branching.hpp"
#include "cmlab/census.hpp"
#include "cmlab/error.hpp"
#include "exact_laws.hpp"

namespace cmlab {
namespace {

const Distribution kCubic = Distribution::point(3);
const Distribution kMixture({{1, 0.5}, {3, 0.5}});

MultiGraph sample_graph(const Distribution& d, std::size_t n, Rng& rng) {
  return sample_multigraph(sample_degree_sequence(d, n, rng), rng);
}

double giant_fraction(const MultiGraph& g) {
  return static_cast<double>(components(g).largest()) / static_cast<double>(g.vertex_count());
}

TEST(ColorEdgesTest, Extremes) {
  Rng rng(1);
  const auto g = sample_graph(kMixture, 1000, rng);
  const auto red = color_edges(g, 1.0, rng);
  EXPECT_EQ(red.red_count(), g.edge_count());
  EXPECT_EQ(color_edges(g, 0.0, rng).red_count(), 0u);
  try {
    color_edges(g, 1.01, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadProbability);
  }
  EXPECT_THROW(percolate(g, -0.5, rng), Error);

  Rng a(4), b(4);
  EXPECT_EQ(color_edges(g, 0.3, a).red, color_edges(g, 0.3, b).red);
}

TEST(ColorEdgesTest, RedCountConcentrates) {
  Rng rng(2);
  const auto g = sample_multigraph(DegreeSequence(std::vector<int>(2'000'000, 1)), rng);
  ASSERT_EQ(g.edge_count(), 1'000'000u);
  const double m = 1e6;
  const auto red = static_cast<double>(color_edges(g, 0.5, rng).red_count());
  EXPECT_LE(std::abs(red - m / 2), 4.0 * std::sqrt(m / 4));
}

TEST(SplitTest, Examples) {
  Rng rng(3);
  const auto g = sample_graph(kMixture, 200, rng);
  const auto all_red = split(color_edges(g, 1.0, rng));
  EXPECT_EQ(all_red.red.edges(), g.edges());
  EXPECT_EQ(all_red.blue_degrees.degrees(), std::vector<int>(200, 0));

  const auto loop = split(ColoredGraph{MultiGraph(1, {{0, 0}}), {0}});
  EXPECT_EQ(loop.red_degrees.degrees(), (std::vector<int>{0}));
  EXPECT_EQ(loop.blue_degrees.degrees(), (std::vector<int>{2}));

  const auto tri = split(ColoredGraph{MultiGraph(3, {{0, 1}, {1, 2}, {2, 0}}), {0, 1, 1}});
  EXPECT_EQ(tri.red_degrees.degrees(), (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(tri.blue_degrees.degrees(), (std::vector<int>{1, 1, 0}));
  EXPECT_EQ(tri.red.vertex_count(), 3u);
  EXPECT_EQ(tri.blue.vertex_count(), 3u);
}

TEST(PercolationProperty, DegreesSplitExactly) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = sample_graph(kMixture, 1 + uniform_below(rng, 500), rng);
    const auto parts = split(color_edges(g, uniform01(rng), rng));
    const auto degrees = g.degrees();
    for (std::size_t v = 0; v < degrees.size(); ++v) {
      ASSERT_EQ(parts.red_degrees[v] + parts.blue_degrees[v], degrees[v]);
    }
    ASSERT_EQ(parts.red.edge_count() + parts.blue.edge_count(), g.edge_count());
  }
}

TEST(PercolateTest, Examples) {
  Rng rng(6);
  const auto g = sample_graph(kMixture, 500, rng);
  EXPECT_EQ(percolate(g, 1.0, rng).edges(), g.edges());
  const auto empty = percolate(g, 0.0, rng);
  EXPECT_EQ(empty.edge_count(), 0u);
  EXPECT_EQ(components(empty).vertices_in_size(1), 500u);
}

TEST(PercolateTest, CubicAtSixTenths) {
  Rng rng(7);
  const auto g = sample_graph(kCubic, 100'000, rng);
  EXPECT_NEAR(giant_fraction(percolate(g, 0.6, rng)), 19.0 / 27.0, 0.02);
  EXPECT_NEAR(rho(thin(kCubic, 0.6)), 19.0 / 27.0, 1e-11);
}

TEST(ThinnedSequenceDistanceTest, Examples) {
  Rng rng(8);
  const auto ds = sample_degree_sequence(kMixture, 1000, rng);
  EXPECT_EQ(thinned_sequence_distance(ds, kMixture, 1.0), conf_distance(ds, kMixture));

  const auto small = sample_graph(kCubic, 4, rng);
  EXPECT_GE(thinned_sequence_distance(split(color_edges(small, 0.5, rng)).red_degrees, kCubic, 0.5), 0.25);

  int close = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng trial(derive_seed(88, seed));
    const auto g = sample_graph(kCubic, 100'000, trial);
    close += thinned_sequence_distance(split(color_edges(g, 0.5, trial)).red_degrees, kCubic, 0.5) <= 0.05;
  }
  EXPECT_GE(close, 99);
}

TEST(PercolationProperty, ThresholdBracket) {
  Rng rng(9);
  const auto g = sample_graph(kCubic, 100'000, rng);
  EXPECT_LE(giant_fraction(percolate(g, 0.45, rng)), 0.05);
  EXPECT_GE(giant_fraction(percolate(g, 0.55, rng)), rho(thin(kCubic, 0.55)) - 0.02);
  EXPECT_EQ(critical_percolation(kCubic), 0.5);
}

// Supercritical grid points track the solver, subcritical ones have no
// giant; p = 1/2 is critical and belongs to neither.
TEST(PercolationProperty, GridAgreesWithSolver) {
  Rng rng(10);
  const auto g = sample_graph(kCubic, 100'000, rng);
  for (int i = 1; i <= 9; ++i) {
    const double p = i / 10.0;
    const auto dp = thin(kCubic, p);
    const double observed = giant_fraction(percolate(g, p, rng));
    const double sign = supercriticality(dp);
    if (sign > 1e-9) {
      EXPECT_NEAR(observed, rho(dp), 0.02) << "p=" << p;
    } else if (sign < -1e-9) {
      EXPECT_LE(observed, 0.02) << "p=" << p;
    }
  }
}

// Given the red degrees, the red and blue graphs are independent uniform
// configuration multigraphs.
TEST(PercolationProperty, RedBlueConditionalIndependence) {
  Rng rng(11);
  for (const int stubs : {2, 4, 6}) {
    for (const auto& parts : oracle::partitions(stubs)) {
      const auto r = oracle::red_blue_independence(DegreeSequence(parts), 0.5, 200'000, rng, 1e-3).combined;
      EXPECT_TRUE(r.passed()) << "stubs=" << stubs << " stat=" << r.statistic << " critical=" << r.critical;
    }
  }
}

}  // namespace
}  // namespace cmlab
