#include <doctest.h>

#include "coarse_embed/exact.hpp"
#include "coarse_embed/metric_space.hpp"
#include "coarse_embed/tent_partition.hpp"
#include "oracles.hpp"

using namespace coarse_embed;

TEST_SUITE("tent_partition") {

TEST_CASE("tent examples on P_5") {
  const auto p5 = FiniteMetricSpace::from_edge_list(graphs::path(5), 5);
  CHECK(tent(p5, 0, 1) == PointFunction::from_entries({{0, 1.0}}));
  CHECK(tent(p5, 0, 2) == PointFunction::from_entries({{0, 1.0}, {1, 0.5}}));
  const PointFunction t = tent(p5, 2, 3);
  REQUIRE(t.support_size() == 5);
  CHECK(t.at(0) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(t.at(1) == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(t.at(2) == 1.0);
  CHECK(t.at(3) == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(t.at(4) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(sup_distance(tent(p5, 0, 2), tent(p5, 1, 2)) == 0.5);
  CHECK_THROWS_AS(tent(p5, 0, 0), Error);
  CHECK_THROWS_AS(tent(p5, 9, 1), Error);
}

TEST_CASE("exact tents") {
  const auto p5 = FiniteMetricSpace::from_edge_list(graphs::path(5), 5);
  const auto t = exact::tent(p5, 2, 3);
  CHECK(t.at(0) == exact::Rational(1, 3));
  CHECK(t.at(1) == exact::Rational(2, 3));
  CHECK(t.at(2) == exact::Rational(1));
  const auto csv = FiniteMetricSpace::from_distance_matrix({{0, 0.5}, {0.5, 0}});
  CHECK_THROWS_AS(exact::tent(csv, 0, 1), Error);
}

TEST_CASE("tents match the direct formula") {
  const auto grid = FiniteMetricSpace::from_edge_list(graphs::grid(5, 6), 30);
  const auto dist = oracle::floyd_warshall(30, graphs::grid(5, 6));
  for (std::size_t n = 1; n <= 8; ++n) {
    for (PointId x = 0; x < 30; ++x) {
      const auto want = oracle::dense_tent(dist, x, n);
      const PointFunction got = tent(grid, x, n);
      for (PointId y = 0; y < 30; ++y) REQUIRE(got.at(y) == want[y]);
    }
  }
}

TEST_CASE("tent conditions hold exhaustively") {
  const std::vector<std::pair<std::vector<Edge>, std::size_t>> corpus = {
      {graphs::path(20), 20}, {graphs::cycle(17), 17}, {graphs::grid(4, 5), 20},
      {graphs::complete(7), 7}};
  for (const auto& [edges, n] : corpus) {
    const auto space = FiniteMetricSpace::from_edge_list(edges, n);
    for (std::size_t scale = 1; scale <= 8; ++scale) {
      const TentConditionReport r = check_tent_conditions(space, scale);
      CHECK(r.ok());
      CHECK(r.pairs_checked == n * (n + 1) / 2);
      const TentConditionReport e = exact::check_tent_conditions(space, scale);
      CHECK(e.ok());
      CHECK(e.worst_lipschitz_slack >= 0.0);
    }
  }
}

TEST_CASE("tent conditions on a real-valued metric") {
  const auto space = FiniteMetricSpace::from_distance_matrix(
      {{0, 0.5, 1.7, 2.2}, {0.5, 0, 1.2, 1.9}, {1.7, 1.2, 0, 0.9}, {2.2, 1.9, 0.9, 0}});
  for (std::size_t n = 1; n <= 4; ++n) CHECK(check_tent_conditions(space, n).ok());
}

TEST_CASE("equality case of the Lipschitz condition") {
  // Adjacent points on a path at scale n differ by exactly 1/n at the far end.
  const auto p = FiniteMetricSpace::from_edge_list(graphs::path(12), 12);
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(sup_distance(tent(p, 3, n), tent(p, 4, n)) == doctest::Approx(1.0 / n).epsilon(1e-15));
  }
}

}  // TEST_SUITE
