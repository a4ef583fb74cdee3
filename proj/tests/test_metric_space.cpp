#include <doctest.h>

#include <random>
#include <sstream>

#include "coarse_embed/errors.hpp"
#include "coarse_embed/metric_space.hpp"
#include "oracles.hpp"

using namespace coarse_embed;

namespace {

FiniteMetricSpace graph(const std::vector<Edge>& edges, std::size_t n) {
  return FiniteMetricSpace::from_edge_list(edges, n);
}

}  // namespace

TEST_SUITE("metric_space") {

TEST_CASE("edge list distances") {
  const auto p3 = graph({{0, 1}, {1, 2}}, 3);
  CHECK(p3.distance(0, 2) == 2.0);

  const auto single = graph({}, 1);
  CHECK(single.size() == 1);
  CHECK(single.distance(0, 0) == 0.0);

  const auto c4 = graph(graphs::cycle(4), 4);
  CHECK(c4.distance(0, 2) == 2.0);
  CHECK(c4.distance(0, 3) == 1.0);
  CHECK(c4.is_integral());
}

TEST_CASE("edge list input errors") {
  CHECK_THROWS_AS(graph({{0, 1}}, 3), Error);
  try {
    graph({{0, 1}}, 3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DisconnectedGraph);
  }
  try {
    graph({{0, 5}}, 3);
    FAIL("expected InvalidVertexId");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidVertexId);
  }
  // Self-loops and duplicate edges do not change the metric.
  const auto p3 = graph({{0, 1}, {1, 0}, {1, 1}, {1, 2}}, 3);
  CHECK(p3.distance(0, 2) == 2.0);
  CHECK(p3.edges().size() == 2);
}

TEST_CASE("distance matrix validation") {
  const auto two = FiniteMetricSpace::from_distance_matrix({{0, 1}, {1, 0}});
  CHECK(two.size() == 2);
  CHECK(two.distance(0, 1) == 1.0);

  try {
    FiniteMetricSpace::from_distance_matrix({{0, 1}, {2, 0}});
    FAIL("expected symmetry violation");
  } catch (const MetricViolation& e) {
    CHECK(e.axiom() == MetricAxiom::Symmetry);
    CHECK(e.witness()[0] == 0);
    CHECK(e.witness()[1] == 1);
  }
  try {
    FiniteMetricSpace::from_distance_matrix({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}});
    FAIL("expected triangle violation");
  } catch (const MetricViolation& e) {
    CHECK(e.axiom() == MetricAxiom::Triangle);
    CHECK(e.witness() == std::array<std::uint32_t, 3>{0, 1, 2});  // d(0,2) > d(0,1) + d(1,2)
  }
  try {
    FiniteMetricSpace::from_distance_matrix({{0, 0}, {0, 0}});
    FAIL("expected identity violation");
  } catch (const MetricViolation& e) {
    CHECK(e.axiom() == MetricAxiom::Identity);
  }
  try {
    FiniteMetricSpace::from_distance_matrix({{0, -1}, {-1, 0}});
    FAIL("expected nonnegativity violation");
  } catch (const MetricViolation& e) {
    CHECK(e.axiom() == MetricAxiom::Nonnegativity);
  }
  CHECK_THROWS_AS(FiniteMetricSpace::from_distance_matrix({{0, 1}}), Error);
  CHECK_THROWS_AS(FiniteMetricSpace::from_distance_matrix({}), Error);
}

TEST_CASE("balls") {
  const auto p5 = graph(graphs::path(5), 5);
  CHECK(p5.ball(2, 1) == std::vector<PointId>{1, 2, 3});
  for (PointId x = 0; x < 5; ++x) CHECK(p5.ball(x, 0) == std::vector<PointId>{x});

  const auto c6 = graph(graphs::cycle(6), 6);
  CHECK(c6.ball(0, 2) == std::vector<PointId>{0, 1, 2, 4, 5});
  CHECK(c6.ball_size(0, 2) == 5);
}

TEST_CASE("growth profile") {
  const auto p5 = graph(graphs::path(5), 5);
  const GrowthProfile g = growth_profile(p5, 2);
  CHECK(g.at(1) == 3);
  CHECK(g.at(2) == 5);
  CHECK_THROWS_AS(g.at(3), Error);

  const auto single = graph({}, 1);
  const GrowthProfile s = growth_profile(single, 5);
  for (std::size_t r = 0; r <= 5; ++r) CHECK(s.at(r) == 1);

  const auto k4 = graph(graphs::complete(4), 4);
  CHECK(growth_profile(k4, 1).at(1) == 4);
}

TEST_CASE("diameter") {
  CHECK(graph(graphs::path(7), 7).diameter() == 6.0);
  CHECK(graph(graphs::cycle(7), 7).diameter() == 3.0);
  CHECK(graph(graphs::grid(3, 4), 12).diameter() == 5.0);
  CHECK(graph({}, 1).diameter() == 0.0);
}

TEST_CASE("metric axioms hold on generated graphs") {
  const std::vector<std::pair<std::vector<Edge>, std::size_t>> corpus = {
      {graphs::path(9), 9}, {graphs::cycle(10), 10}, {graphs::grid(3, 5), 15},
      {graphs::complete(6), 6}};
  for (const auto& [edges, n] : corpus) {
    const auto space = graph(edges, n);
    for (PointId x = 0; x < n; ++x) {
      for (PointId y = 0; y < n; ++y) {
        CHECK((space.distance(x, y) == 0.0) == (x == y));
        CHECK(space.distance(x, y) == space.distance(y, x));
        for (PointId z = 0; z < n; ++z) {
          CHECK(space.distance(x, z) <= space.distance(x, y) + space.distance(y, z));
        }
      }
    }
  }
}

TEST_CASE("points_by_distance is a sorted permutation") {
  const auto space = graph(graphs::grid(4, 4), 16);
  for (PointId x = 0; x < 16; ++x) {
    const auto order = space.points_by_distance(x);
    REQUIRE(order.size() == 16);
    CHECK(order[0] == x);
    for (std::size_t i = 1; i < order.size(); ++i) {
      CHECK(space.distance(x, order[i - 1]) <= space.distance(x, order[i]));
    }
  }
}

TEST_CASE("graph metric matches Floyd-Warshall on random connected graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 40;
    std::vector<Edge> edges = graphs::path(n);  // keeps the graph connected
    std::shuffle(edges.begin(), edges.end(), rng);
    std::vector<PointId> relabel(n);
    for (std::size_t i = 0; i < n; ++i) relabel[i] = static_cast<PointId>(i);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    for (Edge& e : edges) e = {relabel[e.u], relabel[e.v]};
    const std::size_t extra = rng() % (2 * n);
    for (std::size_t i = 0; i < extra; ++i) {
      edges.push_back({static_cast<PointId>(rng() % n), static_cast<PointId>(rng() % n)});
    }
    const auto space = graph(edges, n);
    const auto reference = oracle::floyd_warshall(n, edges);
    for (PointId x = 0; x < n; ++x)
      for (PointId y = 0; y < n; ++y) REQUIRE(space.distance(x, y) == reference[x][y]);
  }
}

TEST_CASE("edge list text round trip") {
  const auto edges = graphs::grid(3, 3);
  std::ostringstream out;
  write_edge_list(out, 9, edges);
  std::istringstream in(out.str());
  const EdgeListInput parsed = read_edge_list(in);
  CHECK(parsed.vertex_count == 9);
  CHECK(parsed.edges == edges);

  std::istringstream bad("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(bad), Error);
  std::istringstream junk("three 2\n");
  CHECK_THROWS_AS(read_edge_list(junk), Error);
}

TEST_CASE("distance matrix csv") {
  std::istringstream in("0,1,2\n1,0,1\n2,1,0\n");
  const auto matrix = read_distance_matrix_csv(in);
  const auto space = FiniteMetricSpace::from_distance_matrix(matrix);
  CHECK(space.distance(0, 2) == 2.0);
  CHECK(space.is_integral());

  std::istringstream ragged("0,1\n1\n");
  CHECK_THROWS_AS(FiniteMetricSpace::from_distance_matrix(read_distance_matrix_csv(ragged)), Error);
}

}  // TEST_SUITE
