#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "coarse_embed/embedding.hpp"
#include "coarse_embed/errors.hpp"
#include "coarse_embed/expander.hpp"
#include "oracles.hpp"

using namespace coarse_embed;

TEST_SUITE("expander") {

TEST_CASE("small spectra") {
  const SpectralEstimate k4 = top_two_eigenvalues(4, graphs::complete(4));
  CHECK(k4.lambda1 == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(k4.lambda2 == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(k4.nontrivial_abs == doctest::Approx(1.0).epsilon(1e-9));

  const SpectralEstimate c4 = top_two_eigenvalues(4, graphs::cycle(4));
  CHECK(c4.lambda1 == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(std::abs(c4.lambda2) <= 1e-8);
  CHECK(c4.nontrivial_abs == doctest::Approx(2.0).epsilon(1e-9));

  const std::vector<double> oracle = oracle::dense_adjacency_spectrum(4, graphs::complete(4));
  CHECK(oracle.back() == doctest::Approx(3.0));
  CHECK(oracle.front() == doctest::Approx(-1.0));
}

TEST_CASE("irregular graphs") {
  const auto edges = graphs::grid(4, 6);
  const SpectralEstimate est = top_two_eigenvalues(24, edges, 1e-12);
  const std::vector<double> want = oracle::dense_adjacency_spectrum(24, edges);
  CHECK(est.lambda1 == doctest::Approx(want[23]).epsilon(1e-8));
  CHECK(est.lambda2 == doctest::Approx(want[22]).epsilon(1e-6));
  CHECK_THROWS_AS(top_two_eigenvalues(4, std::vector<Edge>{{0, 1}, {2, 3}}), Error);
}

TEST_CASE("infeasible degrees") {
  CHECK_THROWS_AS(random_regular(5, 3, 1), Error);
  CHECK_THROWS_AS(random_regular(4, 4, 1), Error);
  try {
    random_regular(5, 3, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InfeasibleDegree);
  }
}

TEST_CASE("sampling is seeded and simple") {
  const RegularGraphSample a = random_regular(100, 3, 42);
  const RegularGraphSample b = random_regular(100, 3, 42);
  CHECK(a.edges == b.edges);
  CHECK(a.edges.size() == 150);
  std::vector<int> degree(100, 0);
  for (const Edge& e : a.edges) {
    CHECK(e.u < e.v);
    ++degree[e.u];
    ++degree[e.v];
  }
  CHECK(std::all_of(degree.begin(), degree.end(), [](int d) { return d == 3; }));
  CHECK(std::adjacent_find(a.edges.begin(), a.edges.end()) == a.edges.end());
  CHECK(random_regular(100, 3, 43).edges != a.edges);

  std::ostringstream text;
  write_edge_list(text, 100, a.edges);
  CHECK(text.str() == oracle::read_file(COARSE_EMBED_TEST_DATA "/regular_100_3_seed42.edges"));
}

TEST_CASE("frozen spectrum of the seeded sample") {
  const RegularGraphSample g = random_regular(100, 3, 42);
  REQUIRE(is_connected(100, g.edges));
  const SpectralEstimate est = top_two_eigenvalues(100, g.edges);
  CHECK(est.lambda1 == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(est.lambda2 == doctest::Approx(2.882042140547902).epsilon(1e-8));
  CHECK(est.lambda2 < 2.0 * std::sqrt(2.0) + 0.1);
}

TEST_CASE("power iteration agrees with a dense solver") {
  for (std::size_t n : {16u, 64u, 200u, 512u}) {
    for (int d : {3, 4}) {
      const RegularGraphSample g = random_regular(n, d, 1000 + n);
      if (!is_connected(n, g.edges)) continue;
      const SpectralEstimate est = top_two_eigenvalues(n, g.edges);
      const std::vector<double> want = oracle::dense_adjacency_spectrum(n, g.edges);
      CHECK(est.lambda1 == doctest::Approx(want[n - 1]).epsilon(1e-9));
      CHECK(std::abs(est.lambda2 - want[n - 2]) <= 1e-6);
      CHECK(std::abs(est.nontrivial_abs - std::max(std::abs(want[0]), std::abs(want[n - 2]))) <= 1e-6);
    }
  }
}

TEST_CASE("connectivity") {
  CHECK(is_connected(1, {}));
  CHECK(is_connected(5, graphs::path(5)));
  CHECK_FALSE(is_connected(5, graphs::path(4)));
}

TEST_CASE("Poincare ratio") {
  const auto edges = graphs::complete(6);
  CHECK(poincare_ratio(6, edges, [](PointId x, PointId y) { return x == y ? 0.0 : 1.0; }) ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(poincare_ratio(6, edges, [](PointId, PointId) { return 0.0; }), Error);

  // On a path the average pair spreads further than the average edge.
  const auto path = FiniteMetricSpace::from_edge_list(graphs::path(10), 10);
  const Embedding phi = embed_space(path, 9);
  std::vector<PointVector> images;
  for (PointId x = 0; x < 10; ++x) images.push_back(phi.embed_point(x));
  CHECK(poincare_ratio(path.edges(), images) > 1.0);
}

}  // TEST_SUITE
