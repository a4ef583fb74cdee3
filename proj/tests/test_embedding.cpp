#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <string>

#include "coarse_embed/embedding.hpp"
#include "coarse_embed/errors.hpp"
#include "coarse_embed/metric_space.hpp"

using namespace coarse_embed;

namespace {

FiniteMetricSpace path_space(std::size_t n) { return FiniteMetricSpace::from_edge_list(graphs::path(n), n); }

class ThreadsOverride {
 public:
  explicit ThreadsOverride(const char* value) {
    if (const char* old = std::getenv("COARSE_EMBED_THREADS")) saved_ = old, had_ = true;
    setenv("COARSE_EMBED_THREADS", value, 1);
  }
  ~ThreadsOverride() {
    if (had_) setenv("COARSE_EMBED_THREADS", saved_.c_str(), 1);
    else unsetenv("COARSE_EMBED_THREADS");
  }

 private:
  std::string saved_;
  bool had_ = false;
};

}  // namespace

TEST_SUITE("embedding") {

TEST_CASE("basepoint maps to zero") {
  const auto grid = FiniteMetricSpace::from_edge_list(graphs::grid(4, 4), 16);
  for (PointId base : {0u, 5u, 15u}) {
    const Embedding phi = embed_space(grid, 5, base);
    CHECK(phi.embed_point(base).is_zero());
    CHECK(phi.embed_point(base).norm() == 0.0);
  }
}

TEST_CASE("two points at depth one") {
  const auto two = FiniteMetricSpace::from_edge_list(graphs::path(2), 2);
  const Embedding phi = embed_space(two, 1);
  CHECK(phi.schedule()->exponent(1) == Exponent(2));
  CHECK(phi.pair_distance(0, 1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("P_5 schedule and block bound") {
  const auto p5 = path_space(5);
  const Embedding phi = embed_space(p5, 4);
  std::vector<double> ps;
  for (const Exponent& p : phi.schedule()->exponents()) ps.push_back(p.value());
  CHECK(ps == std::vector<double>{3, 6, 9, 11});
  for (std::size_t n = 1; n <= 4; ++n) {
    for (PointId x = 0; x < 5; ++x) {
      for (PointId y = 0; y < 5; ++y) {
        const double sup = sup_distance(phi.tent_at(x, n), phi.tent_at(y, n));
        CHECK(phi.block_distance(n, x, y) <= sup + 1.0 / static_cast<double>(n) + 1e-12);
        // adjacent points: sup <= 1/n, so the block is at most 2/n
        if (x + 1 == y) CHECK(phi.block_distance(n, x, y) <= 2.0 / static_cast<double>(n) + 1e-12);
      }
    }
  }
}

TEST_CASE("pair distance equals the norm of the image difference") {
  const auto cycle = FiniteMetricSpace::from_edge_list(graphs::cycle(9), 9);
  const Embedding phi = embed_space(cycle, 6, 2);
  for (PointId x = 0; x < 9; ++x) {
    for (PointId y = 0; y < 9; ++y) {
      const double direct = (phi.embed_point(x) - phi.embed_point(y)).norm();
      CHECK(phi.pair_distance(x, y) == doctest::Approx(direct).epsilon(1e-12));
      CHECK(phi.pair_distance(x, y) == phi.pair_distance(y, x));
    }
  }
}

TEST_CASE("upper bound along paths") {
  const auto grid = FiniteMetricSpace::from_edge_list(graphs::grid(6, 6), 36);
  const Embedding phi = embed_space(grid, 10);
  const double c = truncated_upper_constant(10);
  CHECK(c < full_upper_constant());
  CHECK(full_upper_constant() == doctest::Approx(M_PI / std::sqrt(6.0)).epsilon(1e-15));
  for (PointId x = 0; x < 36; ++x) {
    for (PointId y = 0; y < 36; ++y) {
      CHECK(phi.pair_distance(x, y) <= c * (grid.distance(x, y) + 1.0) + 1e-12);
    }
  }
}

TEST_CASE("single point") {
  const auto one = FiniteMetricSpace::from_edge_list({}, 1);
  const Embedding phi = embed_space(one);
  CHECK(phi.depth() == 1);
  const DistortionProfile profile = distortion_profile(phi);
  CHECK(profile.samples.empty());
  CHECK(certify(profile).passed());
}

TEST_CASE("lower bound certificate on P_32") {
  const auto p32 = path_space(32);
  const Embedding phi = embed_space(p32, 9);
  const DistortionProfile profile = distortion_profile(phi);
  const CertificationReport report = certify(profile);
  CHECK(report.passed());
  REQUIRE(report.lower.size() == 3);
  const LowerBoundCertificate& r3 = report.lower[2];
  CHECK(r3.radius == 3);
  CHECK(r3.threshold == 18.0);
  CHECK(r3.ok);
  CHECK(r3.min_distance == doctest::Approx(3.228604643908314).epsilon(1e-12));
  double min_far = INFINITY;
  for (const DistortionSample& s : profile.samples) {
    if (s.r > 18.0) min_far = std::min(min_far, s.rho_minus);
  }
  CHECK(min_far == doctest::Approx(3.228604643908314).epsilon(1e-12));
}

TEST_CASE("profile invariants") {
  const auto grid = FiniteMetricSpace::from_edge_list(graphs::grid(5, 7), 35);
  const DistortionProfile profile = distortion_profile(embed_space(grid));
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < profile.samples.size(); ++i) {
    const DistortionSample& s = profile.samples[i];
    pairs += s.pairs;
    CHECK(s.rho_minus <= s.rho_plus);
    if (i > 0) {
      CHECK(s.r > profile.samples[i - 1].r);
      CHECK(s.rho_minus >= profile.samples[i - 1].rho_minus);  // inf over a shrinking set
    }
  }
  CHECK(pairs == 35 * 34 / 2);
  CHECK(profile.min_schedule_slack >= -1e-12);
}

TEST_CASE("results do not depend on the thread count") {
  const auto grid = FiniteMetricSpace::from_edge_list(graphs::grid(7, 7), 49);
  DistortionProfile single;
  DistortionProfile many;
  {
    ThreadsOverride guard("1");
    single = distortion_profile(embed_space(grid, 8));
  }
  {
    ThreadsOverride guard("7");
    many = distortion_profile(embed_space(grid, 8));
  }
  REQUIRE(single.samples.size() == many.samples.size());
  for (std::size_t i = 0; i < single.samples.size(); ++i) {
    CHECK(single.samples[i].rho_minus == many.samples[i].rho_minus);
    CHECK(single.samples[i].rho_plus == many.samples[i].rho_plus);
    CHECK(single.samples[i].pairs == many.samples[i].pairs);
  }
  CHECK(single.min_schedule_slack == many.min_schedule_slack);
}

TEST_CASE("invalid arguments") {
  const auto p5 = path_space(5);
  CHECK_THROWS_AS(embed_space(p5, 3, 7), Error);
  auto short_schedule = std::make_shared<const ExponentSchedule>(schedule_for_space(p5, 2));
  CHECK_THROWS_AS(Embedding(p5, short_schedule, 3), Error);
}

}  // TEST_SUITE
