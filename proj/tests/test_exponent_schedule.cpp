#include <doctest.h>

#include <cmath>
#include <random>

#include "coarse_embed/errors.hpp"
#include "coarse_embed/exponent_schedule.hpp"
#include "coarse_embed/metric_space.hpp"
#include "coarse_embed/mixed_norm.hpp"
#include "coarse_embed/random.hpp"

using namespace coarse_embed;

TEST_SUITE("exponent_schedule") {

TEST_CASE("lemma1_bound") {
  CHECK(lemma1_bound(1.0, 16.0, Exponent(4)) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(lemma1_bound(0.0, 123.0, Exponent(2)) == 0.0);
  CHECK(lemma1_bound(1.0, 1.0, Exponent(1)) == 1.0);
  CHECK(lemma1_bound(2.0, 9.0, Exponent(2)) == doctest::Approx(6.0));
  CHECK(lemma1_bound(5.0, 100.0, Exponent::infinity()) == 5.0);
  CHECK_THROWS_AS(lemma1_bound(-1.0, 2.0, Exponent(1)), Error);
  CHECK_THROWS_AS(lemma1_bound(1.0, 0.5, Exponent(1)), Error);
}

TEST_CASE("lemma1_bound is attained by the extremal function") {
  // 16 points at value 1: ||f||_4 = 2 = ||f||_inf + 1.
  const std::vector<double> ones(16, 1.0);
  CHECK(lp_norm(ones, Exponent(4)) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(lp_norm(ones, Exponent(4)) == doctest::Approx(lemma1_bound(1.0, 16.0, Exponent(4))));
  // Two points at value 1 with p = 1: ||f||_1 = 2 <= 2.
  CHECK(lp_norm(std::vector<double>{1.0, 1.0}, Exponent(1)) == 2.0);
}

TEST_CASE("select_exponent examples") {
  CHECK(select_exponent(1.0, 16.0, 1.0) == 4);
  CHECK(select_exponent(1.0, 1.0, 0.1) == 1);
  CHECK(select_exponent(1.0, 2.0, 1.0) == 1);
  CHECK(select_exponent(0.0, 50.0, 0.01) == 1);
  // 2-point space at n = 1: beta = 4, eps = 1.
  CHECK(select_exponent(1.0, 4.0, 1.0) == 2);
  // P_5 at n = 2: beta = 10, eps = 1/2, ceil(ln 10 / ln 1.5) = 6.
  CHECK(select_exponent(1.0, 10.0, 0.5) == 6);
  CHECK_THROWS_AS(select_exponent(1.0, 2.0, 0.0), Error);
  CHECK_THROWS_AS(select_exponent(1.0, 0.5, 1.0), Error);
  CHECK_THROWS_AS(select_exponent(std::nan(""), 2.0, 1.0), Error);
}

TEST_CASE("select_exponent is feasible and minimal") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 5000; ++i) {
    const double alpha = 20.0 * uniform_unit(rng);
    const double beta = 1.0 + 1e4 * uniform_unit(rng);
    const double eps = 1e-4 + 3.0 * uniform_unit(rng);
    const std::int64_t p = select_exponent(alpha, beta, eps);
    REQUIRE(p >= 1);
    REQUIRE(exponent_feasible(alpha, beta, eps, p));
    if (p > 1) REQUIRE_FALSE(exponent_feasible(alpha, beta, eps, p - 1));
  }
}

TEST_CASE("exact boundary cases") {
  // beta = 2^k with eps = alpha: p = k exactly.
  for (int k = 1; k <= 20; ++k) {
    CHECK(select_exponent(1.0, std::ldexp(1.0, k), 1.0) == k);
  }
}

TEST_CASE("schedule validation") {
  const std::vector<ScheduleProvenance> prov{{1.0, 4.0, 1.0}, {1.0, 10.0, 0.5}};
  const ExponentSchedule ok({Exponent(2), Exponent(6)}, prov);
  CHECK(ok.size() == 2);
  CHECK(ok.exponent(2) == Exponent(6));
  CHECK_THROWS_AS(ok.exponent(0), Error);
  CHECK_THROWS_AS(ok.exponent(3), Error);
  // infeasible exponent for its provenance
  CHECK_THROWS_AS(ExponentSchedule({Exponent(1), Exponent(6)}, prov), Error);
  // decreasing
  CHECK_THROWS_AS(ExponentSchedule({Exponent(7), Exponent(6)}, prov), Error);
  // length mismatch
  CHECK_THROWS_AS(ExponentSchedule({Exponent(2)}, prov), Error);
  CHECK_THROWS_AS(Exponent(0.5), Error);
}

TEST_CASE("schedule_from_parameters takes a running max") {
  const ExponentSchedule s =
      schedule_from_parameters({{1.0, 64.0, 1.0}, {1.0, 2.0, 1.0}, {1.0, 1024.0, 1.0}});
  CHECK(s.exponent(1) == Exponent(6));
  CHECK(s.exponent(2) == Exponent(6));
  CHECK(s.exponent(3) == Exponent(10));
}

TEST_CASE("schedule_for_space") {
  const auto two = FiniteMetricSpace::from_distance_matrix({{0, 1}, {1, 0}});
  CHECK(schedule_for_space(two, 1).exponent(1) == Exponent(2));

  const auto p5 = FiniteMetricSpace::from_edge_list(graphs::path(5), 5);
  const ExponentSchedule s = schedule_for_space(p5, 4);
  CHECK(s.exponent(1) == Exponent(3));
  CHECK(s.exponent(2) == Exponent(6));
  CHECK(s.exponent(3) == Exponent(9));
  CHECK(s.exponent(4) == Exponent(11));
  CHECK(s.provenance(2).beta == 10.0);
  CHECK(s.provenance(2).eps == 0.5);

  // Single point: C(n) = 1, beta = 2, eps = 1/n. Only n = 1 gives p = 1;
  // afterwards p_n = ceil(ln 2 / ln(1 + 1/n)) = n for these n.
  const auto point = FiniteMetricSpace::from_edge_list({}, 1);
  const ExponentSchedule single = schedule_for_space(point, 4);
  CHECK(single.exponent(1) == Exponent(1));
  CHECK(single.exponent(2) == Exponent(2));
  CHECK(single.exponent(3) == Exponent(3));
  CHECK(single.exponent(4) == Exponent(4));
}

TEST_CASE("schedule invariants on graphs") {
  const auto grid = FiniteMetricSpace::from_edge_list(graphs::grid(6, 6), 36);
  const ExponentSchedule s = schedule_for_space(grid, 10);
  for (std::size_t n = 1; n <= s.size(); ++n) {
    const ScheduleProvenance& prov = s.provenance(n);
    CHECK(lemma1_bound(prov.alpha, prov.beta, s.exponent(n)) - prov.alpha <= prov.eps);
    if (n > 1) CHECK(s.exponent(n - 1) <= s.exponent(n));
  }
}

}  // TEST_SUITE
