#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "coarse_embed/cocycle.hpp"
#include "coarse_embed/errors.hpp"
#include "coarse_embed/exact.hpp"
#include "coarse_embed/group.hpp"
#include "coarse_embed/random.hpp"

using namespace coarse_embed;

namespace {

Element z(const IntegerLattice& g, int k) { return g.make(std::vector<int>{k}); }

std::vector<double> exponents_of(const ExponentSchedule& s) {
  std::vector<double> out;
  for (const Exponent& p : s.exponents()) out.push_back(p.value());
  return out;
}

}  // namespace

TEST_SUITE("cocycle") {

TEST_CASE("schedules") {
  CHECK(square_radii(4) == std::vector<int>{1, 4, 9, 16});
  CHECK(exponents_of(group_schedule(IntegerLattice(1), 4)) == std::vector<double>{3, 5, 6, 7});
  CHECK(exponents_of(group_schedule(FreeGroup(2), 2)) == std::vector<double>{4, 9});
}

TEST_CASE("integers at depth one") {
  const IntegerLattice g(1);
  const GroupCocycle c(g, 1);
  CHECK(c.phi(g.identity()).is_zero());
  CHECK(c.phi(z(g, 1)).norm() == doctest::Approx(std::cbrt(2.0)).epsilon(1e-15));
  CHECK(c.phi(z(g, 1)).norm() == doctest::Approx(1.2599210498948732).epsilon(1e-15));
}

TEST_CASE("block values on the integers") {
  const IntegerLattice g(1);
  const GroupCocycle c(g, 2);
  const GroupFunction b = c.tent_block(2, z(g, 1));
  CHECK(b.support_size() == 8);
  for (const auto& [u, value] : b.entries()) CHECK(std::abs(value) == 0.25);
  CHECK(b.sup_norm() <= 1.0 / c.radius(2) + 1e-15);
}

TEST_CASE("cocycle identity") {
  const IntegerLattice g(1);
  const GroupCocycle c(g, 3);
  CHECK(c.cocycle_residual(z(g, 2), z(g, 3)) <= 1e-12);
  CHECK(verify_cocycle(c, z(g, -5), z(g, 7)) <= 1e-12);
  CHECK(exact::cocycle_identity_holds(c, z(g, 2), z(g, 3)));

  const FreeGroup f2(2);
  const GroupCocycle cf(f2, 2);
  std::mt19937_64 rng(11);
  const auto elements = cf.ball().elements();
  for (int i = 0; i < 100; ++i) {
    const Element s = elements[uniform_below(rng, elements.size())];
    const Element t = elements[uniform_below(rng, elements.size())];
    CHECK(cf.cocycle_residual(s, t) <= 1e-12);
    if (i < 20) CHECK(exact::cocycle_identity_holds(cf, s, t));
  }
}

TEST_CASE("distance equivariance") {
  const SymmetricGroup s4(4);
  const GroupCocycle c(s4, 2);
  const auto elements = c.ball().elements();
  for (Element s : elements) {
    for (Element t : elements) {
      const double lhs = (c.phi(s) - c.phi(t)).norm();
      const double rhs = c.phi(s4.multiply(s4.inverse(s), t)).norm();
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }
}

TEST_CASE("affine action is isometric and a group action") {
  const IntegerLattice g(2);
  const GroupCocycle c(g, 2);
  const auto elements = c.ball().elements();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Element s = elements[uniform_below(rng, elements.size())];
    const Element t = elements[uniform_below(rng, elements.size())];
    const Element u = elements[uniform_below(rng, elements.size())];
    const CocycleVector v = c.phi(u);
    const CocycleVector w = c.phi(t);
    CHECK((c.affine_action(s, v) - c.affine_action(s, w)).norm() ==
          doctest::Approx((v - w).norm()).epsilon(1e-12));
    const CocycleVector composed = c.affine_action(s, c.affine_action(t, v));
    const CocycleVector direct = c.affine_action(g.multiply(s, t), v);
    CHECK((composed - direct).norm() <= 1e-12);
    CHECK((c.affine_action(s, c.zero()) - c.phi(s)).norm() == 0.0);
  }
}

TEST_CASE("properness on the integers") {
  const IntegerLattice g(1);
  const GroupCocycle c(g, 4);
  const PropernessReport report = properness_curve(c, 40);
  CHECK(report.passed());
  REQUIRE(report.certificates.size() == 4);
  const PropernessCertificate& top = report.certificates[3];
  CHECK(top.threshold == 32);
  CHECK(top.elements == 16);
  CHECK(top.min_norm >= 2.0);
  CHECK(top.min_norm == doctest::Approx(2.5935711815953155).epsilon(1e-12));
  CHECK(report.curve.back().certified_lower == 2.0);
  CHECK(report.curve.front().min_norm == 0.0);
}

TEST_CASE("properness on finite groups stops at the diameter") {
  const DihedralGroup d5(5);
  const GroupCocycle c(d5, 2);
  const PropernessReport report = properness_curve(c, 20);
  CHECK(report.curve.size() == 4);  // lengths 0..3
  CHECK(report.passed());
  REQUIRE(report.certificates.size() == 2);
  CHECK(report.certificates[0].elements == 2);  // r^2 s and r^3 s
  CHECK(report.certificates[1].elements == 0);
}

TEST_CASE("lemma conclusion") {
  const IntegerLattice z1(1);
  for (std::size_t n = 1; n <= 5; ++n) {
    const LemmaConclusionReport r = check_lemma_conclusion(z1, n, static_cast<int>(n * n));
    CHECK(r.ok);
    CHECK(r.unit_at_identity);
    CHECK(r.support_size == 2 * n * n - 1);
    // equality is attained at |s| = n
    CHECK(r.max_displacement == doctest::Approx(1.0 / static_cast<double>(n)).epsilon(1e-15));
  }
  const FreeGroup f2(2);
  for (std::size_t n = 1; n <= 3; ++n) {
    const LemmaConclusionReport r = check_lemma_conclusion(f2, n, static_cast<int>(n * n));
    CHECK(r.ok);
    CHECK(r.max_displacement <= 1.0 / static_cast<double>(n) + 1e-15);
  }
  const LemmaConclusionReport sym = check_lemma_conclusion(SymmetricGroup(4), 2, 4);
  CHECK(sym.ok);
  // radius too small for the displacement range
  CHECK_FALSE(check_lemma_conclusion(z1, 3, 2).ok);
  CHECK_THROWS_AS(check_lemma_conclusion(z1, 0, 1), Error);
}

TEST_CASE("invalid construction") {
  const IntegerLattice g(1);
  CHECK_THROWS_AS(GroupCocycle(g, 0), Error);
  CHECK_THROWS_AS(GroupCocycle(g, 2, {4, 1}), Error);
  CHECK_THROWS_AS(GroupCocycle(g, 2, {1}), Error);
  const GroupCocycle c(g, 2);
  const IntegerLattice z2(2);
  const GroupCocycle other(z2, 3);
  CHECK_THROWS_AS(c.translate(z(g, 1), other.zero()), Error);
}

}  // TEST_SUITE
