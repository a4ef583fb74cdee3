#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

#include <boost/rational.hpp>

#include "coarse_embed/cocycle.hpp"
#include "coarse_embed/metric_space.hpp"
#include "coarse_embed/tent_partition.hpp"

// Exact-rational verification mode. Tent values on integer metrics are
// rationals k/n, and group tents have denominator m_n, so the tent
// conditions and the cocycle identity can be checked with no tolerance.
namespace coarse_embed::exact {

using Rational = boost::rational<std::int64_t>;

template <class Key>
using RationalFunction = std::map<Key, Rational>;

/// phi^n_x with exact values. Throws InvalidArgument on non-integral metrics.
RationalFunction<PointId> tent(const FiniteMetricSpace& space, PointId x, std::size_t n);

template <class Key>
Rational sup_distance(const RationalFunction<Key>& f, const RationalFunction<Key>& g) {
  Rational best(0);
  auto consider = [&best](const Rational& v) {
    const Rational a = v.numerator() < 0 ? -v : v;
    if (a > best) best = a;
  };
  for (const auto& [k, v] : f) {
    auto it = g.find(k);
    consider(it == g.end() ? v : v - it->second);
  }
  for (const auto& [k, v] : g) {
    if (!f.count(k)) consider(v);
  }
  return best;
}

/// The three tent conditions at scale n, decided in exact arithmetic.
TentConditionReport check_tent_conditions(const FiniteMetricSpace& space, std::size_t n);

/// Decides Phi(st) == lambda_s(Phi(t)) + Phi(s) exactly.
bool cocycle_identity_holds(const GroupCocycle& cocycle, Element s, Element t);

}  // namespace coarse_embed::exact
