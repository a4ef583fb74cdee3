#include "coarse_embed/exact.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "coarse_embed/errors.hpp"

namespace coarse_embed::exact {

namespace {

std::int64_t integral_distance(const FiniteMetricSpace& space, PointId x, PointId y) {
  return static_cast<std::int64_t>(space.distance(x, y));
}

using GroupRational = RationalFunction<Element>;

void accumulate(GroupRational& target, const GroupRational& source, std::int64_t sign) {
  for (const auto& [k, v] : source) {
    Rational& slot = target[k];
    slot += sign * v;
    if (slot.numerator() == 0) target.erase(k);
  }
}

// f_n with exact values (m - |u|)/m.
GroupRational exact_tent(const GroupCocycle& cocycle, std::size_t n) {
  GroupRational out;
  const int m = cocycle.radius(n);
  const auto elements = cocycle.ball().elements();
  const auto lengths = cocycle.ball().lengths();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (lengths[i] < m) out.emplace(elements[i], Rational(m - lengths[i], m));
  }
  return out;
}

GroupRational translate(const GroupModel& group, Element s, const GroupRational& f) {
  GroupRational out;
  for (const auto& [k, v] : f) out.emplace(group.multiply(s, k), v);
  return out;
}

// s.f - f
GroupRational block(const GroupModel& group, Element s, const GroupRational& f) {
  GroupRational out = translate(group, s, f);
  accumulate(out, f, -1);
  return out;
}

}  // namespace

RationalFunction<PointId> tent(const FiniteMetricSpace& space, PointId x, std::size_t n) {
  if (!space.is_integral()) {
    throw Error(ErrorCode::InvalidArgument, "exact tents need an integer-valued metric");
  }
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "tent scale must be >= 1");
  RationalFunction<PointId> out;
  const auto scale = static_cast<std::int64_t>(n);
  for (PointId y = 0; y < space.size(); ++y) {
    const std::int64_t d = integral_distance(space, x, y);
    if (d < scale) out.emplace(y, Rational(scale - d, scale));
  }
  return out;
}

TentConditionReport check_tent_conditions(const FiniteMetricSpace& space, std::size_t n) {
  TentConditionReport report;
  const auto scale = static_cast<std::int64_t>(n);
  std::vector<RationalFunction<PointId>> tents;
  tents.reserve(space.size());
  for (PointId x = 0; x < space.size(); ++x) {
    tents.push_back(exact::tent(space, x, n));
    Rational sup(0);
    for (const auto& [y, value] : tents.back()) {
      if (value > sup) sup = value;
      if (integral_distance(space, x, y) > scale) report.support_in_ball = false;
    }
    auto at_x = tents.back().find(x);
    if (sup != Rational(1) || at_x == tents.back().end() || at_x->second != Rational(1)) report.unit_sup = false;
  }
  Rational worst_slack(std::numeric_limits<std::int64_t>::max());
  for (PointId x = 0; x < space.size(); ++x) {
    for (PointId y = x; y < space.size(); ++y) {
      const Rational slack =
          Rational(integral_distance(space, x, y), scale) - sup_distance(tents[x], tents[y]);
      if (slack < worst_slack) worst_slack = slack;
      if (slack < Rational(0)) report.lipschitz = false;
      ++report.pairs_checked;
    }
  }
  report.worst_lipschitz_slack = boost::rational_cast<double>(worst_slack);
  return report;
}

bool cocycle_identity_holds(const GroupCocycle& cocycle, Element s, Element t) {
  const GroupModel& group = cocycle.group();
  const Element st = group.multiply(s, t);
  for (std::size_t n = 1; n <= cocycle.depth(); ++n) {
    const GroupRational f = exact_tent(cocycle, n);
    GroupRational residual = block(group, st, f);
    accumulate(residual, translate(group, s, block(group, t, f)), -1);
    accumulate(residual, block(group, s, f), -1);
    if (!residual.empty()) return false;
  }
  return true;
}

}  // namespace coarse_embed::exact
