#include "coarse_embed/tent_partition.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "coarse_embed/errors.hpp"

namespace coarse_embed {

PointFunction tent(const FiniteMetricSpace& space, PointId x, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "tent scale must be >= 1");
  if (!space.contains(x)) throw Error(ErrorCode::InvalidVertexId, "tent center outside the space");
  const double scale = static_cast<double>(n);
  std::vector<PointFunction::Entry> entries;
  // points_by_distance is sorted by distance; stop at the first d >= n.
  for (PointId y : space.points_by_distance(x)) {
    const double d = space.distance(x, y);
    if (d >= scale) break;
    entries.emplace_back(y, 1.0 - d / scale);
  }
  std::sort(entries.begin(), entries.end());
  return PointFunction::from_sorted(std::move(entries));
}

TentConditionReport check_tent_conditions(const FiniteMetricSpace& space, std::size_t n,
                                          double tolerance) {
  TentConditionReport report;
  const double scale = static_cast<double>(n);
  std::vector<PointFunction> tents;
  tents.reserve(space.size());
  for (PointId x = 0; x < space.size(); ++x) {
    tents.push_back(tent(space, x, n));
    const PointFunction& f = tents.back();
    if (f.sup_norm() != 1.0 || f.at(x) != 1.0) report.unit_sup = false;
    for (const auto& [y, value] : f.entries()) {
      if (space.distance(x, y) > scale) report.support_in_ball = false;
    }
  }
  report.worst_lipschitz_slack = std::numeric_limits<double>::infinity();
  for (PointId x = 0; x < space.size(); ++x) {
    for (PointId y = x; y < space.size(); ++y) {
      const double slack = space.distance(x, y) / scale - sup_distance(tents[x], tents[y]);
      report.worst_lipschitz_slack = std::min(report.worst_lipschitz_slack, slack);
      if (slack < -tolerance) report.lipschitz = false;
      ++report.pairs_checked;
    }
  }
  return report;
}

}  // namespace coarse_embed
