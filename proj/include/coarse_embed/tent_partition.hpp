#pragma once

#include <cstddef>

#include "coarse_embed/metric_space.hpp"
#include "coarse_embed/sparse_function.hpp"

namespace coarse_embed {

using PointFunction = SparseFunction<PointId>;

/// phi^n_x(y) = 1 - d(x,y)/n on {d(x,y) < n}, zero elsewhere.
///
/// The three properties that the embedding relies on:
///   sup norm is 1, attained at x;
///   the support sits inside the closed ball B_n(x) (strictly inside it);
///   ||phi^n_x - phi^n_y||_inf <= d(x,y)/n.
PointFunction tent(const FiniteMetricSpace& space, PointId x, std::size_t n);

struct TentConditionReport {
  bool unit_sup = true;        // ||phi^n_x||_inf == 1 for every x
  bool support_in_ball = true;  // supp phi^n_x inside B_n(x)
  bool lipschitz = true;        // ||phi^n_x - phi^n_y||_inf <= d(x,y)/n + tol
  double worst_lipschitz_slack = 0.0;  // min over pairs of d/n - sup distance
  std::size_t pairs_checked = 0;

  bool ok() const noexcept { return unit_sup && support_in_ball && lipschitz; }
};

/// Exhaustive check of the three tent conditions at scale n over all x, y.
TentConditionReport check_tent_conditions(const FiniteMetricSpace& space, std::size_t n,
                                          double tolerance = 1e-12);

}  // namespace coarse_embed
