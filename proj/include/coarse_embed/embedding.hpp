#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "coarse_embed/exponent_schedule.hpp"
#include "coarse_embed/metric_space.hpp"
#include "coarse_embed/mixed_norm.hpp"
#include "coarse_embed/tent_partition.hpp"

namespace coarse_embed {

using PointVector = MixedNormVector<PointId>;

/// Default truncation depth: the diameter rounded up, at least 1.
std::size_t default_depth(const FiniteMetricSpace& space);

/// Phi(x) = (phi^n_x - phi^n_{x0})_{n=1..N} in the ℓ²-sum of ℓ^{p_n}.
///
/// All tents phi^n_x are precomputed at construction. The object keeps a
/// reference to the space, which must outlive it; every member is const and
/// safe to call concurrently.
class Embedding {
 public:
  Embedding(const FiniteMetricSpace& space, std::shared_ptr<const ExponentSchedule> schedule,
            std::size_t depth, PointId basepoint = 0);

  /// Schedule from schedule_for_space(space, depth); depth 0 means default_depth.
  static Embedding with_default_schedule(const FiniteMetricSpace& space, std::size_t depth = 0,
                                         PointId basepoint = 0);

  const FiniteMetricSpace& space() const noexcept { return *space_; }
  const std::shared_ptr<const ExponentSchedule>& schedule() const noexcept { return schedule_; }
  std::size_t depth() const noexcept { return depth_; }
  PointId basepoint() const noexcept { return basepoint_; }

  const PointFunction& tent_at(PointId x, std::size_t n) const;

  PointVector embed_point(PointId x) const;

  /// ||phi^n_x - phi^n_y||_{p_n}.
  double block_distance(std::size_t n, PointId x, PointId y) const;

  /// ||Phi(x) - Phi(y)||, computed blockwise without materializing Phi.
  double pair_distance(PointId x, PointId y) const;

 private:
  const FiniteMetricSpace* space_;
  std::shared_ptr<const ExponentSchedule> schedule_;
  std::size_t depth_;
  PointId basepoint_;
  std::vector<PointFunction> tents_;  // index (n-1) * V + x
};

Embedding embed_space(const FiniteMetricSpace& space, std::size_t depth = 0,
                      PointId basepoint = 0);

/// (sum_{n<=N} 1/n^2)^(1/2).
double truncated_upper_constant(std::size_t depth);

/// pi / sqrt(6), the full-series constant.
double full_upper_constant();

struct DistortionSample {
  double r = 0.0;
  double rho_minus = 0.0;  // inf of ||Phi(x)-Phi(y)|| over d(x,y) >= r
  double rho_plus = 0.0;   // max of ||Phi(x)-Phi(y)|| over d(x,y) == r
  std::size_t pairs = 0;   // pairs with d(x,y) == r
};

struct DistortionProfile {
  std::size_t depth = 0;
  double upper_constant = 0.0;
  double upper_constant_full = 0.0;
  std::vector<DistortionSample> samples;  // one per positive distance, ascending
  /// min over pairs and n <= N of ||.||_inf + 1/n - ||.||_{p_n} for tent
  /// differences; nonnegative iff the schedule does its job.
  double min_schedule_slack = 0.0;
};

/// Exhaustive over unordered pairs; pairs are split across worker threads
/// and reduced with min/max/sum, so the result does not depend on the
/// thread count.
DistortionProfile distortion_profile(const Embedding& embedding);

struct LowerBoundCertificate {
  std::size_t radius = 0;      // R
  double threshold = 0.0;      // 2 R^2
  bool ok = true;              // every pair with d > threshold has distance >= R
  std::size_t pairs = 0;       // pairs with d > threshold
  double min_distance = 0.0;   // their minimum distance (0 when pairs == 0)
};

struct CertificationReport {
  bool schedule = false;     // block-wise schedule inequality
  bool upper = false;        // truncated-constant linear bound
  bool upper_full = false;   // pi/sqrt(6) linear bound
  std::vector<LowerBoundCertificate> lower;  // R = 1..floor(sqrt(N))
  bool injective = false;

  bool passed() const noexcept;
};

CertificationReport certify(const DistortionProfile& profile, double tolerance = 1e-9);

}  // namespace coarse_embed
