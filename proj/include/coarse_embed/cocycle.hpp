#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "coarse_embed/exponent_schedule.hpp"
#include "coarse_embed/group.hpp"
#include "coarse_embed/mixed_norm.hpp"
#include "coarse_embed/sparse_function.hpp"

namespace coarse_embed {

using GroupFunction = SparseFunction<Element>;
using CocycleVector = MixedNormVector<Element>;

/// Tent radii m_n = n^2 for n = 1..depth.
std::vector<int> square_radii(std::size_t depth);

/// p_n = select_exponent(1, 2 |B_{m_n}(e)|, 1), i.e. the smallest integer
/// with (2 |B_{m_n}|)^(1/p_n) <= 2, rectified to be non-decreasing. Then
/// ||s.f_n - f_n||_{p_n} <= 2 |s| / m_n.
ExponentSchedule group_schedule(const CayleyBall& ball, const std::vector<int>& radii);
ExponentSchedule group_schedule(const GroupModel& group, std::size_t depth,
                                std::size_t ball_cap = kDefaultBallCap);

/// The cocycle Phi(s) = (s.f_n - f_n)_{n=1..N} for the radial tents
/// f_n(t) = max(1 - |t|/m_n, 0), and the affine isometric action
/// alpha_s = lambda_s + Phi(s) it defines.
///
/// (s.f)(t) = f(s^-1 t). The ball of radius m_N around the identity is
/// enumerated once at construction; the object is immutable afterwards and
/// keeps a reference to the group model.
class GroupCocycle {
 public:
  /// Radii default to square_radii(depth); the schedule defaults to
  /// group_schedule. Throws BallTooLarge when B_{m_N} exceeds ball_cap.
  GroupCocycle(const GroupModel& group, std::size_t depth, std::vector<int> radii = {},
               std::size_t ball_cap = kDefaultBallCap,
               std::shared_ptr<const ExponentSchedule> schedule = nullptr);

  const GroupModel& group() const noexcept { return *group_; }
  std::size_t depth() const noexcept { return depth_; }
  int radius(std::size_t n) const { return radii_.at(n - 1); }
  const std::vector<int>& radii() const noexcept { return radii_; }
  const CayleyBall& ball() const noexcept { return ball_; }
  const std::shared_ptr<const ExponentSchedule>& schedule() const noexcept { return schedule_; }

  /// f_n, 1-based.
  const GroupFunction& f(std::size_t n) const { return tents_.at(n - 1); }

  /// s.f_n - f_n.
  GroupFunction tent_block(std::size_t n, Element s) const;

  CocycleVector zero() const;
  CocycleVector phi(Element s) const;

  /// lambda_s: moves every block's support by t -> s t.
  CocycleVector translate(Element s, const CocycleVector& v) const;

  /// alpha_s(v) = lambda_s(v) + Phi(s).
  CocycleVector affine_action(Element s, const CocycleVector& v) const;

  /// ||Phi(st) - lambda_s(Phi(t)) - Phi(s)||; zero up to rounding.
  double cocycle_residual(Element s, Element t) const;

  /// Closed-form word length when the model has one, otherwise looked up in
  /// the enumerated ball. Throws BallTooLarge when neither applies.
  int word_length(Element s) const;

 private:
  const GroupModel* group_;
  std::size_t depth_;
  std::vector<int> radii_;
  CayleyBall ball_;
  std::vector<GroupFunction> tents_;
  std::shared_ptr<const ExponentSchedule> schedule_;
};

double verify_cocycle(const GroupCocycle& cocycle, Element s, Element t);

struct PropernessPoint {
  int length = 0;
  std::size_t elements = 0;
  double min_norm = 0.0;         // min ||Phi(s)|| over |s| == length
  double certified_lower = 0.0;  // max sqrt(m) over passing certificates with 2 m_m < length
};

struct PropernessCertificate {
  std::size_t m = 0;
  int threshold = 0;           // 2 m_m
  std::size_t elements = 0;    // enumerated elements with |s| > threshold
  double min_norm = 0.0;       // their minimum ||Phi(s)|| (0 when none)
  bool ok = true;              // min_norm >= sqrt(m) - tolerance
};

struct PropernessReport {
  std::vector<PropernessPoint> curve;
  std::vector<PropernessCertificate> certificates;

  bool passed() const noexcept;
};

/// Exact minimum of ||Phi(s)|| on every sphere |s| = L <= max_length, plus
/// the certificate table: for m <= N, all |s| > 2 m_m have ||Phi(s)|| >= sqrt(m).
PropernessReport properness_curve(const GroupCocycle& cocycle, int max_length,
                                  std::size_t ball_cap = kDefaultBallCap,
                                  double tolerance = 1e-9);

/// Direct check that f(t) = max(1 - |t|/m, 0) satisfies
/// ||f||_inf = f(e) = 1, finite support, and ||s.f - f||_inf <= 1/n for
/// every |s| <= n. The support B_{m-1} is streamed, never stored, so the
/// check scales to balls far beyond the default cap.
struct LemmaConclusionReport {
  std::size_t n = 0;
  int radius = 0;                  // m
  std::size_t support_size = 0;    // |supp f| = |B_{m-1}|
  std::size_t elements_checked = 0;  // |B_n|
  bool unit_at_identity = false;
  double max_displacement = 0.0;   // max over |s| <= n of ||s.f - f||_inf
  bool ok = false;
};

LemmaConclusionReport check_lemma_conclusion(const GroupModel& group, std::size_t n, int radius,
                                             std::size_t stream_limit = 100'000'000);

}  // namespace coarse_embed
