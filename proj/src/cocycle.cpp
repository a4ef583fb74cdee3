#include "coarse_embed/cocycle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "coarse_embed/errors.hpp"

namespace coarse_embed {

std::vector<int> square_radii(std::size_t depth) {
  std::vector<int> radii;
  radii.reserve(depth);
  for (std::size_t n = 1; n <= depth; ++n) radii.push_back(static_cast<int>(n * n));
  return radii;
}

ExponentSchedule group_schedule(const CayleyBall& ball, const std::vector<int>& radii) {
  std::vector<ScheduleProvenance> parameters;
  parameters.reserve(radii.size());
  for (int m : radii) {
    parameters.push_back({1.0, 2.0 * static_cast<double>(ball.count_within(m)), 1.0});
  }
  return schedule_from_parameters(parameters);
}

ExponentSchedule group_schedule(const GroupModel& group, std::size_t depth,
                                std::size_t ball_cap) {
  if (depth == 0) throw Error(ErrorCode::InvalidArgument, "schedule depth must be >= 1");
  const std::vector<int> radii = square_radii(depth);
  return group_schedule(word_ball(group, radii.back(), ball_cap), radii);
}

GroupCocycle::GroupCocycle(const GroupModel& group, std::size_t depth, std::vector<int> radii,
                           std::size_t ball_cap, std::shared_ptr<const ExponentSchedule> schedule)
    : group_(&group), depth_(depth), radii_(std::move(radii)) {
  if (depth_ == 0) throw Error(ErrorCode::InvalidArgument, "cocycle depth must be >= 1");
  if (radii_.empty()) radii_ = square_radii(depth_);
  if (radii_.size() != depth_) {
    throw Error(ErrorCode::InvalidArgument, "need exactly one tent radius per block");
  }
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    if (radii_[i] < 1 || (i > 0 && radii_[i] < radii_[i - 1])) {
      throw Error(ErrorCode::InvalidArgument, "tent radii must be positive and non-decreasing");
    }
  }
  ball_ = word_ball(group, radii_.back(), ball_cap);
  tents_.reserve(depth_);
  for (int m : radii_) {
    std::vector<GroupFunction::Entry> entries;
    const auto elements = ball_.elements();
    const auto lengths = ball_.lengths();
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (lengths[i] < m) {
        entries.emplace_back(elements[i], 1.0 - static_cast<double>(lengths[i]) / m);
      }
    }
    tents_.push_back(GroupFunction::from_entries(std::move(entries)));
  }
  if (schedule) {
    if (schedule->size() < depth_) {
      throw Error(ErrorCode::ScheduleMismatch, "schedule shorter than the cocycle depth");
    }
    schedule_ = std::move(schedule);
  } else {
    schedule_ = std::make_shared<const ExponentSchedule>(group_schedule(ball_, radii_));
  }
}

GroupFunction GroupCocycle::tent_block(std::size_t n, Element s) const {
  const GroupFunction& fn = f(n);
  const GroupModel& g = *group_;
  return fn.map_keys([&g, s](Element u) { return g.multiply(s, u); }) - fn;
}

CocycleVector GroupCocycle::zero() const { return CocycleVector::zero(schedule_, depth_); }

CocycleVector GroupCocycle::phi(Element s) const {
  std::vector<GroupFunction> blocks;
  blocks.reserve(depth_);
  for (std::size_t n = 1; n <= depth_; ++n) blocks.push_back(tent_block(n, s));
  return CocycleVector(schedule_, std::move(blocks));
}

CocycleVector GroupCocycle::translate(Element s, const CocycleVector& v) const {
  if (!v.same_schedule(zero()) || v.depth() != depth_) {
    throw Error(ErrorCode::ScheduleMismatch, "vector does not live in this cocycle's space");
  }
  const GroupModel& g = *group_;
  return v.map_keys([&g, s](Element u) { return g.multiply(s, u); });
}

CocycleVector GroupCocycle::affine_action(Element s, const CocycleVector& v) const {
  return translate(s, v) + phi(s);
}

double GroupCocycle::cocycle_residual(Element s, Element t) const {
  const CocycleVector lhs = phi(group_->multiply(s, t));
  return (lhs - translate(s, phi(t)) - phi(s)).norm();
}

int GroupCocycle::word_length(Element s) const {
  if (const auto len = group_->closed_form_length(s)) return *len;
  if (const auto len = ball_.length_of(s)) return *len;
  if (ball_.saturated()) {
    throw Error(ErrorCode::InvalidArgument, "element not in the group: " + group_->format(s));
  }
  throw Error(ErrorCode::BallTooLarge,
              "word length of " + group_->format(s) + " lies beyond the enumerated ball");
}

double verify_cocycle(const GroupCocycle& cocycle, Element s, Element t) {
  return cocycle.cocycle_residual(s, t);
}

bool PropernessReport::passed() const noexcept {
  return std::all_of(certificates.begin(), certificates.end(),
                     [](const PropernessCertificate& c) { return c.ok; });
}

PropernessReport properness_curve(const GroupCocycle& cocycle, int max_length,
                                  std::size_t ball_cap, double tolerance) {
  if (max_length < 0) throw Error(ErrorCode::InvalidArgument, "max_length must be >= 0");
  const CayleyBall ball = word_ball(cocycle.group(), max_length, ball_cap);
  PropernessReport report;
  for (int length = 0; length <= max_length; ++length) {
    const auto sphere = ball.sphere(length);
    if (sphere.empty()) break;  // finite group exhausted
    PropernessPoint point;
    point.length = length;
    point.elements = sphere.size();
    point.min_norm = std::numeric_limits<double>::infinity();
    for (Element s : sphere) point.min_norm = std::min(point.min_norm, cocycle.phi(s).norm());
    report.curve.push_back(point);
  }
  for (std::size_t m = 1; m <= cocycle.depth(); ++m) {
    PropernessCertificate cert;
    cert.m = m;
    cert.threshold = 2 * cocycle.radius(m);
    double lowest = std::numeric_limits<double>::infinity();
    for (const PropernessPoint& point : report.curve) {
      if (point.length > cert.threshold && point.elements > 0) {
        cert.elements += point.elements;
        lowest = std::min(lowest, point.min_norm);
      }
    }
    if (cert.elements > 0) {
      cert.min_norm = lowest;
      cert.ok = lowest >= std::sqrt(static_cast<double>(m)) - tolerance;
    }
    report.certificates.push_back(cert);
  }
  for (PropernessPoint& point : report.curve) {
    for (const PropernessCertificate& cert : report.certificates) {
      if (cert.ok && point.length > cert.threshold) {
        point.certified_lower =
            std::max(point.certified_lower, std::sqrt(static_cast<double>(cert.m)));
      }
    }
  }
  return report;
}

LemmaConclusionReport check_lemma_conclusion(const GroupModel& group, std::size_t n, int radius,
                                             std::size_t stream_limit) {
  if (n == 0 || radius < 1) {
    throw Error(ErrorCode::InvalidArgument, "lemma check needs n >= 1 and radius >= 1");
  }
  LemmaConclusionReport report;
  report.n = n;
  report.radius = radius;
  const int m = radius;
  const CayleyBall displacements = word_ball(group, static_cast<int>(n));
  const auto shifts = displacements.elements();
  report.elements_checked = shifts.size();

  // Without a closed-form length, |s^-1 t| comes from a ball large enough
  // to hold every product.
  std::optional<CayleyBall> lookup;
  if (!group.closed_form_length(group.identity())) {
    lookup = word_ball(group, m - 1 + static_cast<int>(n), stream_limit);
  }

  // Only t in B_{m-1} = supp f is visited. For t outside it the difference
  // equals f(s^-1 t) with s^-1 t inside, which is the s^-1 term at that
  // point; the displacement set is closed under inverse, so the maximum over
  // all s is unchanged.
  int worst = 0;  // max | min(|s^-1 t|, m) - |t| |, in units of 1/m
  bool identity_seen = false;
  std::vector<int> quotient;
  group.for_each_in_ball(m - 1, stream_limit,
                         [&](std::span<const Element> ts, std::span<const int> lengths) {
    report.support_size += ts.size();
    for (std::size_t j = 0; j < ts.size(); ++j) {
      if (lengths[j] == 0) identity_seen = identity_seen || ts[j] == group.identity();
    }
    quotient.resize(ts.size());
    for (Element s : shifts) {
      if (lookup) {
        const Element s_inv = group.inverse(s);
        for (std::size_t j = 0; j < ts.size(); ++j) {
          quotient[j] = *lookup->length_of(group.multiply(s_inv, ts[j]));
        }
      } else {
        group.left_quotient_lengths(s, ts, quotient);
      }
      for (std::size_t j = 0; j < ts.size(); ++j) {
        worst = std::max(worst, std::abs(std::min(quotient[j], m) - lengths[j]));
      }
    }
  });
  // f(e) = 1 and every other value 1 - |t|/m lies in (0, 1).
  report.unit_at_identity = identity_seen;
  report.max_displacement = static_cast<double>(worst) / m;
  report.ok = identity_seen && static_cast<long long>(worst) * static_cast<long long>(n) <= m;
  return report;
}

}  // namespace coarse_embed
