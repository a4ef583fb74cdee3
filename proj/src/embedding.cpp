#include "coarse_embed/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <string>

#include "coarse_embed/errors.hpp"
#include "coarse_embed/parallel.hpp"

namespace coarse_embed {

namespace {

// Values of a - b over the union of supports, written into out.
void difference_values(const PointFunction& a, const PointFunction& b, std::vector<double>& out) {
  out.clear();
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  const auto ea = a.entries().end();
  const auto eb = b.entries().end();
  while (ia != ea && ib != eb) {
    if (ia->first < ib->first) {
      out.push_back(ia->second);
      ++ia;
    } else if (ib->first < ia->first) {
      out.push_back(-ib->second);
      ++ib;
    } else {
      out.push_back(ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  for (; ia != ea; ++ia) out.push_back(ia->second);
  for (; ib != eb; ++ib) out.push_back(-ib->second);
}

struct DistanceBucket {
  double min_distance = std::numeric_limits<double>::infinity();
  double max_distance = 0.0;
  std::size_t pairs = 0;
};

struct ScanPartial {
  std::map<double, DistanceBucket> buckets;
  double min_schedule_slack = std::numeric_limits<double>::infinity();
};

}  // namespace

std::size_t default_depth(const FiniteMetricSpace& space) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(space.diameter())));
}

Embedding::Embedding(const FiniteMetricSpace& space,
                     std::shared_ptr<const ExponentSchedule> schedule, std::size_t depth,
                     PointId basepoint)
    : space_(&space), schedule_(std::move(schedule)), depth_(depth), basepoint_(basepoint) {
  if (!schedule_) throw Error(ErrorCode::InvalidArgument, "embedding needs a schedule");
  if (depth_ == 0) throw Error(ErrorCode::InvalidArgument, "embedding depth must be >= 1");
  if (schedule_->size() < depth_) {
    throw Error(ErrorCode::ScheduleMismatch, "schedule has " + std::to_string(schedule_->size()) +
                                                 " exponents, depth " + std::to_string(depth_) +
                                                 " requested");
  }
  if (!space.contains(basepoint)) {
    throw Error(ErrorCode::InvalidVertexId, "basepoint outside the space");
  }
  const std::size_t v = space.size();
  tents_.reserve(depth_ * v);
  for (std::size_t n = 1; n <= depth_; ++n) {
    for (PointId x = 0; x < v; ++x) tents_.push_back(tent(space, x, n));
  }
}

Embedding Embedding::with_default_schedule(const FiniteMetricSpace& space, std::size_t depth,
                                           PointId basepoint) {
  if (depth == 0) depth = default_depth(space);
  auto schedule = std::make_shared<const ExponentSchedule>(schedule_for_space(space, depth));
  return Embedding(space, std::move(schedule), depth, basepoint);
}

Embedding embed_space(const FiniteMetricSpace& space, std::size_t depth, PointId basepoint) {
  return Embedding::with_default_schedule(space, depth, basepoint);
}

const PointFunction& Embedding::tent_at(PointId x, std::size_t n) const {
  if (n == 0 || n > depth_ || !space_->contains(x)) {
    throw Error(ErrorCode::InvalidArgument, "tent index out of range");
  }
  return tents_[(n - 1) * space_->size() + x];
}

PointVector Embedding::embed_point(PointId x) const {
  std::vector<PointFunction> blocks;
  blocks.reserve(depth_);
  for (std::size_t n = 1; n <= depth_; ++n) {
    blocks.push_back(tent_at(x, n) - tent_at(basepoint_, n));
  }
  return PointVector(schedule_, std::move(blocks));
}

double Embedding::block_distance(std::size_t n, PointId x, PointId y) const {
  std::vector<double> values;
  difference_values(tent_at(x, n), tent_at(y, n), values);
  return lp_norm(values, schedule_->exponent(n));
}

double Embedding::pair_distance(PointId x, PointId y) const {
  if (x == y) {
    if (!space_->contains(x)) throw Error(ErrorCode::InvalidVertexId, "point outside the space");
    return 0.0;
  }
  std::vector<double> values;
  double sum = 0.0;
  // Iterate with the smaller id first so that d(x,y) and d(y,x) run the
  // exact same floating-point operations.
  const PointId a = std::min(x, y);
  const PointId b = std::max(x, y);
  for (std::size_t n = 1; n <= depth_; ++n) {
    difference_values(tent_at(a, n), tent_at(b, n), values);
    const double block = lp_norm(values, schedule_->exponent(n));
    sum += block * block;
  }
  return std::sqrt(sum);
}

double truncated_upper_constant(std::size_t depth) {
  double sum = 0.0;
  for (std::size_t n = depth; n >= 1; --n) {
    sum += 1.0 / (static_cast<double>(n) * static_cast<double>(n));
  }
  return std::sqrt(sum);
}

double full_upper_constant() { return std::numbers::pi / std::sqrt(6.0); }

DistortionProfile distortion_profile(const Embedding& embedding) {
  const FiniteMetricSpace& space = embedding.space();
  const std::size_t v = space.size();
  const std::size_t depth = embedding.depth();
  const ExponentSchedule& schedule = *embedding.schedule();

  const std::size_t chunks = worker_count();
  std::vector<ScanPartial> partials(std::max<std::size_t>(1, std::min(chunks, v)));

  parallel_chunks(v, partials.size(), [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    ScanPartial& part = partials[chunk];
    std::vector<double> values;
    for (std::size_t xi = begin; xi < end; ++xi) {
      const auto x = static_cast<PointId>(xi);
      for (PointId y = x + 1; y < v; ++y) {
        double sum = 0.0;
        for (std::size_t n = 1; n <= depth; ++n) {
          difference_values(embedding.tent_at(x, n), embedding.tent_at(y, n), values);
          const double block = lp_norm(values, schedule.exponent(n));
          double sup = 0.0;
          for (double value : values) sup = std::max(sup, std::abs(value));
          part.min_schedule_slack =
              std::min(part.min_schedule_slack, sup + 1.0 / static_cast<double>(n) - block);
          sum += block * block;
        }
        const double dist = std::sqrt(sum);
        DistanceBucket& bucket = part.buckets[space.distance(x, y)];
        bucket.min_distance = std::min(bucket.min_distance, dist);
        bucket.max_distance = std::max(bucket.max_distance, dist);
        ++bucket.pairs;
      }
    }
  });

  std::map<double, DistanceBucket> merged;
  double slack = std::numeric_limits<double>::infinity();
  for (const ScanPartial& part : partials) {
    slack = std::min(slack, part.min_schedule_slack);
    for (const auto& [r, bucket] : part.buckets) {
      DistanceBucket& target = merged[r];
      target.min_distance = std::min(target.min_distance, bucket.min_distance);
      target.max_distance = std::max(target.max_distance, bucket.max_distance);
      target.pairs += bucket.pairs;
    }
  }

  DistortionProfile profile;
  profile.depth = depth;
  profile.upper_constant = truncated_upper_constant(depth);
  profile.upper_constant_full = full_upper_constant();
  profile.min_schedule_slack = v > 1 ? slack : 0.0;
  profile.samples.reserve(merged.size());
  for (const auto& [r, bucket] : merged) {
    profile.samples.push_back({r, bucket.min_distance, bucket.max_distance, bucket.pairs});
  }
  // Running infimum from the largest distance downward.
  double running = std::numeric_limits<double>::infinity();
  for (auto it = profile.samples.rbegin(); it != profile.samples.rend(); ++it) {
    running = std::min(running, it->rho_minus);
    it->rho_minus = running;
  }
  return profile;
}

bool CertificationReport::passed() const noexcept {
  if (!schedule || !upper || !upper_full || !injective) return false;
  return std::all_of(lower.begin(), lower.end(),
                     [](const LowerBoundCertificate& c) { return c.ok; });
}

CertificationReport certify(const DistortionProfile& profile, double tolerance) {
  CertificationReport report;
  report.schedule = profile.min_schedule_slack >= -tolerance;
  report.upper = true;
  report.upper_full = true;
  for (const DistortionSample& s : profile.samples) {
    if (s.rho_plus > profile.upper_constant * (s.r + 1.0) + tolerance) report.upper = false;
    if (s.rho_plus > profile.upper_constant_full * (s.r + 1.0) + tolerance) {
      report.upper_full = false;
    }
  }
  const auto max_radius =
      static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(profile.depth))));
  for (std::size_t radius = 1; radius <= max_radius; ++radius) {
    LowerBoundCertificate cert;
    cert.radius = radius;
    cert.threshold = 2.0 * static_cast<double>(radius * radius);
    auto first = std::upper_bound(
        profile.samples.begin(), profile.samples.end(), cert.threshold,
        [](double t, const DistortionSample& s) { return t < s.r; });
    for (auto it = first; it != profile.samples.end(); ++it) cert.pairs += it->pairs;
    if (first != profile.samples.end()) {
      cert.min_distance = first->rho_minus;
      cert.ok = first->rho_minus >= static_cast<double>(radius) - tolerance;
    }
    report.lower.push_back(cert);
  }
  report.injective = profile.samples.empty() || profile.samples.front().rho_minus > 0.0;
  return report;
}

}  // namespace coarse_embed
