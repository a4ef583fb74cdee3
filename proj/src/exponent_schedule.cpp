#include "coarse_embed/exponent_schedule.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coarse_embed/errors.hpp"
#include "coarse_embed/metric_space.hpp"

namespace coarse_embed {

Exponent::Exponent(double p) : p_(p) {
  if (!(p >= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "exponent must be >= 1, got " + std::to_string(p));
  }
}

double lemma1_bound(double alpha, double beta, Exponent p) {
  if (!(alpha >= 0.0) || !(beta >= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "lemma1_bound needs alpha >= 0 and beta >= 1");
  }
  if (p.is_infinite()) return alpha;
  return alpha * std::pow(beta, 1.0 / p.value());
}

bool exponent_feasible(double alpha, double beta, double eps, std::int64_t p) {
  return alpha * (std::pow(beta, 1.0 / static_cast<double>(p)) - 1.0) <= eps;
}

std::int64_t select_exponent(double alpha, double beta, double eps) {
  if (!(alpha >= 0.0) || !(beta >= 1.0) || !(eps > 0.0) || !std::isfinite(alpha) ||
      !std::isfinite(beta)) {
    throw Error(ErrorCode::InvalidArgument,
                "select_exponent needs alpha >= 0, beta >= 1, eps > 0");
  }
  if (alpha == 0.0 || beta == 1.0) return 1;
  // Closed form ceil(ln beta / ln(1 + eps/alpha)), then nudged so the
  // binary64 evaluation of the inequality is exactly at its boundary.
  const double estimate = std::ceil(std::log(beta) / std::log1p(eps / alpha));
  std::int64_t p = std::max<std::int64_t>(1, static_cast<std::int64_t>(estimate));
  while (!exponent_feasible(alpha, beta, eps, p)) ++p;
  while (p > 1 && exponent_feasible(alpha, beta, eps, p - 1)) --p;
  return p;
}

ExponentSchedule::ExponentSchedule(std::vector<Exponent> exponents,
                                   std::vector<ScheduleProvenance> provenance)
    : exponents_(std::move(exponents)), provenance_(std::move(provenance)) {
  if (exponents_.size() != provenance_.size()) {
    throw Error(ErrorCode::InvalidArgument, "schedule exponents and provenance differ in length");
  }
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i > 0 && exponents_[i] < exponents_[i - 1]) {
      throw Error(ErrorCode::InvalidArgument,
                  "schedule exponents decrease at index " + std::to_string(i + 1));
    }
    const ScheduleProvenance& prov = provenance_[i];
    const Exponent p = exponents_[i];
    const bool ok = p.is_infinite() ||
                    prov.alpha * (std::pow(prov.beta, 1.0 / p.value()) - 1.0) <= prov.eps;
    if (!ok) {
      throw Error(ErrorCode::InvalidArgument,
                  "schedule exponent at index " + std::to_string(i + 1) +
                      " violates alpha*(beta^(1/p)-1) <= eps");
    }
  }
}

Exponent ExponentSchedule::exponent(std::size_t n) const {
  if (n == 0 || n > exponents_.size()) {
    throw Error(ErrorCode::InvalidArgument, "schedule index " + std::to_string(n) +
                                                " outside 1.." + std::to_string(size()));
  }
  return exponents_[n - 1];
}

const ScheduleProvenance& ExponentSchedule::provenance(std::size_t n) const {
  if (n == 0 || n > provenance_.size()) {
    throw Error(ErrorCode::InvalidArgument, "schedule index " + std::to_string(n) +
                                                " outside 1.." + std::to_string(size()));
  }
  return provenance_[n - 1];
}

ExponentSchedule schedule_from_parameters(const std::vector<ScheduleProvenance>& parameters) {
  std::vector<Exponent> exponents;
  exponents.reserve(parameters.size());
  std::int64_t running = 1;
  for (const ScheduleProvenance& prov : parameters) {
    running = std::max(running, select_exponent(prov.alpha, prov.beta, prov.eps));
    exponents.emplace_back(static_cast<double>(running));
  }
  return ExponentSchedule(std::move(exponents), parameters);
}

ExponentSchedule schedule_for_space(const FiniteMetricSpace& space, std::size_t depth) {
  if (depth == 0) throw Error(ErrorCode::InvalidArgument, "schedule depth must be >= 1");
  const GrowthProfile growth = growth_profile(space, depth);
  std::vector<ScheduleProvenance> parameters;
  parameters.reserve(depth);
  for (std::size_t n = 1; n <= depth; ++n) {
    parameters.push_back({1.0, 2.0 * static_cast<double>(growth.at(n)), 1.0 / static_cast<double>(n)});
  }
  return schedule_from_parameters(parameters);
}

}  // namespace coarse_embed
