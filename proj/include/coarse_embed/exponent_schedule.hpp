#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace coarse_embed {

class FiniteMetricSpace;

/// An ℓ^p exponent: a real p >= 1 or infinity.
class Exponent {
 public:
  /// Throws InvalidArgument when p < 1 or p is NaN.
  explicit Exponent(double p);

  static Exponent infinity() { return Exponent(std::numeric_limits<double>::infinity()); }

  double value() const noexcept { return p_; }
  bool is_infinite() const noexcept { return p_ == std::numeric_limits<double>::infinity(); }

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;

 private:
  double p_;
};

/// Upper bound alpha * beta^(1/p) for ||f||_p over all f with
/// ||f||_inf <= alpha and |supp f| <= beta.
double lemma1_bound(double alpha, double beta, Exponent p);

/// Smallest integer p >= 1 with alpha * (beta^(1/p) - 1) <= eps, evaluated in
/// binary64. Then ||f||_p <= ||f||_inf + eps on every f with ||f||_inf <= alpha
/// and |supp f| <= beta. Returns 1 when alpha == 0 or beta == 1.
std::int64_t select_exponent(double alpha, double beta, double eps);

/// True when p satisfies the defining inequality of select_exponent.
bool exponent_feasible(double alpha, double beta, double eps, std::int64_t p);

/// Parameters that justified one exponent of a schedule.
struct ScheduleProvenance {
  double alpha = 0.0;
  double beta = 1.0;
  double eps = 1.0;

  friend bool operator==(const ScheduleProvenance&, const ScheduleProvenance&) = default;
};

/// The exponent sequence p_1..p_N of a mixed-norm target, non-decreasing,
/// with the per-index parameters that produced it. Indices are 1-based in
/// the accessors to match block numbering.
class ExponentSchedule {
 public:
  ExponentSchedule() = default;

  /// Throws InvalidArgument if the lengths differ, the exponents decrease, or
  /// an exponent violates its provenance inequality.
  ExponentSchedule(std::vector<Exponent> exponents, std::vector<ScheduleProvenance> provenance);

  std::size_t size() const noexcept { return exponents_.size(); }
  Exponent exponent(std::size_t n) const;  // 1-based
  const ScheduleProvenance& provenance(std::size_t n) const;  // 1-based
  const std::vector<Exponent>& exponents() const noexcept { return exponents_; }
  const std::vector<ScheduleProvenance>& provenance() const noexcept { return provenance_; }

  friend bool operator==(const ExponentSchedule&, const ExponentSchedule&) = default;

 private:
  std::vector<Exponent> exponents_;
  std::vector<ScheduleProvenance> provenance_;
};

/// Builds a schedule from (alpha_n, beta_n, eps_n): each p_n is
/// select_exponent of its parameters, then raised to the running maximum.
ExponentSchedule schedule_from_parameters(const std::vector<ScheduleProvenance>& parameters);

/// p_n from alpha_n = 1, beta_n = 2 C(n), eps_n = 1/n where C is the growth
/// profile of the space. Tent differences at scale n have values in [-1, 1]
/// and support inside two n-balls, so the result guarantees
/// ||phi^n_x - phi^n_y||_{p_n} <= ||phi^n_x - phi^n_y||_inf + 1/n.
ExponentSchedule schedule_for_space(const FiniteMetricSpace& space, std::size_t depth);

}  // namespace coarse_embed
