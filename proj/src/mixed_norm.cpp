#include "coarse_embed/mixed_norm.hpp"

#include <algorithm>
#include <cmath>

namespace coarse_embed {

double lp_norm(std::span<const double> values, Exponent p) {
  double sup = 0.0;
  for (double v : values) sup = std::max(sup, std::abs(v));
  if (sup == 0.0 || p.is_infinite()) return sup;
  const double q = p.value();
  if (q == 1.0) {
    double sum = 0.0;
    for (double v : values) sum += std::abs(v);
    return sum;
  }
  double sum = 0.0;
  for (double v : values) sum += std::pow(std::abs(v) / sup, q);
  return sup * std::pow(sum, 1.0 / q);
}

}  // namespace coarse_embed
