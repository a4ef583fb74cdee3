#pragma once

#include <cmath>
#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "coarse_embed/errors.hpp"
#include "coarse_embed/exponent_schedule.hpp"
#include "coarse_embed/sparse_function.hpp"

namespace coarse_embed {

/// ℓ^p norm of a finite vector, evaluated as M * (sum (|v_i|/M)^p)^(1/p)
/// with M the sup norm, so large p neither underflows nor overflows.
double lp_norm(std::span<const double> values, Exponent p);

template <class Key>
double block_norm(const SparseFunction<Key>& f, Exponent p) {
  std::vector<double> values;
  values.reserve(f.support_size());
  for (const auto& entry : f.entries()) values.push_back(entry.second);
  return lp_norm(values, p);
}

/// A vector of the ℓ²-direct sum of ℓ^{p_n} blocks. Block n (1-based) is
/// measured with schedule exponent p_n; the outer norm is ℓ².
///
/// The schedule is shared between vectors; two vectors combine only when
/// their schedules compare equal and they carry the same number of blocks.
template <class Key>
class MixedNormVector {
 public:
  using Block = SparseFunction<Key>;

  MixedNormVector(std::shared_ptr<const ExponentSchedule> schedule, std::vector<Block> blocks)
      : schedule_(std::move(schedule)), blocks_(std::move(blocks)) {
    if (!schedule_) throw Error(ErrorCode::InvalidArgument, "mixed-norm vector needs a schedule");
    if (blocks_.size() > schedule_->size()) {
      throw Error(ErrorCode::ScheduleMismatch, "more blocks than schedule exponents");
    }
  }

  static MixedNormVector zero(std::shared_ptr<const ExponentSchedule> schedule,
                              std::size_t depth) {
    return MixedNormVector(std::move(schedule), std::vector<Block>(depth));
  }

  std::size_t depth() const noexcept { return blocks_.size(); }
  const Block& block(std::size_t n) const { return blocks_.at(n - 1); }  // 1-based
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const std::shared_ptr<const ExponentSchedule>& schedule() const noexcept { return schedule_; }

  double block_norm_at(std::size_t n) const {
    return block_norm(block(n), schedule_->exponent(n));
  }

  double norm() const {
    double sum = 0.0;
    for (std::size_t n = 1; n <= blocks_.size(); ++n) {
      const double b = block_norm_at(n);
      sum += b * b;
    }
    return std::sqrt(sum);
  }

  bool is_zero() const noexcept {
    for (const Block& b : blocks_) {
      if (!b.empty()) return false;
    }
    return true;
  }

  /// Keeps the first `depth` blocks.
  MixedNormVector truncated(std::size_t depth) const {
    std::vector<Block> kept(blocks_.begin(),
                            blocks_.begin() + static_cast<std::ptrdiff_t>(std::min(depth, blocks_.size())));
    return MixedNormVector(schedule_, std::move(kept));
  }

  MixedNormVector operator+(const MixedNormVector& other) const {
    check_compatible(other);
    std::vector<Block> out;
    out.reserve(blocks_.size());
    for (std::size_t i = 0; i < blocks_.size(); ++i) out.push_back(blocks_[i] + other.blocks_[i]);
    return MixedNormVector(schedule_, std::move(out));
  }

  MixedNormVector operator-(const MixedNormVector& other) const {
    check_compatible(other);
    std::vector<Block> out;
    out.reserve(blocks_.size());
    for (std::size_t i = 0; i < blocks_.size(); ++i) out.push_back(blocks_[i] - other.blocks_[i]);
    return MixedNormVector(schedule_, std::move(out));
  }

  MixedNormVector scaled(double c) const {
    std::vector<Block> out;
    out.reserve(blocks_.size());
    for (const Block& b : blocks_) out.push_back(b.scaled(c));
    return MixedNormVector(schedule_, std::move(out));
  }

  /// Applies the same injective key map to every block (used for left
  /// translation in the group case).
  template <class KeyMap>
  MixedNormVector map_keys(KeyMap&& key_map) const {
    std::vector<Block> out;
    out.reserve(blocks_.size());
    for (const Block& b : blocks_) out.push_back(b.map_keys(key_map));
    return MixedNormVector(schedule_, std::move(out));
  }

  bool same_schedule(const MixedNormVector& other) const {
    return schedule_ == other.schedule_ || *schedule_ == *other.schedule_;
  }

 private:
  void check_compatible(const MixedNormVector& other) const {
    if (!same_schedule(other) || blocks_.size() != other.blocks_.size()) {
      throw Error(ErrorCode::ScheduleMismatch,
                  "mixed-norm vectors with different schedules or depths cannot be combined");
    }
  }

  std::shared_ptr<const ExponentSchedule> schedule_;
  std::vector<Block> blocks_;
};

template <class Key>
MixedNormVector<Key> add(const MixedNormVector<Key>& v, const MixedNormVector<Key>& w) {
  return v + w;
}

template <class Key>
MixedNormVector<Key> subtract(const MixedNormVector<Key>& v, const MixedNormVector<Key>& w) {
  return v - w;
}

template <class Key>
MixedNormVector<Key> scale(double c, const MixedNormVector<Key>& v) {
  return v.scaled(c);
}

}  // namespace coarse_embed
