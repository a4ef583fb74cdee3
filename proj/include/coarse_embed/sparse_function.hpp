#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "coarse_embed/errors.hpp"

namespace coarse_embed {

/// Finitely supported real function on an ordered key set.
///
/// Entries are kept sorted by key with no stored zeros, so equality of
/// functions is equality of entry lists and binary operations are linear
/// merges.
template <class Key>
class SparseFunction {
 public:
  using Entry = std::pair<Key, double>;

  SparseFunction() = default;

  /// Builds from arbitrary entries. Duplicate keys are an error; zero values
  /// are dropped.
  static SparseFunction from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries.size(); ++i) {
      if (!(entries[i - 1].first < entries[i].first)) {
        throw Error(ErrorCode::InvalidArgument, "sparse function built with a duplicate key");
      }
    }
    std::erase_if(entries, [](const Entry& e) { return e.second == 0.0; });
    SparseFunction f;
    f.entries_ = std::move(entries);
    return f;
  }

  /// Entries already sorted by strictly increasing key and nonzero.
  static SparseFunction from_sorted(std::vector<Entry> entries) {
    SparseFunction f;
    f.entries_ = std::move(entries);
    return f;
  }

  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t support_size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  double at(const Key& key) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                               [](const Entry& e, const Key& k) { return e.first < k; });
    return (it != entries_.end() && !(key < it->first)) ? it->second : 0.0;
  }

  double sup_norm() const noexcept {
    double m = 0.0;
    for (const Entry& e : entries_) m = std::max(m, std::abs(e.second));
    return m;
  }

  SparseFunction operator+(const SparseFunction& other) const {
    return merge(other, [](double a, double b) { return a + b; });
  }

  SparseFunction operator-(const SparseFunction& other) const {
    return merge(other, [](double a, double b) { return a - b; });
  }

  SparseFunction scaled(double c) const {
    if (c == 0.0) return {};
    SparseFunction out = *this;
    for (Entry& e : out.entries_) e.second *= c;
    std::erase_if(out.entries_, [](const Entry& e) { return e.second == 0.0; });
    return out;
  }

  /// Re-indexes the support through an injective key map.
  template <class KeyMap>
  SparseFunction map_keys(KeyMap&& key_map) const {
    std::vector<Entry> moved;
    moved.reserve(entries_.size());
    for (const Entry& e : entries_) moved.emplace_back(key_map(e.first), e.second);
    return from_entries(std::move(moved));
  }

  friend bool operator==(const SparseFunction&, const SparseFunction&) = default;

 private:
  template <class Op>
  SparseFunction merge(const SparseFunction& other, Op op) const {
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    auto push = [&out](const Key& k, double v) {
      if (v != 0.0) out.emplace_back(k, v);
    };
    while (a != entries_.end() && b != other.entries_.end()) {
      if (a->first < b->first) {
        push(a->first, op(a->second, 0.0));
        ++a;
      } else if (b->first < a->first) {
        push(b->first, op(0.0, b->second));
        ++b;
      } else {
        push(a->first, op(a->second, b->second));
        ++a;
        ++b;
      }
    }
    for (; a != entries_.end(); ++a) push(a->first, op(a->second, 0.0));
    for (; b != other.entries_.end(); ++b) push(b->first, op(0.0, b->second));
    return from_sorted(std::move(out));
  }

  std::vector<Entry> entries_;
};

/// ℓ^∞ distance between two sparse functions over the union of supports.
template <class Key>
double sup_distance(const SparseFunction<Key>& f, const SparseFunction<Key>& g) {
  return (f - g).sup_norm();
}

}  // namespace coarse_embed
