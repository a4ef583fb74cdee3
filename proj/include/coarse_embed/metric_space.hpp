#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace coarse_embed {

using PointId = std::uint32_t;

struct Edge {
  PointId u = 0;
  PointId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Absolute tolerance used when validating real-valued distance matrices.
inline constexpr double kMetricTolerance = 1e-9;

/// A finite metric space on points 0..V-1.
///
/// Built either from an unweighted connected graph (shortest-path metric,
/// exact integers stored in binary64) or from a validated distance matrix.
/// Immutable once constructed, so concurrent reads are safe.
class FiniteMetricSpace {
 public:
  /// Throws DisconnectedGraph or InvalidVertexId.
  static FiniteMetricSpace from_edge_list(std::span<const Edge> edges, std::size_t vertex_count);

  /// Throws MetricViolation naming the first violated axiom, or
  /// InvalidArgument for a non-square / empty matrix.
  static FiniteMetricSpace from_distance_matrix(const std::vector<std::vector<double>>& matrix);

  std::size_t size() const noexcept { return size_; }

  double distance(PointId x, PointId y) const { return dist_[index(x, y)]; }

  /// True when every distance is an integer (graph inputs).
  bool is_integral() const noexcept { return integral_; }

  /// Closed ball {y : d(x,y) <= r}, sorted by point id.
  std::vector<PointId> ball(PointId x, double r) const;

  /// Number of points in the closed ball, without materializing it.
  std::size_t ball_size(PointId x, double r) const;

  /// All points ordered by (distance from x, id). The prefix of points at
  /// distance <= r is exactly ball(x, r) in a different order.
  std::span<const PointId> points_by_distance(PointId x) const;

  double diameter() const noexcept { return diameter_; }

  /// Graph edges when the space came from an edge list, otherwise empty.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool contains(PointId x) const noexcept { return x < size_; }

 private:
  FiniteMetricSpace(std::size_t size, std::vector<double> dist, bool integral,
                    std::vector<Edge> edges);

  std::size_t index(PointId x, PointId y) const noexcept {
    return static_cast<std::size_t>(x) * size_ + y;
  }

  std::size_t size_ = 0;
  std::vector<double> dist_;
  std::vector<PointId> order_;  // row x: points sorted by distance from x
  bool integral_ = false;
  double diameter_ = 0.0;
  std::vector<Edge> edges_;
};

/// C(R) = max over x of |ball(x, R)| for integer R = 0..R_max.
class GrowthProfile {
 public:
  explicit GrowthProfile(std::vector<std::size_t> counts) : counts_(std::move(counts)) {}

  std::size_t at(std::size_t radius) const;
  std::size_t max_radius() const noexcept { return counts_.empty() ? 0 : counts_.size() - 1; }
  const std::vector<std::size_t>& counts() const noexcept { return counts_; }

 private:
  std::vector<std::size_t> counts_;
};

GrowthProfile growth_profile(const FiniteMetricSpace& space, std::size_t max_radius);

// Text formats.
//
// Edge list: first line "V E", then E lines "u v" (0-based ids).
// Distance matrix: CSV with V rows of V comma-separated reals.

struct EdgeListInput {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
};

EdgeListInput read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, std::size_t vertex_count, std::span<const Edge> edges);
std::vector<std::vector<double>> read_distance_matrix_csv(std::istream& in);

/// Loads a space from disk: ".csv" files are distance matrices, anything
/// else is parsed as an edge list.
FiniteMetricSpace load_space(const std::string& path);

// Small graph generators used by the CLI, tests and examples.
namespace graphs {
std::vector<Edge> path(std::size_t n);
std::vector<Edge> cycle(std::size_t n);
std::vector<Edge> grid(std::size_t rows, std::size_t cols);
std::vector<Edge> complete(std::size_t n);
}  // namespace graphs

}  // namespace coarse_embed
