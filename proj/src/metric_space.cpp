#include "coarse_embed/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>

#include "coarse_embed/errors.hpp"

namespace coarse_embed {

namespace {

std::string witness_message(MetricAxiom axiom, PointId x, PointId y, PointId z) {
  std::ostringstream msg;
  msg << "distance matrix violates " << metric_axiom_name(axiom) << " at (" << x << ", " << y;
  if (axiom == MetricAxiom::Triangle) msg << ", " << z;
  msg << ")";
  return msg.str();
}

[[noreturn]] void fail_axiom(MetricAxiom axiom, PointId x, PointId y, PointId z) {
  throw MetricViolation(axiom, {x, y, z}, witness_message(axiom, x, y, z));
}

}  // namespace

FiniteMetricSpace::FiniteMetricSpace(std::size_t size, std::vector<double> dist, bool integral,
                                     std::vector<Edge> edges)
    : size_(size), dist_(std::move(dist)), integral_(integral), edges_(std::move(edges)) {
  order_.resize(size_ * size_);
  for (std::size_t x = 0; x < size_; ++x) {
    auto row = std::span(order_).subspan(x * size_, size_);
    std::iota(row.begin(), row.end(), PointId{0});
    const double* d = dist_.data() + x * size_;
    std::stable_sort(row.begin(), row.end(),
                     [d](PointId a, PointId b) { return d[a] < d[b]; });
    diameter_ = std::max(diameter_, d[row.back()]);
  }
}

FiniteMetricSpace FiniteMetricSpace::from_edge_list(std::span<const Edge> edges,
                                                    std::size_t vertex_count) {
  if (vertex_count == 0) {
    throw Error(ErrorCode::InvalidArgument, "a metric space needs at least one point");
  }
  if (vertex_count > std::numeric_limits<PointId>::max()) {
    throw Error(ErrorCode::InvalidArgument, "vertex count exceeds point id range");
  }
  std::vector<std::vector<PointId>> adjacency(vertex_count);
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw Error(ErrorCode::InvalidVertexId,
                  "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                      ") references a vertex outside 0.." + std::to_string(vertex_count - 1));
    }
    if (e.u == e.v) continue;
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
    normalized.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

  const std::size_t n = vertex_count;
  std::vector<double> dist(n * n);
  std::vector<int> hops(n);
  std::vector<PointId> queue(n);
  for (std::size_t source = 0; source < n; ++source) {
    std::fill(hops.begin(), hops.end(), -1);
    std::size_t head = 0;
    std::size_t tail = 0;
    hops[source] = 0;
    queue[tail++] = static_cast<PointId>(source);
    while (head < tail) {
      const PointId u = queue[head++];
      for (PointId w : adjacency[u]) {
        if (hops[w] < 0) {
          hops[w] = hops[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    if (tail != n) {
      throw Error(ErrorCode::DisconnectedGraph,
                  "graph is disconnected: vertex " + std::to_string(source) + " reaches only " +
                      std::to_string(tail) + " of " + std::to_string(n) + " vertices");
    }
    for (std::size_t y = 0; y < n; ++y) dist[source * n + y] = hops[y];
  }
  return FiniteMetricSpace(n, std::move(dist), true, std::move(normalized));
}

FiniteMetricSpace FiniteMetricSpace::from_distance_matrix(
    const std::vector<std::vector<double>>& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "distance matrix is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) {
      throw Error(ErrorCode::InvalidArgument, "distance matrix is not square (row " +
                                                  std::to_string(i) + " has " +
                                                  std::to_string(matrix[i].size()) + " entries)");
    }
  }
  constexpr double tol = kMetricTolerance;
  bool integral = true;
  std::vector<double> dist(n * n);
  for (PointId x = 0; x < n; ++x) {
    for (PointId y = 0; y < n; ++y) {
      const double d = matrix[x][y];
      if (!std::isfinite(d) || d < 0.0) fail_axiom(MetricAxiom::Nonnegativity, x, y, y);
      if (x == y && d > tol) fail_axiom(MetricAxiom::Identity, x, y, y);
      if (x != y && d <= tol) fail_axiom(MetricAxiom::Identity, x, y, y);
      dist[x * n + y] = x == y ? 0.0 : d;
      integral = integral && d == std::floor(d);
    }
  }
  for (PointId x = 0; x < n; ++x) {
    for (PointId y = x + 1; y < n; ++y) {
      if (std::abs(dist[x * n + y] - dist[y * n + x]) > tol) {
        fail_axiom(MetricAxiom::Symmetry, x, y, y);
      }
    }
  }
  for (PointId x = 0; x < n; ++x) {
    for (PointId z = 0; z < n; ++z) {
      for (PointId y = 0; y < n; ++y) {
        if (dist[x * n + z] > dist[x * n + y] + dist[y * n + z] + tol) {
          fail_axiom(MetricAxiom::Triangle, x, y, z);
        }
      }
    }
  }
  return FiniteMetricSpace(n, std::move(dist), integral, {});
}

std::span<const PointId> FiniteMetricSpace::points_by_distance(PointId x) const {
  return std::span(order_).subspan(static_cast<std::size_t>(x) * size_, size_);
}

std::size_t FiniteMetricSpace::ball_size(PointId x, double r) const {
  const auto row = points_by_distance(x);
  const double* d = dist_.data() + static_cast<std::size_t>(x) * size_;
  const auto end = std::partition_point(row.begin(), row.end(),
                                        [d, r](PointId y) { return d[y] <= r; });
  return static_cast<std::size_t>(end - row.begin());
}

std::vector<PointId> FiniteMetricSpace::ball(PointId x, double r) const {
  const auto row = points_by_distance(x);
  std::vector<PointId> out(row.begin(), row.begin() + ball_size(x, r));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t GrowthProfile::at(std::size_t radius) const {
  if (radius >= counts_.size()) {
    throw Error(ErrorCode::InvalidArgument, "growth profile queried at radius " +
                                                std::to_string(radius) + " beyond its table");
  }
  return counts_[radius];
}

GrowthProfile growth_profile(const FiniteMetricSpace& space, std::size_t max_radius) {
  std::vector<std::size_t> counts(max_radius + 1, 0);
  for (PointId x = 0; x < space.size(); ++x) {
    for (std::size_t r = 0; r <= max_radius; ++r) {
      counts[r] = std::max(counts[r], space.ball_size(x, static_cast<double>(r)));
    }
  }
  return GrowthProfile(std::move(counts));
}

EdgeListInput read_edge_list(std::istream& in) {
  EdgeListInput input;
  long long vertices = -1;
  long long edge_count = -1;
  if (!(in >> vertices >> edge_count) || vertices < 0 || edge_count < 0) {
    throw Error(ErrorCode::ParseError, "edge list header must be 'V E' with nonnegative integers");
  }
  input.vertex_count = static_cast<std::size_t>(vertices);
  input.edges.reserve(static_cast<std::size_t>(edge_count));
  for (long long i = 0; i < edge_count; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v)) {
      throw Error(ErrorCode::ParseError, "edge list truncated: expected " +
                                             std::to_string(edge_count) + " edges, read " +
                                             std::to_string(i));
    }
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw Error(ErrorCode::InvalidVertexId, "edge " + std::to_string(i) + " (" +
                                                  std::to_string(u) + ", " + std::to_string(v) +
                                                  ") out of range");
    }
    input.edges.push_back({static_cast<PointId>(u), static_cast<PointId>(v)});
  }
  return input;
}

void write_edge_list(std::ostream& out, std::size_t vertex_count, std::span<const Edge> edges) {
  out << vertex_count << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
}

std::vector<std::vector<double>> read_distance_matrix_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<double> row;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "row " + std::to_string(rows.size()) +
                                               ": cannot parse '" + cell + "' as a real");
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

FiniteMetricSpace load_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open input file '" + path + "'");
  const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  if (csv) return FiniteMetricSpace::from_distance_matrix(read_distance_matrix_csv(in));
  const EdgeListInput input = read_edge_list(in);
  return FiniteMetricSpace::from_edge_list(input.edges, input.vertex_count);
}

namespace graphs {

std::vector<Edge> path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.push_back({static_cast<PointId>(i), static_cast<PointId>(i + 1)});
  }
  return edges;
}

std::vector<Edge> cycle(std::size_t n) {
  std::vector<Edge> edges = path(n);
  if (n >= 3) edges.push_back({0, static_cast<PointId>(n - 1)});
  return edges;
}

std::vector<Edge> grid(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<PointId>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return edges;
}

std::vector<Edge> complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.push_back({static_cast<PointId>(i), static_cast<PointId>(j)});
    }
  }
  return edges;
}

}  // namespace graphs

}  // namespace coarse_embed
