#include "coarse_embed/expander.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "coarse_embed/errors.hpp"
#include "coarse_embed/random.hpp"

namespace coarse_embed {

namespace {

using Adjacency = std::vector<std::vector<PointId>>;

Adjacency adjacency_of(std::size_t n, std::span<const Edge> edges) {
  Adjacency adj(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw Error(ErrorCode::InvalidVertexId, "edge outside the graph");
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

void multiply(const Adjacency& adj, std::span<const double> v, std::span<double> out) {
  for (std::size_t i = 0; i < adj.size(); ++i) {
    double sum = 0.0;
    for (PointId j : adj[i]) sum += v[j];
    out[i] = sum;
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void normalize(std::span<double> v) {
  const double norm = std::sqrt(dot(v, v));
  for (double& x : v) x /= norm;
}

void deflate(std::span<double> v, std::span<const double> unit) {
  const double c = dot(v, unit);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * unit[i];
}

struct PowerResult {
  double value = 0.0;
  std::vector<double> vector;
  std::size_t iterations = 0;
};

// Dominant eigenpair of a symmetric PSD operator restricted to the
// orthogonal complement of `against` (if given).
template <class Apply>
PowerResult power_iteration(std::size_t n, Apply apply, std::vector<double> start,
                            const std::vector<double>* against, double tol,
                            std::size_t max_iterations, const char* what) {
  PowerResult result;
  std::vector<double> v = std::move(start);
  std::vector<double> w(n);
  if (against) deflate(v, *against);
  normalize(v);
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    apply(v, w);
    if (against) deflate(w, *against);
    const double theta = dot(v, w);
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual += (w[i] - theta * v[i]) * (w[i] - theta * v[i]);
    residual = std::sqrt(residual);
    result.value = theta;
    result.iterations = it;
    if (residual <= tol) {
      result.vector = v;
      return result;
    }
    const double norm = std::sqrt(dot(w, w));
    if (norm == 0.0) {
      // v is in the kernel of the (PSD) operator: the top value is 0.
      result.value = 0.0;
      result.vector = v;
      return result;
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
  }
  throw Error(ErrorCode::NotConverged, std::string(what) + " did not converge within " +
                                           std::to_string(max_iterations) + " iterations");
}

}  // namespace

RegularGraphSample random_regular(std::size_t n, int degree, std::uint64_t seed,
                                  std::size_t max_attempts) {
  if (degree < 0 || n == 0 || static_cast<std::size_t>(degree) >= n ||
      (n * static_cast<std::size_t>(degree)) % 2 != 0) {
    throw Error(ErrorCode::InfeasibleDegree,
                "no simple " + std::to_string(degree) + "-regular graph on " + std::to_string(n) +
                    " vertices (need n*d even and d < n)");
  }
  RegularGraphSample sample;
  sample.vertex_count = n;
  sample.degree = degree;
  sample.seed = seed;
  std::mt19937_64 rng(seed);
  const std::size_t stubs = n * static_cast<std::size_t>(degree);
  std::vector<PointId> points(stubs);
  std::vector<Edge> edges;
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    for (std::size_t i = 0; i < stubs; ++i) points[i] = static_cast<PointId>(i / static_cast<std::size_t>(degree));
    for (std::size_t i = stubs; i > 1; --i) {
      std::swap(points[i - 1], points[uniform_below(rng, i)]);
    }
    edges.clear();
    bool simple = true;
    for (std::size_t i = 0; i < stubs && simple; i += 2) {
      if (points[i] == points[i + 1]) simple = false;
      edges.push_back({std::min(points[i], points[i + 1]), std::max(points[i], points[i + 1])});
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    sample.edges = std::move(edges);
    sample.attempts = attempt;
    return sample;
  }
  throw Error(ErrorCode::InfeasibleDegree, "no simple pairing found within " +
                                               std::to_string(max_attempts) + " attempts");
}

bool is_connected(std::size_t vertex_count, std::span<const Edge> edges) {
  if (vertex_count == 0) return true;
  const Adjacency adj = adjacency_of(vertex_count, edges);
  std::vector<char> seen(vertex_count, 0);
  std::vector<PointId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const PointId u = stack.back();
    stack.pop_back();
    for (PointId w : adj[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertex_count;
}

SpectralEstimate top_two_eigenvalues(std::size_t vertex_count, std::span<const Edge> edges,
                                     double tol, std::size_t max_iterations) {
  if (!is_connected(vertex_count, edges)) {
    throw Error(ErrorCode::DisconnectedGraph, "spectral analysis needs a connected graph");
  }
  const std::size_t n = vertex_count;
  SpectralEstimate estimate;
  if (n == 1) return estimate;
  const Adjacency adj = adjacency_of(n, edges);
  std::size_t max_degree = 0;
  std::size_t min_degree = n;
  for (const auto& row : adj) {
    max_degree = std::max(max_degree, row.size());
    min_degree = std::min(min_degree, row.size());
  }
  const auto shift = static_cast<double>(max_degree);

  // A + Delta*I has spectrum in [0, 2 Delta].
  auto shifted = [&adj, shift](std::span<const double> v, std::span<double> out) {
    multiply(adj, v, out);
    for (std::size_t i = 0; i < v.size(); ++i) out[i] += shift * v[i];
  };
  std::vector<double> scratch(n);
  auto squared = [&adj, &scratch](std::span<const double> v, std::span<double> out) {
    multiply(adj, v, scratch);
    multiply(adj, scratch, out);
  };

  // Fixed pseudo-random start so runs are reproducible.
  std::mt19937_64 rng(0x5eed5eedULL);
  auto random_start = [&rng, n] {
    std::vector<double> v(n);
    for (double& x : v) x = uniform_unit(rng) + 0.5;
    return v;
  };

  std::vector<double> top;
  if (min_degree == max_degree) {
    estimate.lambda1 = shift;
    top.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
  } else {
    PowerResult first = power_iteration(n, shifted, random_start(), nullptr, tol, max_iterations,
                                        "top eigenvalue");
    estimate.lambda1 = first.value - shift;
    estimate.iterations += first.iterations;
    top = std::move(first.vector);
  }

  const PowerResult second =
      power_iteration(n, shifted, random_start(), &top, tol, max_iterations, "second eigenvalue");
  estimate.lambda2 = second.value - shift;
  estimate.iterations += second.iterations;

  const PowerResult magnitude = power_iteration(n, squared, random_start(), &top, tol,
                                                max_iterations, "largest nontrivial magnitude");
  estimate.nontrivial_abs = std::sqrt(std::max(0.0, magnitude.value));
  estimate.iterations += magnitude.iterations;
  return estimate;
}

double poincare_ratio(std::size_t vertex_count, std::span<const Edge> edges,
                      const std::function<double(PointId, PointId)>& displacement) {
  double edge_sum = 0.0;
  for (const Edge& e : edges) {
    const double d = displacement(e.u, e.v);
    edge_sum += d * d;
  }
  if (edges.empty() || edge_sum == 0.0) {
    throw Error(ErrorCode::DegenerateEmbedding, "map does not move any edge");
  }
  double pair_sum = 0.0;
  std::size_t pairs = 0;
  for (PointId x = 0; x < vertex_count; ++x) {
    for (PointId y = x + 1; y < vertex_count; ++y) {
      const double d = displacement(x, y);
      pair_sum += d * d;
      ++pairs;
    }
  }
  return (pair_sum / static_cast<double>(pairs)) /
         (edge_sum / static_cast<double>(edges.size()));
}

double poincare_ratio(std::span<const Edge> edges, std::span<const PointVector> images) {
  return poincare_ratio(images.size(), edges, [images](PointId x, PointId y) {
    return (images[x] - images[y]).norm();
  });
}

}  // namespace coarse_embed
