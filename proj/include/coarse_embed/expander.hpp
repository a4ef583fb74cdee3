#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "coarse_embed/embedding.hpp"
#include "coarse_embed/metric_space.hpp"

namespace coarse_embed {

/// A simple d-regular graph drawn from the pairing (configuration) model.
struct RegularGraphSample {
  std::size_t vertex_count = 0;
  int degree = 0;
  std::vector<Edge> edges;  // u < v, sorted
  std::uint64_t seed = 0;
  std::size_t attempts = 0;             // pairings drawn until one was simple
  std::optional<double> lambda2;        // filled by analyze()
};

/// Pairing model with rejection until simple. Deterministic in (n, d, seed)
/// on every platform: the generator is mt19937_64 and bounded draws use
/// plain rejection, not a library distribution. Throws InfeasibleDegree
/// when n*d is odd, d >= n, or no simple pairing turns up within the
/// attempt budget.
RegularGraphSample random_regular(std::size_t n, int degree, std::uint64_t seed,
                                  std::size_t max_attempts = 1'000'000);

bool is_connected(std::size_t vertex_count, std::span<const Edge> edges);

struct SpectralEstimate {
  double lambda1 = 0.0;          // largest adjacency eigenvalue
  double lambda2 = 0.0;          // second-largest (by value)
  double nontrivial_abs = 0.0;   // max |lambda_i| over i >= 2
  std::size_t iterations = 0;    // total power-iteration steps
};

/// Power iteration on the adjacency matrix. lambda1 uses A + Delta*I from a
/// positive start; lambda2 iterates the same shifted operator deflated
/// against the top eigenvector (the constant vector for regular graphs);
/// nontrivial_abs iterates A^2 under the same deflation. Each run stops once
/// the residual ||Bv - theta v|| drops below tol. Throws DisconnectedGraph or
/// NotConverged.
SpectralEstimate top_two_eigenvalues(std::size_t vertex_count, std::span<const Edge> edges,
                                     double tol = 1e-10, std::size_t max_iterations = 200'000);

/// Mean of squared displacement over all unordered pairs divided by its mean
/// over edges. Throws DegenerateEmbedding when the edge mean is 0.
double poincare_ratio(std::size_t vertex_count, std::span<const Edge> edges,
                      const std::function<double(PointId, PointId)>& displacement);

double poincare_ratio(std::span<const Edge> edges, std::span<const PointVector> images);

}  // namespace coarse_embed
