#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "coarse_embed/json_io.hpp"
#include "coarse_embed/metric_space.hpp"

namespace coarse_embed::cli {

enum class Command { Gen, Embed, Group, Expander, Verify };
enum class Format { Json, Csv };

/// Everything one CLI invocation needs. Empty output paths (or "-") mean
/// standard output.
struct RunConfig {
  Command command = Command::Verify;
  std::string input;
  std::string output;
  std::string edges_output;     // expander: edge list of the sampled graph
  std::string schedule_output;  // embed: schedule JSON
  std::size_t depth = 0;        // 0 selects the per-command default
  PointId basepoint = 0;
  std::uint64_t seed = 42;
  Format format = Format::Json;
  double tolerance = 1e-9;

  // gen
  std::string kind = "path";  // path | cycle | grid | complete | regular
  std::size_t n = 0;
  std::size_t m = 0;          // grid columns
  int degree = 3;

  // group
  std::string group = "z:1";
  int length_max = -1;        // -1: 2 m_N + 2
  int sample_length = -1;     // -1: m_N + 2
  std::size_t samples = 200;

  // expander
  std::vector<std::size_t> family_sizes;

  // verify
  std::string suite = "all";  // lemma1 | lemma2 | schedule | embed | mixed | group | expander | all
};

/// Runs one command. Returns 0 when every requested certificate passes, 1
/// when one fails, 2 on input or configuration errors; errors are written
/// to `err` as {"error": code, "message": text}.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// The embedding pipeline on one space: profile, certificates, JSON.
Json embed_report(const FiniteMetricSpace& space, std::size_t depth, PointId basepoint,
                  double tolerance, bool& passed);

struct GroupRunOptions {
  std::size_t depth = 0;
  int length_max = -1;
  int sample_length = -1;
  std::size_t samples = 200;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
};

/// The group pipeline: schedule, sampled cocycle and equivariance checks
/// (floating point and exact), the lemma conclusion for n <= N, and the
/// properness curve with its certificates.
Json group_report(const std::string& group_spec, const GroupRunOptions& options, bool& passed);

}  // namespace coarse_embed::cli
