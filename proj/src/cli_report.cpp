#include "coarse_embed/cli_report.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <utility>

#include "coarse_embed/cocycle.hpp"
#include "coarse_embed/embedding.hpp"
#include "coarse_embed/errors.hpp"
#include "coarse_embed/exact.hpp"
#include "coarse_embed/expander.hpp"
#include "coarse_embed/exponent_schedule.hpp"
#include "coarse_embed/group.hpp"
#include "coarse_embed/mixed_norm.hpp"
#include "coarse_embed/random.hpp"
#include "coarse_embed/tent_partition.hpp"

namespace coarse_embed::cli {

namespace {

namespace fs = std::filesystem;

constexpr std::size_t kGroupDefaultDepth = 2;
constexpr std::size_t kCorpusTentScales = 10;
constexpr std::size_t kExpanderMinDepth = 9;  // lower table reaches R = 3

void require_readable(const std::string& path) {
  if (path.empty()) throw Error(ErrorCode::InvalidArgument, "--input is required");
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw Error(ErrorCode::InvalidArgument, "input file not found: " + path);
  }
}

void require_writable(const std::string& path) {
  if (path.empty() || path == "-") return;
  const fs::path parent = fs::path(path).parent_path();
  std::error_code ec;
  if (!parent.empty() && !fs::is_directory(parent, ec)) {
    throw Error(ErrorCode::InvalidArgument, "output directory does not exist: " + parent.string());
  }
}

void validate(const RunConfig& config) {
  if (!(config.tolerance >= 0.0) || !std::isfinite(config.tolerance)) {
    throw Error(ErrorCode::InvalidArgument, "tolerance must be a finite nonnegative number");
  }
  if (config.command == Command::Embed) require_readable(config.input);
  if (config.command == Command::Verify && !config.input.empty()) require_readable(config.input);
  if (config.format == Format::Csv && config.command != Command::Embed) {
    throw Error(ErrorCode::InvalidArgument, "--format csv is only available for embed");
  }
  require_writable(config.output);
  require_writable(config.edges_output);
  require_writable(config.schedule_output);
}

// Writes through a file when a path is given, otherwise to `fallback`.
void emit(const std::string& path, std::ostream& fallback, const std::string& text) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open for writing: " + path);
  file << text;
  if (!file) throw Error(ErrorCode::InvalidArgument, "write failed: " + path);
}

Json exponents_json(const ExponentSchedule& schedule) {
  return to_json(schedule).at("exponents");
}

double max_finite_exponent(const ExponentSchedule& schedule) {
  double best = 1.0;
  for (const Exponent& p : schedule.exponents()) {
    if (!p.is_infinite()) best = std::max(best, p.value());
  }
  return best;
}

// Product of `length` uniformly drawn generators (cancellation may shorten it).
Element random_word(const GroupModel& group, const std::vector<Element>& gens,
                    std::mt19937_64& rng, int max_length) {
  const auto length = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_length) + 1));
  Element e = group.identity();
  for (int i = 0; i < length; ++i) e = group.multiply(e, gens[uniform_below(rng, gens.size())]);
  return e;
}

struct EmbedRun {
  DistortionProfile profile;
  CertificationReport report;
  std::shared_ptr<const ExponentSchedule> schedule;
};

EmbedRun run_embedding(const FiniteMetricSpace& space, std::size_t depth, PointId basepoint,
                       double tolerance) {
  const Embedding embedding = Embedding::with_default_schedule(space, depth, basepoint);
  EmbedRun run;
  run.profile = distortion_profile(embedding);
  run.report = certify(run.profile, tolerance);
  run.schedule = embedding.schedule();
  return run;
}

FiniteMetricSpace space_from_edges(const std::vector<Edge>& edges, std::size_t n) {
  return FiniteMetricSpace::from_edge_list(edges, n);
}

std::vector<Edge> generate_edges(const RunConfig& config, std::size_t& vertices) {
  const std::size_t n = config.n;
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "gen needs --n >= 1");
  if (config.kind == "path") {
    vertices = n;
    return graphs::path(n);
  }
  if (config.kind == "cycle") {
    vertices = n;
    return graphs::cycle(n);
  }
  if (config.kind == "complete") {
    vertices = n;
    return graphs::complete(n);
  }
  if (config.kind == "grid") {
    const std::size_t cols = config.m == 0 ? n : config.m;
    vertices = n * cols;
    return graphs::grid(n, cols);
  }
  if (config.kind == "regular") {
    vertices = n;
    return random_regular(n, config.degree, config.seed).edges;
  }
  throw Error(ErrorCode::InvalidArgument,
              "unknown --kind '" + config.kind + "' (path, cycle, grid, complete, regular)");
}

int run_gen(const RunConfig& config, std::ostream& out) {
  std::size_t vertices = 0;
  const std::vector<Edge> edges = generate_edges(config, vertices);
  std::ostringstream text;
  write_edge_list(text, vertices, edges);
  emit(config.output, out, text.str());
  return 0;
}

int run_embed(const RunConfig& config, std::ostream& out) {
  const FiniteMetricSpace space = load_space(config.input);
  if (!space.contains(config.basepoint)) {
    throw Error(ErrorCode::InvalidVertexId, "basepoint outside the space");
  }
  const EmbedRun run = run_embedding(space, config.depth, config.basepoint, config.tolerance);
  if (config.format == Format::Csv) {
    std::ostringstream text;
    write_samples_csv(text, run.profile);
    emit(config.output, out, text.str());
  } else {
    emit(config.output, out, dump_pinned(embed_report_json(run.profile, run.report)));
  }
  if (!config.schedule_output.empty()) {
    emit(config.schedule_output, out, dump_pinned(to_json(*run.schedule)));
  }
  return run.report.passed() ? 0 : 1;
}

int run_group(const RunConfig& config, std::ostream& out) {
  GroupRunOptions options;
  options.depth = config.depth;
  options.length_max = config.length_max;
  options.sample_length = config.sample_length;
  options.samples = config.samples;
  options.seed = config.seed;
  options.tolerance = config.tolerance;
  bool passed = false;
  const Json report = group_report(config.group, options, passed);
  emit(config.output, out, dump_pinned(report));
  return passed ? 0 : 1;
}

Json expander_entry(std::size_t n, int degree, std::uint64_t seed, std::size_t depth,
                    double tolerance, bool& passed, std::vector<Edge>* edges_out = nullptr) {
  const RegularGraphSample sample = random_regular(n, degree, seed);
  if (edges_out) *edges_out = sample.edges;
  const bool connected = is_connected(n, sample.edges);
  Json entry{{"n", n}, {"d", degree}, {"seed", seed}, {"attempts", sample.attempts},
             {"edges", sample.edges.size()}, {"connected", connected}};
  if (!connected) {
    passed = false;
    return entry;
  }
  const SpectralEstimate spectrum = top_two_eigenvalues(n, sample.edges);
  const FiniteMetricSpace space = space_from_edges(sample.edges, n);
  const std::size_t N = depth == 0 ? std::max(default_depth(space), kExpanderMinDepth) : depth;
  const Embedding embedding = Embedding::with_default_schedule(space, N);
  const DistortionProfile profile = distortion_profile(embedding);
  const CertificationReport report = certify(profile, tolerance);
  const double ratio = poincare_ratio(n, sample.edges, [&embedding](PointId x, PointId y) {
    return embedding.block_distance(1, x, y);
  });
  const double ratio_full = poincare_ratio(n, sample.edges, [&embedding](PointId x, PointId y) {
    return embedding.pair_distance(x, y);
  });
  const bool gap = spectrum.lambda2 < static_cast<double>(degree);
  passed = passed && gap && report.passed();
  entry["lambda1"] = spectrum.lambda1;
  entry["lambda2"] = spectrum.lambda2;
  entry["nontrivial_abs"] = spectrum.nontrivial_abs;
  entry["spectral_gap"] = static_cast<double>(degree) - spectrum.lambda2;
  entry["diameter"] = space.diameter();
  entry["depth"] = N;
  entry["max_exponent"] = max_finite_exponent(*embedding.schedule());
  entry["poincare_first_block"] = ratio;
  entry["poincare_full"] = ratio_full;
  entry["report"] = embed_report_json(profile, report);
  entry["certified"] = report.passed();
  return entry;
}

int run_expander(const RunConfig& config, std::ostream& out) {
  const std::size_t n = config.n == 0 ? 100 : config.n;
  bool passed = true;
  std::vector<Edge> edges;
  Json report = expander_entry(n, config.degree, config.seed, config.depth, config.tolerance,
                               passed, &edges);
  if (!config.family_sizes.empty()) {
    Json family = Json::array();
    for (std::size_t size : config.family_sizes) {
      Json entry = expander_entry(size, config.degree, config.seed, config.depth,
                                  config.tolerance, passed);
      entry.erase("report");
      family.push_back(std::move(entry));
    }
    report["family"] = std::move(family);
  }
  report["passed"] = passed;
  if (!config.edges_output.empty()) {
    std::ostringstream text;
    write_edge_list(text, n, edges);
    emit(config.edges_output, out, text.str());
  }
  emit(config.output, out, dump_pinned(report));
  return passed ? 0 : 1;
}

// ---- verify ---------------------------------------------------------------

struct NamedSpace {
  std::string name;
  FiniteMetricSpace space;
  std::vector<Edge> edges;
};

std::vector<NamedSpace> verify_corpus(const RunConfig& config) {
  std::vector<NamedSpace> corpus;
  if (!config.input.empty()) {
    FiniteMetricSpace space = load_space(config.input);
    std::vector<Edge> edges = space.edges();
    corpus.push_back({fs::path(config.input).filename().string(), std::move(space), std::move(edges)});
    return corpus;
  }
  auto add = [&corpus](std::string name, std::vector<Edge> edges, std::size_t n) {
    FiniteMetricSpace space = FiniteMetricSpace::from_edge_list(edges, n);
    corpus.push_back({std::move(name), std::move(space), std::move(edges)});
  };
  add("P_64", graphs::path(64), 64);
  add("C_64", graphs::cycle(64), 64);
  add("grid_8x8", graphs::grid(8, 8), 64);
  add("regular_100_3", random_regular(100, 3, config.seed).edges, 100);
  return corpus;
}

class Checks {
 public:
  void add(std::string name, bool ok, Json detail) {
    passed_ = passed_ && ok;
    checks_.push_back({{"name", std::move(name)}, {"ok", ok}, {"detail", std::move(detail)}});
  }
  bool passed() const noexcept { return passed_; }
  Json take() { return std::move(checks_); }

 private:
  Json checks_ = Json::array();
  bool passed_ = true;
};

void verify_lemma1(const RunConfig& config, Checks& checks) {
  std::mt19937_64 rng(config.seed);
  constexpr int kTrials = 1000;
  int minimal = 0;
  int feasible = 0;
  std::int64_t largest_p = 0;
  for (int i = 0; i < kTrials; ++i) {
    const double alpha = 10.0 * (1.0 - uniform_unit(rng));        // (0, 10]
    const double beta = 1.0 + (1e4 - 1.0) * uniform_unit(rng);    // [1, 10^4)
    const double eps = 1e-3 + (2.0 - 1e-3) * uniform_unit(rng);   // [1e-3, 2)
    const std::int64_t p = select_exponent(alpha, beta, eps);
    largest_p = std::max(largest_p, p);
    if (exponent_feasible(alpha, beta, eps, p)) ++feasible;
    if (p == 1 || !exponent_feasible(alpha, beta, eps, p - 1)) ++minimal;
  }
  checks.add("lemma1/feasible", feasible == kTrials,
             {{"trials", kTrials}, {"feasible", feasible}, {"largest_p", largest_p}});
  checks.add("lemma1/minimal", minimal == kTrials, {{"trials", kTrials}, {"minimal", minimal}});

  int sandwiched = 0;
  double worst = 0.0;  // max relative violation
  for (int i = 0; i < kTrials; ++i) {
    const std::size_t k = 1 + uniform_below(rng, 64);
    std::vector<double> values(k);
    const double scale = std::pow(10.0, -3.0 + 6.0 * uniform_unit(rng));
    for (double& v : values) v = scale * (2.0 * uniform_unit(rng) - 1.0);
    const bool infinite = uniform_below(rng, 10) == 0;
    const Exponent p = infinite ? Exponent::infinity()
                                : Exponent(static_cast<double>(1 + uniform_below(rng, 40)));
    double sup = 0.0;
    for (double v : values) sup = std::max(sup, std::abs(v));
    const double norm = lp_norm(values, p);
    const double beta = static_cast<double>(k);
    const double upper = lemma1_bound(sup, beta, p);  // sup * beta^(1/p)
    const double slack_low = (sup - norm) / std::max(sup, 1e-300);
    const double slack_high = (norm - upper) / std::max(upper, 1e-300);
    worst = std::max({worst, slack_low, slack_high});
    if (slack_low <= 1e-12 && slack_high <= 1e-12) ++sandwiched;
  }
  checks.add("lemma1/sandwich", sandwiched == kTrials,
             {{"trials", kTrials}, {"held", sandwiched}, {"worst_relative_violation", worst}});
}

void verify_lemma2(const RunConfig& config, const std::vector<NamedSpace>& corpus,
                   Checks& checks) {
  for (const NamedSpace& entry : corpus) {
    const std::size_t scales =
        config.depth != 0 ? config.depth
                          : (config.input.empty() ? kCorpusTentScales : default_depth(entry.space));
    bool ok = true;
    bool exact_ok = true;
    std::size_t pairs = 0;
    double slack = std::numeric_limits<double>::infinity();
    for (std::size_t n = 1; n <= scales; ++n) {
      const TentConditionReport report = check_tent_conditions(entry.space, n, config.tolerance);
      ok = ok && report.ok();
      pairs += report.pairs_checked;
      slack = std::min(slack, report.worst_lipschitz_slack);
      if (entry.space.is_integral()) exact_ok = exact_ok && exact::check_tent_conditions(entry.space, n).ok();
    }
    Json detail{{"points", entry.space.size()}, {"scales", scales}, {"pairs", pairs},
                {"worst_lipschitz_slack", slack}};
    detail["exact"] = entry.space.is_integral() ? Json(exact_ok) : Json("skipped");
    checks.add("lemma2/" + entry.name, ok && exact_ok, std::move(detail));
  }
}

void verify_mixed(const RunConfig& config, Checks& checks) {
  std::mt19937_64 rng(config.seed);
  constexpr int kTrials = 300;
  constexpr std::size_t kDepth = 5;
  const auto schedule = std::make_shared<const ExponentSchedule>(schedule_from_parameters(
      {{1.0, 2.0, 1.0}, {1.0, 6.0, 0.5}, {1.0, 20.0, 0.25}, {1.0, 60.0, 0.2}, {1.0, 200.0, 0.1}}));
  auto random_vector = [&rng, &schedule] {
    std::vector<PointFunction> blocks;
    for (std::size_t n = 0; n < kDepth; ++n) {
      std::vector<std::pair<PointId, double>> entries;
      for (PointId x = 0; x < 12; ++x) {
        if (uniform_below(rng, 3) == 0) entries.emplace_back(x, 2.0 * uniform_unit(rng) - 1.0);
      }
      blocks.push_back(PointFunction::from_sorted(std::move(entries)));
    }
    return PointVector(schedule, std::move(blocks));
  };
  int triangle = 0;
  int homogeneous = 0;
  int monotone = 0;
  for (int i = 0; i < kTrials; ++i) {
    const PointVector v = random_vector();
    const PointVector w = random_vector();
    if ((v + w).norm() <= v.norm() + w.norm() + 1e-12) ++triangle;
    const double c = 4.0 * uniform_unit(rng) - 2.0;
    if (std::abs(v.scaled(c).norm() - std::abs(c) * v.norm()) <= 1e-12 * (1.0 + v.norm())) {
      ++homogeneous;
    }
    const PointFunction& block = v.block(1 + uniform_below(rng, kDepth));
    const auto p = static_cast<double>(1 + uniform_below(rng, 20));
    if (block_norm(block, Exponent(p + 1.0)) <= block_norm(block, Exponent(p)) * (1.0 + 1e-12) &&
        block_norm(block, Exponent::infinity()) <= block_norm(block, Exponent(p + 1.0)) * (1.0 + 1e-12)) {
      ++monotone;
    }
  }
  checks.add("mixed/triangle", triangle == kTrials, {{"trials", kTrials}, {"held", triangle}});
  checks.add("mixed/homogeneity", homogeneous == kTrials, {{"trials", kTrials}, {"held", homogeneous}});
  checks.add("mixed/monotone_in_p", monotone == kTrials, {{"trials", kTrials}, {"held", monotone}});
}

void verify_embedding(const RunConfig& config, const std::vector<NamedSpace>& corpus,
                      bool schedule_suite, bool embed_suite, Checks& checks) {
  for (const NamedSpace& entry : corpus) {
    const EmbedRun run = run_embedding(entry.space, config.depth, config.basepoint, config.tolerance);
    if (schedule_suite) {
      checks.add("schedule/" + entry.name, run.report.schedule,
                 {{"depth", run.profile.depth}, {"min_slack", run.profile.min_schedule_slack},
                  {"max_exponent", max_finite_exponent(*run.schedule)}});
    }
    if (embed_suite) {
      bool lower = true;
      for (const LowerBoundCertificate& c : run.report.lower) lower = lower && c.ok;
      checks.add("embed/" + entry.name, run.report.passed(),
                 {{"depth", run.profile.depth},
                  {"upper", run.report.upper},
                  {"upper_full", run.report.upper_full},
                  {"lower", lower},
                  {"lower_radii", run.report.lower.size()},
                  {"injective", run.report.injective}});
    }
  }
}

void verify_group(const RunConfig& config, Checks& checks) {
  const std::pair<const char*, std::size_t> cases[] = {{"z:1", 4}, {"free:2", 2}, {"sym:4", 2}};
  for (const auto& [spec, depth] : cases) {
    GroupRunOptions options;
    options.depth = config.depth != 0 ? config.depth : depth;
    options.samples = config.samples;
    options.seed = config.seed;
    options.tolerance = config.tolerance;
    bool passed = false;
    const Json report = group_report(spec, options, passed);
    checks.add(std::string("group/") + spec, passed,
               {{"depth", report.at("depth")},
                {"certificates", report.at("certificates")},
                {"cocycle_residual_max", report.at("cocycle_residual_max")}});
  }
}

void verify_expander(const RunConfig& config, Checks& checks) {
  bool passed = true;
  Json entry = expander_entry(100, 3, config.seed, config.depth, config.tolerance, passed);
  const bool gap = entry.contains("lambda2") && entry.at("lambda2").get<double>() < 2.9;
  entry.erase("report");
  checks.add("expander/regular_100_3", passed && gap, std::move(entry));
}

int run_verify(const RunConfig& config, std::ostream& out) {
  const std::string& suite = config.suite;
  static const char* const kSuites[] = {"lemma1", "lemma2", "schedule", "embed",
                                        "mixed",  "group",  "expander", "all"};
  if (std::find(std::begin(kSuites), std::end(kSuites), suite) == std::end(kSuites)) {
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + suite + "'");
  }
  const bool all = suite == "all";
  Checks checks;
  std::optional<std::vector<NamedSpace>> corpus;
  auto spaces = [&]() -> const std::vector<NamedSpace>& {
    if (!corpus) corpus = verify_corpus(config);
    return *corpus;
  };
  if (all || suite == "lemma1") verify_lemma1(config, checks);
  if (all || suite == "lemma2") verify_lemma2(config, spaces(), checks);
  if (all || suite == "mixed") verify_mixed(config, checks);
  if (all || suite == "schedule" || suite == "embed") {
    verify_embedding(config, spaces(), all || suite == "schedule", all || suite == "embed", checks);
  }
  if (all || suite == "group") verify_group(config, checks);
  if (all || suite == "expander") verify_expander(config, checks);
  const bool passed = checks.passed();
  const Json report{{"suite", suite}, {"checks", checks.take()}, {"passed", passed}};
  emit(config.output, out, dump_pinned(report));
  return passed ? 0 : 1;
}

}  // namespace

Json embed_report(const FiniteMetricSpace& space, std::size_t depth, PointId basepoint,
                  double tolerance, bool& passed) {
  const EmbedRun run = run_embedding(space, depth, basepoint, tolerance);
  passed = run.report.passed();
  return embed_report_json(run.profile, run.report);
}

Json group_report(const std::string& group_spec, const GroupRunOptions& options, bool& passed) {
  const std::unique_ptr<GroupModel> group = parse_group_spec(group_spec);
  const std::size_t depth = options.depth == 0 ? kGroupDefaultDepth : options.depth;
  const GroupCocycle cocycle(*group, depth);
  const int m_top = cocycle.radius(depth);
  const int length_max = options.length_max >= 0 ? options.length_max : 2 * m_top + 1;
  const int sample_length = options.sample_length >= 0 ? options.sample_length : m_top + 2;
  const double tol = options.tolerance;
  const auto& schedule = *cocycle.schedule();

  std::vector<double> inverse_fourth(depth + 1, 0.0);
  for (std::size_t n = 1; n <= depth; ++n) {
    inverse_fourth[n] = inverse_fourth[n - 1] + 1.0 / std::pow(static_cast<double>(n), 4);
  }

  const std::vector<Element> gens = group->generators();
  std::mt19937_64 rng(options.seed);
  double residual_max = 0.0;
  double equivariance_max = 0.0;
  double action_max = 0.0;
  bool exact_ok = true;
  bool block_bound_ok = true;
  bool summable_ok = true;
  for (std::size_t i = 0; i < options.samples; ++i) {
    const Element s = random_word(*group, gens, rng, sample_length);
    const Element t = random_word(*group, gens, rng, sample_length);
    residual_max = std::max(residual_max, cocycle.cocycle_residual(s, t));
    exact_ok = exact_ok && exact::cocycle_identity_holds(cocycle, s, t);

    const CocycleVector phi_s = cocycle.phi(s);
    const CocycleVector phi_t = cocycle.phi(t);
    const double gap = (phi_s - phi_t).norm();
    const double left = cocycle.phi(group->multiply(group->inverse(t), s)).norm();
    const double right = cocycle.phi(group->multiply(group->inverse(s), t)).norm();
    equivariance_max = std::max({equivariance_max, std::abs(gap - left), std::abs(gap - right)});

    // alpha_{st}(v) = alpha_s(alpha_t(v)) on v = c Phi(u). u stays short so
    // the translated supports fit the free-group word limit.
    const Element u = random_word(*group, gens, rng, 1);
    const CocycleVector v = cocycle.phi(u).scaled(4.0 * uniform_unit(rng) - 2.0);
    const CocycleVector composed = cocycle.affine_action(s, cocycle.affine_action(t, v));
    const CocycleVector direct = cocycle.affine_action(group->multiply(s, t), v);
    action_max = std::max(action_max, (composed - direct).norm());

    const auto length = static_cast<double>(cocycle.word_length(s));
    double partial = 0.0;
    for (std::size_t n = 1; n <= depth; ++n) {
      const double b = phi_s.block_norm_at(n);
      partial += b * b;
      if (b > 2.0 * length / cocycle.radius(n) + tol) block_bound_ok = false;
      if (partial > 4.0 * length * length * inverse_fourth[n] + tol) summable_ok = false;
    }
  }

  Json lemma = Json::array();
  bool lemma_ok = true;
  for (std::size_t n = 1; n <= depth; ++n) {
    const LemmaConclusionReport r = check_lemma_conclusion(*group, n, cocycle.radius(n));
    lemma_ok = lemma_ok && r.ok;
    lemma.push_back({{"n", r.n}, {"radius", r.radius}, {"support", r.support_size},
                     {"shifts", r.elements_checked}, {"max_displacement", r.max_displacement},
                     {"ok", r.ok}});
  }

  const PropernessReport properness = properness_curve(cocycle, length_max, kDefaultBallCap, tol);
  bool injective = true;
  Json curve = Json::array();
  for (const PropernessPoint& point : properness.curve) {
    if (point.length > 0 && !(point.min_norm > 0.0)) injective = false;
    curve.push_back({{"L", point.length}, {"min_norm", point.min_norm},
                     {"certified_lower", point.certified_lower}, {"elements", point.elements}});
  }
  Json lower = Json::array();
  for (const PropernessCertificate& c : properness.certificates) {
    lower.push_back({{"m", c.m}, {"threshold", c.threshold}, {"elements", c.elements},
                     {"min_norm", c.min_norm}, {"ok", c.ok}});
  }

  const bool cocycle_ok = residual_max <= tol && exact_ok;
  const bool equivariance_ok = equivariance_max <= tol && action_max <= tol;
  passed = block_bound_ok && summable_ok && properness.passed() && injective && cocycle_ok &&
           equivariance_ok && lemma_ok;

  Json radii = Json::array();
  for (int m : cocycle.radii()) radii.push_back(m);
  Json certificates{{"schedule", block_bound_ok}, {"upper", summable_ok},
                    {"lower", std::move(lower)},  {"injective", injective},
                    {"cocycle", cocycle_ok},      {"cocycle_exact", exact_ok},
                    {"equivariance", equivariance_ok}, {"lemma", lemma_ok}};
  return Json{{"group", group->name()},
              {"depth", depth},
              {"radii", std::move(radii)},
              {"ball_size", cocycle.ball().size()},
              {"exponents", exponents_json(schedule)},
              {"samples", options.samples},
              {"sample_length", sample_length},
              {"length_max", length_max},
              {"certificates", std::move(certificates)},
              {"cocycle_residual_max", residual_max},
              {"equivariance_residual_max", equivariance_max},
              {"action_residual_max", action_max},
              {"lemma", std::move(lemma)},
              {"properness", std::move(curve)},
              {"passed", passed}};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    switch (config.command) {
      case Command::Gen:
        return run_gen(config, out);
      case Command::Embed:
        return run_embed(config, out);
      case Command::Group:
        return run_group(config, out);
      case Command::Expander:
        return run_expander(config, out);
      case Command::Verify:
        return run_verify(config, out);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown command");
  } catch (const Error& e) {
    err << dump_pinned(Json{{"error", e.code_name()}, {"message", e.what()}});
    return 2;
  } catch (const std::exception& e) {
    err << dump_pinned(Json{{"error", "InternalError"}, {"message", e.what()}});
    return 2;
  }
}

}  // namespace coarse_embed::cli
