#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "coarse_embed/cli_report.hpp"
#include "coarse_embed/json_io.hpp"

namespace ce = coarse_embed;
namespace cli = coarse_embed::cli;

namespace {

void add_common(CLI::App& sub, cli::RunConfig& config) {
  sub.add_option("--output,-o", config.output, "Output path (default: stdout)");
  sub.add_option("--depth", config.depth, "Truncation depth N (0: command default)");
  sub.add_option("--seed", config.seed, "Random seed");
  sub.add_option("--tolerance", config.tolerance, "Numeric tolerance for certificates");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniform embeddings into l2-sums of lp blocks: constructions and certificates"};
  app.require_subcommand(1, 1);
  cli::RunConfig config;

  const std::map<std::string, cli::Format> formats{{"json", cli::Format::Json},
                                                   {"csv", cli::Format::Csv}};

  CLI::App* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
  add_common(*gen, config);
  gen->add_option("--kind", config.kind, "path | cycle | grid | complete | regular");
  gen->add_option("--n", config.n, "Vertex count (grid: rows)")->required();
  gen->add_option("--m", config.m, "Grid columns (default: n)");
  gen->add_option("--d", config.degree, "Degree for regular graphs");

  CLI::App* embed = app.add_subcommand("embed", "Embed a space and certify the distortion bounds");
  add_common(*embed, config);
  embed->add_option("--input,-i", config.input, "Edge list, or .csv distance matrix")->required();
  embed->add_option("--basepoint", config.basepoint, "Basepoint id");
  embed->add_option("--format", config.format, "json | csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  embed->add_option("--schedule-output", config.schedule_output, "Write the exponent schedule JSON");

  CLI::App* group = app.add_subcommand("group", "Cocycle and properness certificates for a group");
  add_common(*group, config);
  group->add_option("--group", config.group, "z:d | free:k | sym:k | dihedral:k");
  group->add_option("--length-max", config.length_max, "Properness curve length (-1: 2 m_N + 1)");
  group->add_option("--sample-length", config.sample_length, "Random word length (-1: m_N + 2)");
  group->add_option("--samples", config.samples, "Random (s, t) pairs");

  CLI::App* expander = app.add_subcommand("expander", "Random regular graph: spectrum and embedding");
  add_common(*expander, config);
  expander->add_option("--n", config.n, "Vertex count (default 100)");
  expander->add_option("--d", config.degree, "Degree");
  expander->add_option("--family-sizes", config.family_sizes, "Extra sizes run with the same seed")
      ->delimiter(',');
  expander->add_option("--edges-output", config.edges_output, "Write the sampled edge list");

  CLI::App* verify = app.add_subcommand("verify", "Run the property suites");
  add_common(*verify, config);
  verify->add_option("--suite", config.suite,
                     "lemma1 | lemma2 | schedule | embed | mixed | group | expander | all");
  verify->add_option("--input,-i", config.input, "Space to check (default: built-in corpus)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << ce::dump_pinned(ce::Json{{"error", "InvalidArgument"}, {"message", e.what()}});
    return 2;
  }

  if (*gen) config.command = cli::Command::Gen;
  if (*embed) config.command = cli::Command::Embed;
  if (*group) config.command = cli::Command::Group;
  if (*expander) config.command = cli::Command::Expander;
  if (*verify) config.command = cli::Command::Verify;
  return cli::run(config, std::cout, std::cerr);
}
