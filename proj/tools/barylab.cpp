// barylab: command-line front end for the barycenter characterization library.

#include "barylab/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

namespace {

using barylab::cli::RunConfig;

void add_common(CLI::App* app, RunConfig& cfg) {
  app->add_option("--seed", cfg.seed, "Generator seed")->check(CLI::NonNegativeNumber);
  app->add_option("--out", cfg.out, "Write the report here instead of stdout");
  app->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, barylab::cli::Format>{{"json", barylab::cli::Format::Json},
                                                      {"csv", barylab::cli::Format::Csv}},
          CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Barycenters of probability measures with prescribed support on polytopes"};
  app.require_subcommand(1);
  RunConfig cfg;
  barylab::cli::Command command;

  auto* characterize = app.add_subcommand("characterize", "Relative-interior and V_a verdicts for a point");
  characterize->add_option("--input", cfg.input, "Polytope JSON")->required();
  characterize->add_option("--point", cfg.point, "Point as r1,r2,... (num/den)")->required();
  add_common(characterize, cfg);
  characterize->callback([&] { command = barylab::cli::run_characterize; });

  auto* witness = app.add_subcommand("witness", "Construct and verify a witness measure");
  witness->add_option("--input", cfg.input, "Polytope JSON")->required();
  witness->add_option("--point", cfg.point, "Barycenter as r1,r2,...")->required();
  witness->add_option("--pairs", cfg.pairs, "Number of witness pairs N")->check(CLI::PositiveNumber);
  witness->add_option("--resolution", cfg.resolution, "Covering grid resolution (0: automatic)");
  add_common(witness, cfg);
  witness->callback([&] { command = barylab::cli::run_witness; });

  auto* measure = app.add_subcommand("measure", "Exact barycenter of a measure JSON file");
  measure->add_option("--input", cfg.input, "Measure JSON or witness report")->required();
  measure->add_option("--point", cfg.point, "Expected barycenter");
  add_common(measure, cfg);
  measure->callback([&] { command = barylab::cli::run_measure; });

  auto* hilbert = app.add_subcommand("hilbert", "Truncated Hilbert cube study");
  hilbert->add_option("--dim", cfg.dim, "Truncation dimension d")->check(CLI::PositiveNumber);
  hilbert->add_option("--samples", cfg.samples, "Monte Carlo sample count S")->check(CLI::PositiveNumber);
  add_common(hilbert, cfg);
  hilbert->callback([&] { command = barylab::cli::run_hilbert; });

  auto* simplex = app.add_subcommand("simplex", "Pushforward measure on the probability simplex");
  simplex->add_option("--m", cfg.m, "Number of points of K");
  simplex->add_option("--mu", cfg.mu, "Target barycenter as r1,r2,...");
  simplex->add_option("--depth", cfg.depth, "Weight-vector depth J")->check(CLI::PositiveNumber);
  simplex->add_option("--lambda-atoms", cfg.lambda_atoms, "Atoms of the weight measure")
      ->check(CLI::PositiveNumber);
  simplex->add_option("--samples", cfg.samples, "Monte Carlo sample count S")->check(CLI::PositiveNumber);
  simplex->add_option("--resolution", cfg.resolution, "Simplex grid resolution (0: 20)");
  add_common(simplex, cfg);
  simplex->callback([&] { command = barylab::cli::run_simplex; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : barylab::cli::kInputError;
  }

  return barylab::cli::guarded(command, cfg, std::cout, std::cerr);
}
