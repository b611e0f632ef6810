#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cgs/cli.hpp"
#include "cgs/output.hpp"
#include "cgs/version.hpp"

namespace {

struct ModeFlags {
  std::string basis_mode = "nabeshima";
  std::string strategy = "deterministic";
};

void add_mode_flags(CLI::App* cmd, ModeFlags& flags) {
  cmd->add_option("--basis-mode", flags.basis_mode, "segment basis flavor")
      ->check(CLI::IsMember({"nabeshima", "ksw"}));
  cmd->add_option("--strategy", flags.strategy, "work-list choice strategy")
      ->check(CLI::IsMember({"deterministic", "random"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"comprehensive Groebner systems for parametric ideals"};
  app.set_version_flag("--version", std::string(cgs::kToolName) + " " + cgs::kToolVersion);
  app.require_subcommand(1);

  cgs::RunOptions run;
  ModeFlags run_flags;
  CLI::App* run_cmd = app.add_subcommand("run", "compute a CGS for one problem file");
  run_cmd->add_option("file", run.input_path, "problem file")->required();
  run_cmd->add_option("--algorithm", run.algorithm, "algorithm (only 'iter')")
      ->check(CLI::IsMember({"iter"}));
  add_mode_flags(run_cmd, run_flags);
  run_cmd->add_option("--seed", run.seed, "RNG seed (choice strategy and verification)");
  run_cmd->add_option("--verify", run.verify, "verify at N random parameter points")
      ->check(CLI::NonNegativeNumber);
  run_cmd->add_flag("--prune-empty", run.prune_empty, "drop segments with empty support");
  run_cmd->add_option("--max-iterations", run.max_iterations, "iteration limit");
  run_cmd->add_option("--max-seconds", run.max_seconds, "time limit in seconds");
  run_cmd->add_option("--output", run.output_mode, "output form")
      ->check(CLI::IsMember({"text", "structured"}));
  run_cmd->add_flag("--stats", run.stats, "print the operation counter table");

  cgs::BenchOptions bench;
  ModeFlags bench_flags;
  CLI::App* bench_cmd = app.add_subcommand("bench", "run every problem file in a directory");
  bench_cmd->add_option("dir", bench.directory, "directory of .cgs files")->required();
  bench_cmd->add_option("--json", bench.json_path, "write machine-readable results here");
  add_mode_flags(bench_cmd, bench_flags);
  bench_cmd->add_option("--seed", bench.seed, "RNG seed");
  bench_cmd->add_option("--max-iterations", bench.max_iterations, "iteration limit per problem");
  bench_cmd->add_option("--max-seconds", bench.max_seconds, "time limit per problem in seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? cgs::kExitOk : cgs::kExitInputError;
  }

  auto mode_of = [](const ModeFlags& f) {
    return std::pair(*cgs::basis_mode_from_string(f.basis_mode),
                     *cgs::strategy_from_string(f.strategy));
  };

  if (run_cmd->parsed()) {
    std::tie(run.basis_mode, run.strategy) = mode_of(run_flags);
    return cgs::run_command(run, std::cout, std::cerr);
  }
  std::tie(bench.basis_mode, bench.strategy) = mode_of(bench_flags);
  return cgs::bench_command(bench, std::cout, std::cerr);
}
