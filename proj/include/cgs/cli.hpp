#pragma once

#include <iosfwd>
#include <string>

#include "cgs/engine.hpp"

namespace cgs {

// Exit codes shared by both commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitResourceLimit = 2;
inline constexpr int kExitVerifyFailure = 3;

struct RunOptions {
  std::string input_path;
  std::string algorithm = "iter";
  BasisMode basis_mode = BasisMode::NabeshimaFullSet;
  ChoiceStrategy strategy = ChoiceStrategy::MaxDimensionDeterministic;
  std::uint64_t seed = 0;
  int verify = 0;  // 0 = skip verification
  bool prune_empty = false;
  long max_iterations = 100000;
  double max_seconds = 300.0;
  std::string output_mode = "text";  // text | structured
  bool stats = false;
};

int run_command(const RunOptions& opts, std::ostream& out, std::ostream& err);

struct BenchOptions {
  std::string directory;
  std::string json_path;  // machine-readable results; empty = skip
  BasisMode basis_mode = BasisMode::NabeshimaFullSet;
  ChoiceStrategy strategy = ChoiceStrategy::MaxDimensionDeterministic;
  std::uint64_t seed = 0;
  long max_iterations = 100000;
  double max_seconds = 300.0;
};

int bench_command(const BenchOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace cgs
