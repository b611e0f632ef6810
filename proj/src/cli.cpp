#include "cgs/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "cgs/output.hpp"
#include "cgs/problem.hpp"
#include "cgs/verifier.hpp"

namespace cgs {

namespace {

EngineConfig engine_config(BasisMode mode, ChoiceStrategy strategy, std::uint64_t seed,
                           bool prune, long max_iterations, double max_seconds) {
  EngineConfig config;
  config.basis_mode = mode;
  config.strategy = strategy;
  config.seed = seed;
  config.prune_empty = prune;
  config.max_iterations = max_iterations;
  config.max_seconds = max_seconds;
  return config;
}

nlohmann::json stats_counters(const Stats& st) {
  return {{"gb_kax", st.gb_kax.count},
          {"gb_ka", st.gb_ka.count},
          {"contains_check", st.contains_check.count},
          {"emptiness_check", st.emptiness_check.count},
          {"mb", st.mb.count},
          {"sqfr", st.sqfr.count},
          {"iterations", st.iterations},
          {"segments", st.segments}};
}

}  // namespace

int run_command(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.algorithm != "iter") {
    err << "error: unknown algorithm '" << opts.algorithm << "' (only 'iter' is available)\n";
    return kExitInputError;
  }
  if (opts.output_mode != "text" && opts.output_mode != "structured") {
    err << "error: unknown output mode '" << opts.output_mode << "'\n";
    return kExitInputError;
  }

  Problem problem;
  try {
    problem = load_problem_file(opts.input_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  IdealHandle input(problem.ring, problem.generators);
  EngineConfig config = engine_config(opts.basis_mode, opts.strategy, opts.seed,
                                      opts.prune_empty, opts.max_iterations, opts.max_seconds);

  CGSOutput result;
  try {
    result = cgs_iter(input, problem.ring->ordering(), config);
  } catch (const resource_limit_error& e) {
    err << "error: " << e.what() << "\n";
    err << render_stats_table({{problem.name, e.partial_stats, ""}});
    return kExitResourceLimit;
  }

  if (opts.output_mode == "structured") {
    out << to_json(result, problem.name).dump(2) << "\n";
  } else {
    out << render_text(result, problem.name);
  }
  if (opts.stats) {
    out << "\n" << render_stats_table({{problem.name, result.stats, ""}});
  }

  if (opts.verify > 0) {
    SuiteReport report = random_point_suite(input, result, opts.verify, opts.seed);
    out << "\nverification: " << report.summary() << "\n";
    for (const auto& f : report.failures) {
      out << "  point #" << (f.point_index + 1) << " (";
      for (std::size_t i = 0; i < f.point.coords.size(); ++i)
        out << (i ? ", " : "") << f.point.coords[i].to_string();
      out << "): " << f.details << "\n";
    }
    if (!report.all_passed()) return kExitVerifyFailure;
  }
  return kExitOk;
}

int bench_command(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  try {
    for (const auto& entry : fs::directory_iterator(opts.directory)) {
      if (entry.is_regular_file() && entry.path().extension() == ".cgs")
        files.push_back(entry.path());
    }
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (files.empty()) {
    err << "error: no .cgs problem files in '" << opts.directory << "'\n";
    return kExitInputError;
  }
  std::sort(files.begin(), files.end());

  std::vector<StatsRow> rows;
  nlohmann::json results = nlohmann::json::array();
  for (const auto& path : files) {
    Problem problem;
    try {
      problem = load_problem_file(path.string());
    } catch (const std::exception& e) {
      rows.push_back({path.filename().string(), {}, std::string("load error: ") + e.what()});
      results.push_back({{"problem", path.filename().string()}, {"error", e.what()}});
      continue;
    }
    EngineConfig config = engine_config(opts.basis_mode, opts.strategy, opts.seed, false,
                                        opts.max_iterations, opts.max_seconds);
    try {
      IdealHandle input(problem.ring, problem.generators);
      CGSOutput result = cgs_iter(input, problem.ring->ordering(), config);
      rows.push_back({problem.name, result.stats, ""});
      results.push_back({{"problem", problem.name}, {"stats", stats_counters(result.stats)}});
    } catch (const resource_limit_error& e) {
      rows.push_back({problem.name, e.partial_stats, std::string("limit: ") + e.what()});
      results.push_back({{"problem", problem.name}, {"error", e.what()}});
    }
  }

  out << render_stats_table(rows);
  if (!opts.json_path.empty()) {
    std::ofstream jf(opts.json_path);
    if (!jf) {
      err << "error: cannot write '" << opts.json_path << "'\n";
      return kExitInputError;
    }
    jf << results.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace cgs
