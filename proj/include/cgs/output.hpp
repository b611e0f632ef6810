#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cgs/engine.hpp"

namespace cgs {

std::string to_string(BasisMode m);
std::string to_string(ChoiceStrategy s);
std::optional<BasisMode> basis_mode_from_string(std::string_view text);
std::optional<ChoiceStrategy> strategy_from_string(std::string_view text);

// "<g1, g2, ...>", "<0>" for the zero ideal, generators as canonical text.
std::string render_ideal(const IdealHandle& ideal);

std::string render_text(const CGSOutput& out, const std::string& problem_name);

struct StatsRow {
  std::string name;
  Stats stats;
  std::string note;  // e.g. load or limit failures in bench sweeps
};

// Counter/time table in the shape of the paper's instrumentation: one row
// per problem, count and seconds per operation category, segment count,
// total time.
std::string render_stats_table(const std::vector<StatsRow>& rows, bool with_times = true);

// Structured output: config echo, ring, input, segments (all polynomials in
// canonical text), stats counters, tool version. Wall-clock seconds are
// deliberately excluded so equal runs serialize identically.
nlohmann::json to_json(const CGSOutput& out, const std::string& problem_name);

struct LoadedOutput {
  std::string problem;
  CGSOutput output;
};

// Rebuilds ring, polynomials, ideals, config, and counters from a document
// produced by to_json.
LoadedOutput output_from_json(const nlohmann::json& doc);

}  // namespace cgs
