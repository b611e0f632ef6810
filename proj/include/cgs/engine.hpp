#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cgs/toolkit.hpp"

namespace cgs {

enum class BasisMode { NabeshimaFullSet, KswSingle };
enum class ChoiceStrategy { MaxDimensionDeterministic, MaxDimensionRandom };

struct EngineConfig {
  BasisMode basis_mode = BasisMode::NabeshimaFullSet;
  ChoiceStrategy strategy = ChoiceStrategy::MaxDimensionDeterministic;
  std::uint64_t seed = 0;
  bool prune_empty = false;
  long max_iterations = 100000;
  double max_seconds = 300.0;
  // Re-check structural guarantees (inserted ideal strictly contains its
  // parent; pending list stays an antichain) after every step.
  bool check_invariants = false;
};

// One case of the comprehensive system: for every parameter point P with all
// of vanishing zero and, for at least one exception ideal, not all
// generators zero, the specialized basis is a Groebner basis of the
// specialized input ideal.
struct Segment {
  IdealHandle vanishing;
  std::vector<IdealHandle> exceptions;
  std::vector<Polynomial> basis;
};

struct CGSOutput {
  RingPtr ring;
  IdealHandle input;
  EngineConfig config;
  std::vector<Segment> segments;
  Stats stats;
};

class resource_limit_error : public std::runtime_error {
 public:
  resource_limit_error(const std::string& what, Stats partial)
      : std::runtime_error(what), partial_stats(std::move(partial)) {}

  Stats partial_stats;
};

// Removes and returns a pending ideal of maximal dimension. Deterministic
// rule: fewest generators, then insertion order; random rule: seeded uniform
// pick among the maximal-dimension entries.
IdealHandle choose_vanishing(std::vector<IdealHandle>& todo, ChoiceStrategy strategy,
                             std::mt19937_64& rng, Stats* stats = nullptr);

struct SegmentBases {
  std::vector<PowerProduct> mb;          // decreasing under the ordering
  std::vector<Polynomial> basis;         // emitted basis, increasing LPP
  std::vector<IdealHandle> lc_ideals;    // c_t aligned with mb
};

// Splits a reduced basis of J = I + a into the segment data of algorithm
// step 2.6: MB of the X leading power products of G \ K[A], the emitted
// basis for the chosen mode, and the leading-coefficient ideals.
SegmentBases segment_bases(std::span<const Polynomial> reduced, const IdealHandle& g_a,
                           BasisMode mode, Stats* stats = nullptr);

CGSOutput cgs_iter(const IdealHandle& input, const TermOrdering& ordering,
                   const EngineConfig& config);

// Post-filter dropping segments whose constructible set is empty.
CGSOutput prune_empty_segments(CGSOutput out);

}  // namespace cgs
