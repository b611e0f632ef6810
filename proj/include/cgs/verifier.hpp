#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgs/engine.hpp"

namespace cgs {

// P lies in Z(vanishing) \ union of Z(e) over the exception ideals: all
// vanishing generators evaluate to zero and, for every exception ideal,
// at least one generator does not.
bool point_in_segment(const Point& p, const Segment& seg);

struct VerifyReport {
  bool pass = false;
  std::string details;  // empty on success, failing check otherwise
};

// Independent check at one parameter point: specializes the segment basis
// and the input ideal, recomputes a reduced basis from scratch, and compares
// the two as Groebner bases of the same ideal.
VerifyReport verify_at_point(const IdealHandle& input, const Segment& seg, const Point& p);

struct SuiteFailure {
  enum class Kind { NotCovered, VerificationFailed };
  Kind kind;
  std::size_t point_index;
  Point point;
  std::size_t segment_index;  // meaningful for VerificationFailed
  std::string details;
};

struct SuiteReport {
  int n_points = 0;
  int covered = 0;
  std::vector<SuiteFailure> failures;

  bool all_passed() const { return covered == n_points && failures.empty(); }
  std::string summary() const;
};

// Samples n parameter points (numerators in [-10, 10], denominators in
// {1, 2, 3}, seeded and reproducible), checks that every point is covered by
// at least one segment, and runs verify_at_point for every covering segment.
SuiteReport random_point_suite(const IdealHandle& input, const CGSOutput& out, int n,
                               std::uint64_t seed);

// The deterministic sample sequence used by random_point_suite.
std::vector<Point> sample_points(std::size_t n_params, int n, std::uint64_t seed);

}  // namespace cgs
