#pragma once

#include <chrono>

namespace cgs {

struct OpStat {
  long count = 0;
  double seconds = 0.0;

  void add(double s) {
    ++count;
    seconds += s;
  }

  friend bool operator==(const OpStat&, const OpStat&) = default;
};

// Operation counters mirroring the cost profile of a run: Groebner bases in
// the full ring and in the parameter ring, ideal containment checks,
// constructible-set emptiness checks, minimal monomial bases, squarefree
// parts, plus loop iterations and emitted segments.
struct Stats {
  OpStat gb_kax;
  OpStat gb_ka;
  OpStat contains_check;
  OpStat emptiness_check;
  OpStat mb;
  OpStat sqfr;
  long iterations = 0;
  long segments = 0;
  double total_seconds = 0.0;

  friend bool operator==(const Stats&, const Stats&) = default;
};

class StopWatch {
 public:
  StopWatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace cgs
