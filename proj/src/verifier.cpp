#include "cgs/verifier.hpp"

#include <sstream>

namespace cgs {

bool point_in_segment(const Point& p, const Segment& seg) {
  for (const auto& g : seg.vanishing.generators())
    if (!evaluate_params(g, p).is_zero()) return false;
  for (const auto& e : seg.exceptions) {
    bool some_nonzero = false;
    for (const auto& g : e.generators()) {
      if (!evaluate_params(g, p).is_zero()) {
        some_nonzero = true;
        break;
      }
    }
    if (!some_nonzero) return false;
  }
  return true;
}

namespace {

std::string render_point(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) out += ", ";
    out += p.coords[i].to_string();
  }
  return out + ")";
}

}  // namespace

VerifyReport verify_at_point(const IdealHandle& input, const Segment& seg, const Point& p) {
  if (!input.valid()) throw usage_error("verify_at_point: empty input ideal");
  if (!point_in_segment(p, seg))
    throw usage_error("verify_at_point: point is outside the segment");
  const RingPtr& ring = input.ring();
  TermOrdering ord = ring->ordering();

  // E: the specialized segment basis, zero images dropped.
  std::vector<Polynomial> E;
  for (const auto& g : seg.basis) {
    Polynomial e = evaluate_params(g, p);
    if (!e.is_zero()) E.push_back(std::move(e));
  }

  // R: reduced basis of the specialized ideal, recomputed from the original
  // generators plus the vanishing generators (zero at p by construction,
  // kept for faithfulness to the segment description).
  std::vector<Polynomial> specialized;
  for (const auto& g : input.generators()) specialized.push_back(evaluate_params(g, p));
  for (const auto& g : seg.vanishing.generators()) specialized.push_back(evaluate_params(g, p));
  std::vector<Polynomial> R = reduced_groebner_basis(specialized, ord);

  if (!is_groebner_basis(E, ord))
    return {false, "specialized basis is not a Groebner basis at " + render_point(p)};
  for (const auto& e : E) {
    if (!normal_form(e, R, ord).is_zero())
      return {false, "specialized basis element " + render(e) +
                         " is not in the specialized ideal at " + render_point(p)};
  }
  for (const auto& r : R) {
    if (!normal_form(r, E, ord).is_zero())
      return {false, "ideal element " + render(r) +
                         " does not reduce to zero against the specialized basis at " +
                         render_point(p)};
  }
  return {true, ""};
}

std::vector<Point> sample_points(std::size_t n_params, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(n));
  const long dens[3] = {1, 2, 3};
  for (int k = 0; k < n; ++k) {
    Point p;
    p.coords.reserve(n_params);
    for (std::size_t i = 0; i < n_params; ++i) {
      long num = static_cast<long>(rng() % 21) - 10;
      long den = dens[rng() % 3];
      p.coords.emplace_back(num, den);
    }
    points.push_back(std::move(p));
  }
  return points;
}

SuiteReport random_point_suite(const IdealHandle& input, const CGSOutput& out, int n,
                               std::uint64_t seed) {
  if (!input.valid()) throw usage_error("random_point_suite: empty input ideal");
  SuiteReport report;
  report.n_points = n;
  auto points = sample_points(input.ring()->n_params(), n, seed);
  for (std::size_t k = 0; k < points.size(); ++k) {
    const Point& p = points[k];
    bool covered = false;
    for (std::size_t s = 0; s < out.segments.size(); ++s) {
      if (!point_in_segment(p, out.segments[s])) continue;
      covered = true;
      VerifyReport vr = verify_at_point(input, out.segments[s], p);
      if (!vr.pass)
        report.failures.push_back(
            {SuiteFailure::Kind::VerificationFailed, k, p, s, vr.details});
    }
    if (covered)
      ++report.covered;
    else
      report.failures.push_back(
          {SuiteFailure::Kind::NotCovered, k, p, 0, "point not covered by any segment"});
  }
  return report;
}

std::string SuiteReport::summary() const {
  std::ostringstream os;
  os << "coverage " << covered << "/" << n_points;
  long bad = 0;
  for (const auto& f : failures)
    if (f.kind == SuiteFailure::Kind::VerificationFailed) ++bad;
  if (failures.empty()) {
    os << ", all segments verified";
  } else {
    os << ", " << bad << " verification failures";
    if (covered != n_points) os << ", " << (n_points - covered) << " points uncovered";
  }
  return os.str();
}

}  // namespace cgs
