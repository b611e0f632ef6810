// Acceptance checks: one line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cgs/cli.hpp"
#include "cgs/output.hpp"
#include "cgs/problem.hpp"
#include "cgs/verifier.hpp"

using namespace cgs;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

RingPtr circles_ring() {
  return make_ring({"x", "y"}, {"c", "r"}, BlockOrder::Lex, BlockOrder::Lex);
}

Polynomial P(const RingPtr& ring, std::string_view text) {
  return parse_polynomial(text, ring);
}

std::vector<Polynomial> circles_gens(const RingPtr& r) {
  return {P(r, "x^2 + y^2 - 1"), P(r, "(x - c)^2 + y^2 - r")};
}

bool equal_ideals(const IdealHandle& a, const IdealHandle& b) {
  return ideal_contains(a, b) && ideal_contains(b, a);
}

std::vector<std::string> suite_files() {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(CGS_PROBLEM_DIR))
    if (entry.path().extension() == ".cgs") files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  return files;
}

// --- criterion 1: two-circles reduced Groebner basis, exact -----------------

void criterion1() {
  StopWatch sw;
  RingPtr r = circles_ring();
  auto rgb = reduced_groebner_basis(circles_gens(r), r->ordering());

  // The four expected polynomials, re-rendered canonically for comparison.
  std::vector<std::string> expected_texts = {
      "x^2 + y^2 - 1",
      "c*x - 1/2*c^2 + 1/2*r - 1/2",
      "r*x - x - 2*c*y^2 - 1/2*c^3 + 1/2*r*c + 3/2*c",
      "c^2*y^2 + 1/4*c^4 - 1/2*r*c^2 + 1/4*r^2 - 1/2*c^2 - 1/2*r + 1/4",
  };
  std::vector<std::string> expected;
  for (const auto& t : expected_texts) expected.push_back(render(P(r, t)));
  std::vector<std::string> got;
  for (const auto& g : rgb) got.push_back(render(g));
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());

  require(got.size() == 4, "basis has " + std::to_string(got.size()) + " elements, wanted 4");
  require(got == expected, "basis differs from the worked example");
  require(sw.seconds() < 1.0, "took too long");
}

// --- criterion 2: MB / G_t / c_t extraction ---------------------------------

void criterion2() {
  StopWatch sw;
  RingPtr r = circles_ring();
  auto rgb = reduced_groebner_basis(circles_gens(r), r->ordering());
  SegmentBases sb = segment_bases(rgb, IdealHandle(r, {}), BasisMode::NabeshimaFullSet);

  require(sb.mb.size() == 2, "MB size " + std::to_string(sb.mb.size()) + ", wanted 2");
  PowerProduct x = P(r, "x").leading_term().pp;
  PowerProduct y2 = P(r, "y^2").leading_term().pp;
  require(sb.mb[0] == x && sb.mb[1] == y2, "MB is not {x, y^2}");

  std::size_t g_x = 0, g_y2 = 0;
  for (const auto& g : sb.basis) {
    auto lpp_x = leading_x(g, r->ordering()).lpp_x;
    if (lpp_x == x) ++g_x;
    if (lpp_x == y2) ++g_y2;
  }
  require(g_x == 2, "|G_x| = " + std::to_string(g_x) + ", wanted 2");
  require(g_y2 == 1, "|G_y2| = " + std::to_string(g_y2) + ", wanted 1");

  require(sb.lc_ideals.size() == 2, "wanted one coefficient ideal per MB element");
  require(equal_ideals(sb.lc_ideals[0], IdealHandle(r, {P(r, "c"), P(r, "r - 1")})),
          "c_x != <c, r - 1>");
  require(equal_ideals(sb.lc_ideals[1], IdealHandle(r, {P(r, "c^2")})), "c_y2 != <c^2>");
  require(sw.seconds() < 1.0, "took too long");
}

// --- criterion 3: CGS of two-circles, point suite + named specializations ---

void criterion3() {
  StopWatch sw;
  RingPtr r = circles_ring();
  IdealHandle input(r, circles_gens(r));
  CGSOutput out = cgs_iter(input, r->ordering(), {});
  require(sw.seconds() < 10.0, "engine run took too long");

  SuiteReport report = random_point_suite(input, out, 200, 2026);
  require(report.covered == 200, "coverage " + std::to_string(report.covered) + "/200");
  require(report.failures.empty(),
          std::to_string(report.failures.size()) + " verification failures");

  // Named points, checked against directly computed specializations.
  auto check_point = [&](Point p, const char* tag,
                         std::initializer_list<std::string_view> oracle_texts) {
    std::vector<Polynomial> oracle;
    for (auto t : oracle_texts) oracle.push_back(P(r, t));
    bool covered = false;
    for (const auto& seg : out.segments) {
      if (!point_in_segment(p, seg)) continue;
      covered = true;
      require(verify_at_point(input, seg, p).pass, std::string(tag) + ": segment fails");
      // Specialized basis generates exactly the oracle ideal.
      std::vector<Polynomial> evals;
      for (const auto& g : seg.basis) {
        Polynomial e = evaluate_params(g, p);
        if (!e.is_zero()) evals.push_back(e);
      }
      require(reduced_groebner_basis(evals, r->ordering()) == oracle,
              std::string(tag) + ": specialized basis is not the oracle ideal");
    }
    require(covered, std::string(tag) + ": not covered by any segment");
  };

  // Coincident circles: sigma(I) = <x^2 + y^2 - 1>.
  check_point(Point{{Rational(0), Rational(1)}}, "(0,1)", {"x^2 + y^2 - 1"});
  // Inconsistent circles: sigma(I) = <1>.
  check_point(Point{{Rational(0), Rational(2)}}, "(0,2)", {"1"});
}

// --- criterion 4: antichain and strict-growth invariants --------------------

void criterion4() {
  EngineConfig config;
  config.check_invariants = true;

  for (const auto& file : suite_files()) {
    Problem problem = load_problem_file(file);
    IdealHandle input(problem.ring, problem.generators);
    try {
      cgs_iter(input, problem.ring->ordering(), config);
    } catch (const std::logic_error& e) {
      throw Failure(problem.name + ": invariant violated: " + e.what());
    }
  }

  // Random parametric ideals: 2 parameters, 2 variables, degree <= 2.
  RingPtr r = make_ring({"x", "y"}, {"a", "b"}, BlockOrder::Lex, BlockOrder::Lex);
  std::mt19937_64 rng(4040);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    int n_gens = 2 + static_cast<int>(rng() % 2);
    for (int k = 0; k < n_gens; ++k) {
      std::vector<Term> terms;
      int n_terms = 1 + static_cast<int>(rng() % 3);
      for (int t = 0; t < n_terms; ++t) {
        PowerProduct pp(r->width());
        for (int d = static_cast<int>(rng() % 3); d > 0; --d) {
          std::size_t i = rng() % 4;
          pp.set_exponent(i, pp.exponent(i) + 1);
        }
        long coeff = static_cast<long>(rng() % 7) - 3;
        terms.push_back({Rational(coeff), pp});
      }
      Polynomial g(r, std::move(terms));
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    IdealHandle input(r, gens);
    try {
      CGSOutput out = cgs_iter(input, r->ordering(), config);
      SuiteReport report = random_point_suite(input, out, 25, 4040 + trial);
      require(report.all_passed(),
              "random ideal " + std::to_string(trial) + ": " + report.summary());
    } catch (const std::logic_error& e) {
      throw Failure("random ideal " + std::to_string(trial) + ": invariant violated: " +
                    e.what());
    }
  }
}

// --- criterion 5: engine property suite --------------------------------------

Polynomial random_sparse(std::mt19937_64& rng, const RingPtr& r, int max_terms, int max_deg) {
  std::vector<Term> terms;
  int n_terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
  for (int t = 0; t < n_terms; ++t) {
    PowerProduct pp(r->width());
    for (int d = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1)); d > 0; --d) {
      std::size_t i = rng() % r->width();
      pp.set_exponent(i, pp.exponent(i) + 1);
    }
    long num = static_cast<long>(rng() % 9) - 4;
    terms.push_back({Rational(num), pp});
  }
  return Polynomial(r, std::move(terms));
}

void criterion5() {
  StopWatch sw;

  // (a) reduced-basis uniqueness under all generator permutations.
  RingPtr r3 = make_ring({"x", "y", "z"}, {}, BlockOrder::DegRevLex, BlockOrder::Lex);
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens;
    int n_gens = 2 + static_cast<int>(rng() % 3);  // up to 4
    for (int k = 0; k < n_gens; ++k) gens.push_back(random_sparse(rng, r3, 3, 3));
    auto expected = reduced_groebner_basis(gens, r3->ordering());
    require(is_groebner_basis(expected, r3->ordering()),
            "self-check failed on trial " + std::to_string(trial));
    require(reduced_groebner_basis(expected, r3->ordering()) == expected,
            "idempotence failed on trial " + std::to_string(trial));

    std::vector<std::size_t> idx(gens.size());
    std::iota(idx.begin(), idx.end(), 0);
    do {
      std::vector<Polynomial> permuted;
      for (auto i : idx) permuted.push_back(gens[i]);
      if (reduced_groebner_basis(permuted, r3->ordering()) != expected)
        throw Failure("permutation changed the reduced basis, trial " + std::to_string(trial));
    } while (std::next_permutation(idx.begin(), idx.end()));
  }

  // (b) membership iff normal form zero, against linear-combination witnesses.
  RingPtr rc = circles_ring();
  auto gens = circles_gens(rc);
  auto rgb = reduced_groebner_basis(gens, rc->ordering());
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial member(rc);
    for (const auto& g : gens) member = member + random_sparse(rng, rc, 3, 2) * g;
    if (!normal_form(member, rgb, rc->ordering()).is_zero())
      throw Failure("combination not recognized as a member");
    // A standard monomial (here: y) shifts any member outside the ideal.
    Polynomial outside = member + P(rc, "y");
    if (normal_form(outside, rgb, rc->ordering()).is_zero())
      throw Failure("non-member reduced to zero");
  }

  // (c) radical membership against the bounded-power oracle.
  struct Probe {
    const char* f;
    std::vector<const char*> gens;
  };
  std::vector<Probe> probes = {
      {"c", {"c^2"}},          {"c", {"c^6"}},
      {"c*r", {"c^3", "r^2"}}, {"c + r", {"c", "r^2"}},
      {"r", {"c"}},            {"c + 1", {"c^2"}},
      {"c^2 + c", {"c^3"}},    {"c + r", {"c^2", "c*r", "r^2"}},
      {"r - 1", {"c*r - c", "r^2 - r"}},
  };
  for (const auto& probe : probes) {
    Polynomial f = P(rc, probe.f);
    std::vector<Polynomial> agens;
    for (auto t : probe.gens) agens.push_back(P(rc, t));
    IdealHandle a(rc, agens);
    bool oracle = false;
    for (int k = 1; k <= 6 && !oracle; ++k)
      oracle = normal_form(power(f, k), a.reduced_basis(), rc->ordering()).is_zero();
    if (in_radical(f, a) != oracle)
      throw Failure(std::string("radical membership mismatch for ") + probe.f);
  }

  // (d) squarefree_part properties.
  std::vector<Polynomial> fs = {
      P(rc, "c^2"), P(rc, "c"), P(rc, "c^2 + 2*c*r + r^2"), P(rc, "c^3*r^2"),
      P(rc, "c^2*r - c*r") * P(rc, "c^2*r - c*r"),
  };
  for (const auto& f : fs) {
    Polynomial s = squarefree_part(f);
    if (!(divide_exact(f, s, rc->ordering()) * s == f)) throw Failure("sqfr does not divide");
    if (squarefree_part(f * f) != s) throw Failure("sqfr(f^2) != sqfr(f)");
    if (squarefree_part(s) != s) throw Failure("sqfr not idempotent");
    if (!in_radical(f, IdealHandle(rc, {s}))) throw Failure("f not in sqrt(<sqfr(f)>)");
  }

  require(sw.seconds() < 60.0, "property suite exceeded 60 s");
}

// --- criterion 6: determinism and the gb_kax == iterations equality ---------

void criterion6() {
  for (const auto& file : suite_files()) {
    for (BasisMode mode : {BasisMode::NabeshimaFullSet, BasisMode::KswSingle}) {
      RunOptions opts;
      opts.input_path = file;
      opts.output_mode = "structured";
      opts.basis_mode = mode;
      std::ostringstream out1, out2, err1, err2;
      int rc1 = run_command(opts, out1, err1);
      int rc2 = run_command(opts, out2, err2);
      if (rc1 != 0 || rc2 != 0) throw Failure(file + ": run failed");
      if (out1.str() != out2.str())
        throw Failure(file + ": structured output differs between identical runs");

      auto doc = nlohmann::json::parse(out1.str());
      long gb_kax = doc["stats"]["gb_kax"].get<long>();
      long iterations = doc["stats"]["iterations"].get<long>();
      if (gb_kax != iterations)
        throw Failure(file + ": gb_kax " + std::to_string(gb_kax) + " != iterations " +
                      std::to_string(iterations));
    }
  }
}

// --- criterion 7: stats categories + mutation caught by the verifier --------

void criterion7() {
  // Every instrumentation category appears in both output forms.
  RingPtr r = circles_ring();
  IdealHandle input(r, circles_gens(r));
  CGSOutput out = cgs_iter(input, r->ordering(), {});

  std::string table = render_stats_table({{"two-circles", out.stats, ""}});
  for (const char* header : {"GB K[A,X]", "GB K[A]", "a in b", "Z\\Z empty", "MB", "sqfr",
                             "#", "time"})
    require(table.find(header) != std::string::npos,
            std::string("table lacks the '") + header + "' column");

  auto doc = to_json(out, "two-circles");
  for (const char* key : {"gb_kax", "gb_ka", "contains_check", "emptiness_check", "mb", "sqfr",
                          "iterations", "segments"})
    require(doc["stats"].contains(key), std::string("stats lacks '") + key + "'");

  // Corrupting one segment basis must be caught by the point suite.
  CGSOutput broken = out;
  require(broken.segments[0].basis.size() == 3, "unexpected segment shape");
  broken.segments[0].basis.erase(broken.segments[0].basis.begin());
  SuiteReport report = random_point_suite(input, broken, 200, 2026);
  long caught = 0;
  for (const auto& f : report.failures)
    if (f.kind == SuiteFailure::Kind::VerificationFailed) ++caught;
  require(caught >= 1, "mutation not caught");
}

}  // namespace

int main() {
  struct Entry {
    int number;
    const char* label;
    std::function<void()> fn;
  };
  const Entry entries[] = {
      {1, "two-circles reduced Groebner basis matches the worked example", criterion1},
      {2, "segment-basis extraction reproduces MB, G_t sizes, and c_t ideals", criterion2},
      {3, "two-circles CGS verifies at 200 random points and named specializations",
       criterion3},
      {4, "work-list invariants hold across the suite and random ideals", criterion4},
      {5, "uniqueness, membership, radical, and squarefree property suite", criterion5},
      {6, "byte-identical reruns and gb_kax == iterations on every problem", criterion6},
      {7, "stats categories emitted and basis mutation caught by the verifier", criterion7},
  };

  int failures = 0;
  for (const auto& e : entries) {
    try {
      e.fn();
      std::cout << "PASS criterion " << e.number << ": " << e.label << "\n";
    } catch (const std::exception& ex) {
      ++failures;
      std::cout << "FAIL criterion " << e.number << ": " << e.label << " -- " << ex.what()
                << "\n";
    }
  }
  return failures == 0 ? 0 : 1;
}
