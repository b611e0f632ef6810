#include "cgs/engine.hpp"

#include <algorithm>
#include <string>

namespace cgs {

IdealHandle choose_vanishing(std::vector<IdealHandle>& todo, ChoiceStrategy strategy,
                             std::mt19937_64& rng, Stats* stats) {
  if (todo.empty()) throw usage_error("choose_vanishing from an empty work list");
  int best = -2;
  for (const auto& a : todo) best = std::max(best, dimension(a, stats));
  std::vector<std::size_t> top;
  for (std::size_t i = 0; i < todo.size(); ++i)
    if (dimension(todo[i], stats) == best) top.push_back(i);

  std::size_t pick;
  if (strategy == ChoiceStrategy::MaxDimensionRandom) {
    pick = top[static_cast<std::size_t>(rng() % top.size())];
  } else {
    pick = top[0];
    for (std::size_t i : top)
      if (todo[i].generators().size() < todo[pick].generators().size()) pick = i;
  }
  IdealHandle chosen = todo[pick];
  todo.erase(todo.begin() + static_cast<std::ptrdiff_t>(pick));
  return chosen;
}

SegmentBases segment_bases(std::span<const Polynomial> reduced, const IdealHandle& g_a,
                           BasisMode mode, Stats* stats) {
  if (!g_a.valid()) throw usage_error("segment_bases: empty ideal handle");
  const RingPtr& ring = g_a.ring();
  TermOrdering ord = ring->ordering();
  std::size_t n_x = ring->n_vars();

  std::vector<const Polynomial*> nonpure;
  for (const auto& g : reduced)
    if (!g.pure_parameters()) nonpure.push_back(&g);

  SegmentBases out;
  {
    StopWatch watch;
    std::vector<PowerProduct> lppxs;
    lppxs.reserve(nonpure.size());
    for (const auto* g : nonpure) lppxs.push_back(x_part(g->leading_term().pp, n_x));
    out.mb = minimal_monomial_basis(lppxs, ord);
    if (stats) stats->mb.add(watch.seconds());
  }

  for (const auto& t : out.mb) {
    std::vector<const Polynomial*> group;
    for (const auto* g : nonpure)
      if (x_part(g->leading_term().pp, n_x) == t) group.push_back(g);
    // Input comes ordered by increasing LPP, so the KSW representative with
    // the smallest full leading power product is the first of the group.
    if (mode == BasisMode::KswSingle) group.resize(1);
    std::vector<Polynomial> lcs;
    lcs.reserve(group.size());
    for (const auto* g : group) {
      lcs.push_back(leading_x(*g, ord).lc_x);
      out.basis.push_back(*g);
    }
    out.lc_ideals.emplace_back(ring, std::move(lcs));
  }
  std::sort(out.basis.begin(), out.basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_term().pp, b.leading_term().pp);
  });
  return out;
}

namespace {

void check_antichain(const std::vector<IdealHandle>& todo) {
  for (std::size_t i = 0; i < todo.size(); ++i)
    for (std::size_t j = 0; j < todo.size(); ++j)
      if (i != j && ideal_contains(todo[i], todo[j]))
        throw std::logic_error("invariant violated: pending ideals are not an antichain");
}

void check_strictly_above(const IdealHandle& inserted, const IdealHandle& parent) {
  if (!ideal_contains(inserted, parent) || ideal_contains(parent, inserted))
    throw std::logic_error("invariant violated: inserted ideal does not strictly contain parent");
}

}  // namespace

CGSOutput cgs_iter(const IdealHandle& input, const TermOrdering& ordering,
                   const EngineConfig& config) {
  if (!input.valid()) throw usage_error("cgs_iter: empty input ideal");
  const RingPtr& ring = input.ring();
  if (!(ordering == ring->ordering()))
    throw usage_error("cgs_iter: ordering does not match the ring");

  CGSOutput out;
  out.ring = ring;
  out.input = input;
  out.config = config;
  Stats& stats = out.stats;
  StopWatch total;

  auto finish = [&]() {
    stats.segments = static_cast<long>(out.segments.size());
    stats.total_seconds = total.seconds();
  };

  if (ring->n_params() == 0) {
    // No parameters: one segment over the single (empty) parameter point.
    StopWatch watch;
    auto basis = reduced_groebner_basis(input.generators(), ordering);
    stats.gb_kax.add(watch.seconds());
    stats.iterations = 1;
    out.segments.push_back({IdealHandle(ring, {}), {}, std::move(basis)});
    finish();
    return out;
  }

  std::vector<IdealHandle> todo;
  todo.emplace_back(ring, std::vector<Polynomial>{});
  std::mt19937_64 rng(config.seed);

  auto admit = [&](const IdealHandle& candidate, const IdealHandle& parent) {
    if (candidate.is_unit(&stats)) return;  // empty zero set, nothing to cover
    for (const auto& pending : todo)
      if (ideal_contains(candidate, pending, &stats)) return;
    if (config.check_invariants) check_strictly_above(candidate, parent);
    todo.push_back(candidate);
  };

  while (!todo.empty()) {
    if (stats.iterations >= config.max_iterations) {
      finish();
      throw resource_limit_error("iteration limit reached after " +
                                     std::to_string(stats.iterations) + " iterations",
                                 stats);
    }
    if (total.seconds() > config.max_seconds) {
      finish();
      throw resource_limit_error("time limit exceeded after " +
                                     std::to_string(stats.iterations) + " iterations",
                                 stats);
    }
    ++stats.iterations;

    IdealHandle a = choose_vanishing(todo, config.strategy, rng, &stats);

    // J = I + a, reduced basis in K[A,X].
    std::vector<Polynomial> j_gens = input.generators();
    for (const auto& g : a.generators()) j_gens.push_back(g);
    StopWatch watch;
    auto G = reduced_groebner_basis(std::move(j_gens), ordering);
    stats.gb_kax.add(watch.seconds());
    IdealHandle J = IdealHandle::with_basis(ring, G, G);

    IdealHandle g_a = intersect_with_params(J, &stats);

    if (difference_nonempty(a, g_a, &stats)) {
      // Step 2.5: the specialized ideal is the unit ideal on Z(a) \ Z(gA).
      out.segments.push_back(
          {a, {g_a}, {Polynomial::constant(ring, 1)}});
      admit(squarefree_normalize(g_a, &stats), a);
    } else {
      // Step 2.6: Z(a) = Z(gA); emit the stability segment and branch on
      // the leading-coefficient ideals.
      SegmentBases sb = segment_bases(G, g_a, config.basis_mode, &stats);
      out.segments.push_back({g_a, sb.lc_ideals, sb.basis});

      std::vector<IdealHandle> fresh;
      for (const auto& c_t : sb.lc_ideals) {
        if (ideal_contains(g_a, c_t, &stats)) continue;  // c_t adds nothing
        std::vector<Polynomial> gens = c_t.generators();
        for (const auto& g : g_a.generators()) gens.push_back(g);
        fresh.push_back(squarefree_normalize(IdealHandle(ring, std::move(gens)), &stats));
      }
      for (auto& candidate : minimalize(std::move(fresh), &stats)) admit(candidate, a);
    }

    if (config.check_invariants) check_antichain(todo);
  }

  finish();
  if (config.prune_empty) {
    out = prune_empty_segments(std::move(out));
  }
  return out;
}

CGSOutput prune_empty_segments(CGSOutput out) {
  std::vector<Segment> kept;
  kept.reserve(out.segments.size());
  for (auto& seg : out.segments) {
    // Z(v) \ (union of Z(e_i)) is empty iff the product of the exception
    // ideals lies in the radical of the vanishing ideal.
    IdealHandle product(seg.vanishing.ring(),
                        {Polynomial::constant(seg.vanishing.ring(), 1)});
    for (const auto& e : seg.exceptions) product = ideal_product(product, e);
    if (difference_nonempty(seg.vanishing, product)) kept.push_back(std::move(seg));
  }
  out.segments = std::move(kept);
  out.stats.segments = static_cast<long>(out.segments.size());
  return out;
}

}  // namespace cgs
