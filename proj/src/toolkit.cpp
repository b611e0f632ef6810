#include "cgs/toolkit.hpp"

#include <algorithm>
#include <string>

namespace cgs {

namespace {

void check_same_ring(const IdealHandle& a, const IdealHandle& b) {
  if (!a.valid() || !b.valid()) throw usage_error("empty ideal handle");
  if (!same_ring(a.ring(), b.ring())) throw usage_error("ideals from different rings");
}

// Ring extended by one fresh indeterminate placed on top of the X block.
struct AuxRing {
  RingPtr ring;
  // old combined index i maps to lifted index i < n_x ? i : i + 1 when the
  // fresh variable is appended to the X block; here it is prepended, so old
  // index i maps to i + 1.
  Polynomial lift(const Polynomial& f) const {
    std::vector<Term> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
      PowerProduct pp(ring->width());
      for (std::size_t i = 0; i < t.pp.width(); ++i) pp.set_exponent(i + 1, t.pp.exponent(i));
      out.push_back({t.coeff, std::move(pp)});
    }
    return Polynomial(ring, std::move(out));
  }

  Polynomial drop(const Polynomial& f, const RingPtr& base) const {
    std::vector<Term> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
      if (t.pp.exponent(0) != 0) throw usage_error("cannot drop live auxiliary variable");
      PowerProduct pp(base->width());
      for (std::size_t i = 1; i < t.pp.width(); ++i) pp.set_exponent(i - 1, t.pp.exponent(i));
      out.push_back({t.coeff, std::move(pp)});
    }
    return Polynomial(base, std::move(out));
  }

  Polynomial fresh_var() const { return Polynomial::indeterminate(ring, ring->variables().front()); }
};

// Fresh name not clashing with the base ring.
AuxRing extend_ring(const RingSpec& base) {
  std::string name = "t";
  while (base.index_of(name)) name += "_";
  std::vector<std::string> vars;
  vars.reserve(base.n_vars() + 1);
  vars.push_back(name);
  for (const auto& v : base.variables()) vars.push_back(v);
  // Lex on the extended X block so the fresh variable dominates and can be
  // eliminated; the parameter block keeps its order.
  return AuxRing{make_ring(std::move(vars), base.parameters(), BlockOrder::Lex, base.order_a())};
}

}  // namespace

IdealHandle intersect_with_params(const IdealHandle& j, Stats* stats) {
  if (!j.valid()) throw usage_error("empty ideal handle");
  const auto& basis = j.reduced_basis(stats);
  std::vector<Polynomial> pure;
  for (const auto& g : basis)
    if (g.pure_parameters()) pure.push_back(g);
  return IdealHandle::with_basis(j.ring(), pure, pure);
}

std::vector<PowerProduct> minimal_monomial_basis(std::span<const PowerProduct> pps,
                                                 const TermOrdering& ord) {
  std::vector<PowerProduct> sorted(pps.begin(), pps.end());
  std::sort(sorted.begin(), sorted.end(),
            [&](const PowerProduct& a, const PowerProduct& b) { return ord.less(a, b); });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // Ascending scan: anything divisible by a kept element is redundant.
  std::vector<PowerProduct> minimal;
  for (auto& t : sorted) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const PowerProduct& s) { return pp_divides(t, s); });
    if (!redundant) minimal.push_back(std::move(t));
  }
  std::reverse(minimal.begin(), minimal.end());
  return minimal;
}

bool ideal_contains(const IdealHandle& big, const IdealHandle& small, Stats* stats) {
  check_same_ring(big, small);
  StopWatch watch;
  bool ok = true;
  if (big.key() != small.key()) {
    const auto& basis = big.reduced_basis(stats);
    TermOrdering ord = big.ring()->ordering();
    for (const auto& g : small.generators()) {
      if (!normal_form(g, basis, ord).is_zero()) {
        ok = false;
        break;
      }
    }
  }
  if (stats) stats->contains_check.add(watch.seconds());
  return ok;
}

bool in_radical(const Polynomial& f, const IdealHandle& a) {
  if (!a.valid()) throw usage_error("empty ideal handle");
  if (!same_ring(f.ring(), a.ring())) throw usage_error("polynomial from a different ring");
  if (!f.pure_parameters()) throw usage_error("in_radical expects a pure-parameter polynomial");
  if (f.is_zero()) return true;
  AuxRing aux = extend_ring(*a.ring());
  std::vector<Polynomial> gens;
  const auto& base_gens = a.has_cached_basis() ? a.reduced_basis() : a.generators();
  gens.reserve(base_gens.size() + 1);
  for (const auto& g : base_gens) gens.push_back(aux.lift(g));
  gens.push_back(Polynomial::constant(aux.ring, 1) - aux.fresh_var() * aux.lift(f));
  auto basis = reduced_groebner_basis(std::move(gens), aux.ring->ordering());
  return basis.size() == 1 && basis.front().is_constant();
}

bool difference_nonempty(const IdealHandle& a, const IdealHandle& g, Stats* stats) {
  check_same_ring(a, g);
  StopWatch watch;
  bool nonempty = false;
  if (a.key() != g.key()) {
    for (const auto& f : g.generators()) {
      if (!in_radical(f, a)) {
        nonempty = true;
        break;
      }
    }
  }
  if (stats) stats->emptiness_check.add(watch.seconds());
  return nonempty;
}

Polynomial gcd_poly(const Polynomial& f, const Polynomial& g) {
  if (!f.ring()) throw usage_error("polynomial without a ring");
  if (!same_ring(f.ring(), g.ring())) throw usage_error("polynomials from different rings");
  const RingPtr& ring = f.ring();
  TermOrdering ord = ring->ordering();
  auto monic = [&](const Polynomial& p) { return (Rational(1) / leading(p, ord).coeff) * p; };
  if (f.is_zero() && g.is_zero()) throw usage_error("gcd_poly: both inputs are zero");
  if (f.is_zero()) return monic(g);
  if (g.is_zero()) return monic(f);
  if (f.is_constant() || g.is_constant()) return Polynomial::constant(ring, 1);

  AuxRing aux = extend_ring(*ring);
  Polynomial t = aux.fresh_var();
  Polynomial one = Polynomial::constant(aux.ring, 1);
  auto basis = reduced_groebner_basis({t * aux.lift(f), (one - t) * aux.lift(g)},
                                      aux.ring->ordering());
  // The t-free part generates <f> ∩ <g> = <lcm>, principal, so it is a
  // single monic polynomial.
  Polynomial lcm;
  for (const auto& b : basis) {
    if (b.leading_term().pp.exponent(0) == 0) {
      if (lcm.ring()) throw usage_error("gcd_poly: unexpected intersection basis");
      lcm = aux.drop(b, ring);
    }
  }
  if (!lcm.ring() || lcm.is_zero()) throw usage_error("gcd_poly: empty intersection basis");
  return monic(divide_exact(f * g, lcm, ord));
}

Polynomial squarefree_part(const Polynomial& f) {
  if (!f.ring()) throw usage_error("polynomial without a ring");
  if (f.is_zero()) throw usage_error("squarefree part of the zero polynomial");
  const RingPtr& ring = f.ring();
  TermOrdering ord = ring->ordering();
  if (f.is_constant()) return Polynomial::constant(ring, 1);
  Polynomial d = f;
  for (std::size_t i = 0; i < ring->width(); ++i) {
    Polynomial partial = partial_derivative(f, ring->name(i));
    if (partial.is_zero()) continue;
    d = gcd_poly(d, partial);
  }
  Polynomial out = divide_exact(f, d, ord);
  return (Rational(1) / leading(out, ord).coeff) * out;
}

int dimension(const IdealHandle& a, Stats* stats) {
  if (!a.valid()) throw usage_error("empty ideal handle");
  if (a.cached_dimension() != -2) return a.cached_dimension();
  const RingSpec& ring = *a.ring();
  std::size_t n_x = ring.n_vars();
  std::size_t n_a = ring.n_params();
  if (n_a > 8) throw usage_error("dimension: more than 8 parameters");
  const auto& basis = a.reduced_basis(stats);
  std::vector<PowerProduct> lpps;
  lpps.reserve(basis.size());
  for (const auto& g : basis) {
    if (!g.pure_parameters()) throw usage_error("dimension of an ideal not contained in K[A]");
    lpps.push_back(g.leading_term().pp);
  }
  int best = -1;
  if (!lpps.empty() && lpps.front().is_one()) {
    a.set_cached_dimension(-1);
    return -1;  // unit ideal
  }
  // Largest parameter subset S such that no leading power product is
  // supported entirely inside S.
  for (unsigned mask = 0; mask < (1u << n_a); ++mask) {
    bool independent = true;
    for (const auto& t : lpps) {
      bool inside = true;
      for (std::size_t i = 0; i < n_a && inside; ++i)
        if (t.exponent(n_x + i) > 0 && !(mask & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, __builtin_popcount(mask));
  }
  a.set_cached_dimension(best);
  return best;
}

IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) {
      Polynomial p = f * g;
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
  }
  return IdealHandle(a.ring(), std::move(gens));
}

std::vector<IdealHandle> minimalize(std::vector<IdealHandle> ideals, Stats* stats) {
  std::vector<IdealHandle> kept;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < ideals.size() && !drop; ++j) {
      if (j == i) continue;
      if (!ideal_contains(ideals[i], ideals[j], stats)) continue;  // ideals[j] ⊆ ideals[i]
      if (ideal_contains(ideals[j], ideals[i], stats)) {
        if (j < i) drop = true;  // equal: keep the earlier copy
      } else {
        drop = true;  // strictly contains a smaller member
      }
    }
    if (!drop) kept.push_back(ideals[i]);
  }
  return kept;
}

IdealHandle squarefree_normalize(const IdealHandle& a, Stats* stats) {
  if (!a.valid()) throw usage_error("empty ideal handle");
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size());
  bool changed = false;
  for (const auto& g : a.generators()) {
    if (g.is_zero()) {
      changed = true;
      continue;
    }
    StopWatch watch;
    Polynomial sq = squarefree_part(g);
    if (stats) stats->sqfr.add(watch.seconds());
    if (!(sq == g)) changed = true;
    gens.push_back(std::move(sq));
  }
  if (!changed) return a;
  return IdealHandle(a.ring(), std::move(gens));
}

}  // namespace cgs
