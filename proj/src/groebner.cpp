#include "cgs/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace cgs {

namespace {

Polynomial monomial(const RingPtr& ring, Rational c, PowerProduct pp) {
  return Polynomial(ring, {{std::move(c), std::move(pp)}});
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const TermOrdering& ord) {
  const RingPtr& ring = f.ring();
  if (!ring) throw usage_error("normal_form: polynomial without a ring");
  Polynomial tail(ring);
  Polynomial p = f;
  while (!p.is_zero()) {
    Term lt = leading(p, ord);
    const Polynomial* reducer = nullptr;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (pp_divides(lt.pp, leading(g, ord).pp)) {
        reducer = &g;
        break;
      }
    }
    if (reducer) {
      Term gl = leading(*reducer, ord);
      p = p - monomial(ring, lt.coeff / gl.coeff, pp_quotient(lt.pp, gl.pp)) * *reducer;
    } else {
      Polynomial m = monomial(ring, lt.coeff, lt.pp);
      tail = tail + m;
      p = p - m;
    }
  }
  return tail;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrdering& ord) {
  if (f.is_zero() || g.is_zero()) throw usage_error("s_polynomial of the zero polynomial");
  Term lf = leading(f, ord);
  Term lg = leading(g, ord);
  PowerProduct l = pp_lcm(lf.pp, lg.pp);
  const RingPtr& ring = f.ring();
  Polynomial mf = monomial(ring, Rational(1) / lf.coeff, pp_quotient(l, lf.pp));
  Polynomial mg = monomial(ring, Rational(1) / lg.coeff, pp_quotient(l, lg.pp));
  return mf * f - mg * g;
}

namespace {

struct PairEntry {
  PowerProduct lcm;
  long deg;
  std::size_t i, j;  // i < j
};

struct PairLess {
  const TermOrdering* ord;
  bool operator()(const PairEntry& a, const PairEntry& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    auto c = ord->compare(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

std::vector<Polynomial> reduced_groebner_basis(std::vector<Polynomial> gens,
                                               const TermOrdering& ord) {
  std::vector<Polynomial> G;
  for (auto& f : gens)
    if (!f.is_zero()) G.push_back(std::move(f));
  if (G.empty()) return {};

  std::set<PairEntry, PairLess> queue(PairLess{&ord});
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    PowerProduct l = pp_lcm(leading(G[i], ord).pp, leading(G[j], ord).pp);
    long d = l.total_degree();
    queue.insert({std::move(l), d, i, j});
    pending.insert({i, j});
  };
  for (std::size_t j = 1; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) push_pair(i, j);

  while (!queue.empty()) {
    PairEntry e = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({e.i, e.j});

    PowerProduct li = leading(G[e.i], ord).pp;
    PowerProduct lj = leading(G[e.j], ord).pp;
    if (pp_coprime(li, lj)) continue;  // product criterion
    // Chain criterion: some k with LPP_k | lcm and both mixed pairs done.
    bool skip = false;
    for (std::size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == e.i || k == e.j) continue;
      if (!pp_divides(e.lcm, leading(G[k], ord).pp)) continue;
      auto ik = std::minmax(e.i, k);
      auto jk = std::minmax(e.j, k);
      if (!pending.count({ik.first, ik.second}) && !pending.count({jk.first, jk.second}))
        skip = true;
    }
    if (skip) continue;

    Polynomial h = normal_form(s_polynomial(G[e.i], G[e.j], ord), G, ord);
    if (h.is_zero()) continue;
    G.push_back(std::move(h));
    for (std::size_t i = 0; i + 1 < G.size(); ++i) push_pair(i, G.size() - 1);
  }

  // Minimalize: ascending by LPP, keep those not divisible by a kept LPP.
  std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(leading(a, ord).pp, leading(b, ord).pp);
  });
  std::vector<Polynomial> minimal;
  for (auto& g : G) {
    PowerProduct lp = leading(g, ord).pp;
    bool divisible = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& k) {
      return pp_divides(lp, leading(k, ord).pp);
    });
    if (!divisible) minimal.push_back(std::move(g));
  }

  // Interreduce tails and scale monic.
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    Polynomial h = normal_form(minimal[i], others, ord);
    reduced.push_back((Rational(1) / leading(h, ord).coeff) * h);
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(leading(a, ord).pp, leading(b, ord).pp);
  });
  return reduced;
}

bool is_groebner_basis(std::span<const Polynomial> basis, const TermOrdering& ord) {
  std::vector<Polynomial> G;
  for (const auto& f : basis)
    if (!f.is_zero()) G.push_back(f);
  for (std::size_t j = 1; j < G.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!normal_form(s_polynomial(G[i], G[j], ord), G, ord).is_zero()) return false;
    }
  }
  return true;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g, const TermOrdering& ord) {
  if (g.is_zero()) throw usage_error("divide_exact: division by zero");
  const RingPtr& ring = f.ring();
  if (!ring) throw usage_error("divide_exact: polynomial without a ring");
  Polynomial q(ring);
  Polynomial p = f;
  Term lg = leading(g, ord);
  while (!p.is_zero()) {
    Term lt = leading(p, ord);
    if (!pp_divides(lt.pp, lg.pp)) throw usage_error("divide_exact: not divisible");
    Polynomial m = monomial(ring, lt.coeff / lg.coeff, pp_quotient(lt.pp, lg.pp));
    q = q + m;
    p = p - m * g;
  }
  return q;
}

}  // namespace cgs
