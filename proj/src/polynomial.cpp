#include "cgs/polynomial.hpp"

#include <algorithm>
#include <limits>

namespace cgs {

namespace {

void check_ring(const RingPtr& r) {
  if (!r) throw usage_error("polynomial without a ring");
}

void check_same(const Polynomial& f, const Polynomial& g) {
  check_ring(f.ring());
  if (!same_ring(f.ring(), g.ring())) throw usage_error("polynomials from different rings");
}

// Sort descending, merge equal power products, drop zero coefficients.
std::vector<Term> normalize(const RingPtr& ring, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.pp.width() != ring->width())
      throw usage_error("term width does not match ring");
  }
  TermOrdering ord = ring->ordering();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.pp, b.pp); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().pp == t.pp) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  check_ring(ring_);
  terms_ = normalize(ring_, std::move(terms));
}

Polynomial Polynomial::constant(RingPtr ring, Rational c) {
  check_ring(ring);
  Polynomial f(ring);
  if (!c.is_zero()) f.terms_.push_back({std::move(c), PowerProduct(ring->width())});
  return f;
}

Polynomial Polynomial::indeterminate(RingPtr ring, std::string_view name, std::int32_t e) {
  check_ring(ring);
  auto idx = ring->index_of(name);
  if (!idx) throw usage_error("unknown indeterminate '" + std::string(name) + "'");
  if (e < 0) throw usage_error("negative exponent");
  Polynomial f(ring);
  if (e == 0) return constant(std::move(ring), 1);
  PowerProduct pp(ring->width());
  pp.set_exponent(*idx, e);
  f.terms_.push_back({Rational(1), std::move(pp)});
  return f;
}

bool Polynomial::pure_parameters() const {
  check_ring(ring_);
  for (const auto& t : terms_)
    if (!cgs::pure_parameters(t.pp, ring_->n_vars())) return false;
  return true;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw usage_error("leading term of the zero polynomial");
  return terms_.front();
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, t.pp.total_degree());
  return d;
}

Polynomial operator-(const Polynomial& f) {
  Polynomial out(f.ring_);
  out.terms_.reserve(f.terms_.size());
  for (const auto& t : f.terms_) out.terms_.push_back({-t.coeff, t.pp});
  return out;
}

// Merge of two descending term lists.
Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  check_same(f, g);
  TermOrdering ord = f.ring()->ordering();
  Polynomial out(f.ring_);
  auto i = f.terms_.begin();
  auto j = g.terms_.begin();
  while (i != f.terms_.end() && j != g.terms_.end()) {
    auto c = ord.compare(i->pp, j->pp);
    if (c == std::strong_ordering::greater) {
      out.terms_.push_back(*i++);
    } else if (c == std::strong_ordering::less) {
      out.terms_.push_back(*j++);
    } else {
      Rational s = i->coeff + j->coeff;
      if (!s.is_zero()) out.terms_.push_back({std::move(s), i->pp});
      ++i;
      ++j;
    }
  }
  out.terms_.insert(out.terms_.end(), i, f.terms_.end());
  out.terms_.insert(out.terms_.end(), j, g.terms_.end());
  return out;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  check_same(f, g);
  std::vector<Term> prod;
  prod.reserve(f.terms_.size() * g.terms_.size());
  for (const auto& a : f.terms_)
    for (const auto& b : g.terms_) prod.push_back({a.coeff * b.coeff, pp_multiply(a.pp, b.pp)});
  return Polynomial(f.ring_, std::move(prod));
}

Polynomial operator*(const Rational& c, const Polynomial& f) {
  Polynomial out(f.ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(f.terms_.size());
  for (const auto& t : f.terms_) out.terms_.push_back({c * t.coeff, t.pp});
  return out;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring_, g.ring_)) return false;
  return f.terms_ == g.terms_;
}

Term leading(const Polynomial& f, const TermOrdering& ord) {
  if (f.is_zero()) throw usage_error("leading term of the zero polynomial");
  if (ord == f.ring()->ordering()) return f.terms().front();
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (ord.greater(t.pp, best->pp)) best = &t;
  return *best;
}

LeadingX leading_x(const Polynomial& f, const TermOrdering& ord) {
  Term lt = leading(f, ord);
  std::size_t n_x = f.ring()->n_vars();
  PowerProduct lx = x_part(lt.pp, n_x);
  std::vector<Term> coeff;
  for (const auto& t : f.terms())
    if (x_part(t.pp, n_x) == lx) coeff.push_back({t.coeff, a_part(t.pp, n_x)});
  return {std::move(lx), Polynomial(f.ring(), std::move(coeff))};
}

Polynomial evaluate_params(const Polynomial& f, const Point& p) {
  const RingPtr& ring = f.ring();
  if (!ring) throw usage_error("polynomial without a ring");
  if (p.coords.size() != ring->n_params())
    throw usage_error("point arity does not match ring parameters");
  std::size_t n_x = ring->n_vars();
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Rational c = t.coeff;
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
      std::int32_t e = t.pp.exponent(n_x + i);
      if (e != 0) c *= pow(p.coords[i], static_cast<unsigned long>(e));
    }
    out.push_back({std::move(c), x_part(t.pp, n_x)});
  }
  return Polynomial(ring, std::move(out));
}

Polynomial partial_derivative(const Polynomial& f, std::string_view name) {
  const RingPtr& ring = f.ring();
  if (!ring) throw usage_error("polynomial without a ring");
  auto idx = ring->index_of(name);
  if (!idx) throw usage_error("unknown indeterminate '" + std::string(name) + "'");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    std::int32_t e = t.pp.exponent(*idx);
    if (e == 0) continue;
    PowerProduct pp = t.pp;
    pp.set_exponent(*idx, e - 1);
    out.push_back({Rational(e) * t.coeff, std::move(pp)});
  }
  return Polynomial(ring, std::move(out));
}

Polynomial power(const Polynomial& f, long e) {
  if (e < 0) throw usage_error("negative exponent");
  const RingPtr& ring = f.ring();
  if (!ring) throw usage_error("polynomial without a ring");
  if (e == 0) return Polynomial::constant(ring, 1);
  // Single term: scale the exponent vector directly.
  if (f.terms().size() == 1) {
    const Term& t = f.terms().front();
    std::vector<std::int32_t> exps(ring->width());
    for (std::size_t i = 0; i < exps.size(); ++i) {
      long v = long(t.pp.exponent(i)) * e;
      if (v > std::numeric_limits<std::int32_t>::max())
        throw usage_error("power product exponent overflow");
      exps[i] = std::int32_t(v);
    }
    return Polynomial(ring, {{pow(t.coeff, static_cast<unsigned long>(e)), PowerProduct(std::move(exps))}});
  }
  Polynomial acc = Polynomial::constant(ring, 1);
  Polynomial base = f;
  long k = e;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

}  // namespace cgs
