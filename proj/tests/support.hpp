#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cgs/ideal.hpp"
#include "cgs/polynomial.hpp"
#include "cgs/toolkit.hpp"

namespace ts {

using namespace cgs;

// Ring of the two-circles example: Q[c,r][x,y], full lex, x>y>c>r.
inline RingPtr circles_ring() {
  return make_ring({"x", "y"}, {"c", "r"}, BlockOrder::Lex, BlockOrder::Lex);
}

inline Polynomial poly(const RingPtr& r, std::string_view text) {
  return parse_polynomial(text, r);
}

// Power product spelled as a monomial, e.g. "x^2*y".
inline PowerProduct pp(const RingPtr& r, std::string_view text) {
  return poly(r, text).leading_term().pp;
}

inline std::vector<Polynomial> polys(const RingPtr& r,
                                     std::initializer_list<std::string_view> texts) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(poly(r, t));
  return out;
}

inline IdealHandle ideal(const RingPtr& r, std::initializer_list<std::string_view> texts) {
  return IdealHandle(r, polys(r, texts));
}

inline bool same_ideal(const IdealHandle& a, const IdealHandle& b) {
  return ideal_contains(a, b) && ideal_contains(b, a);
}

inline std::vector<std::string> rendered(const std::vector<Polynomial>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(render(f));
  return out;
}

inline std::vector<Polynomial> circles_gens(const RingPtr& r) {
  return polys(r, {"x^2 + y^2 - 1", "(x - c)^2 + y^2 - r"});
}

inline Rational random_coeff(std::mt19937_64& rng, long span) {
  long num = static_cast<long>(rng() % (2 * span + 1)) - span;
  long den = 1 + static_cast<long>(rng() % 3);
  return Rational(num, den);
}

inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& r, int max_terms, int max_deg,
                              long span = 5) {
  int n_terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
  std::vector<Term> terms;
  for (int i = 0; i < n_terms; ++i) {
    PowerProduct p(r->width());
    long budget = static_cast<long>(rng() % static_cast<unsigned>(max_deg + 1));
    for (long d = 0; d < budget; ++d) {
      std::size_t idx = rng() % r->width();
      p.set_exponent(idx, p.exponent(idx) + 1);
    }
    terms.push_back({random_coeff(rng, span), p});
  }
  return Polynomial(r, std::move(terms));
}

inline Polynomial random_nonzero_poly(std::mt19937_64& rng, const RingPtr& r, int max_terms,
                                      int max_deg, long span = 5) {
  for (;;) {
    Polynomial f = random_poly(rng, r, max_terms, max_deg, span);
    if (!f.is_zero()) return f;
  }
}

inline Point random_point(std::mt19937_64& rng, std::size_t n_params, long span = 5) {
  Point p;
  for (std::size_t i = 0; i < n_params; ++i) p.coords.push_back(random_coeff(rng, span));
  return p;
}

}  // namespace ts
