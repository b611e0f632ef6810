#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cgs/rational.hpp"
#include "cgs/ring.hpp"

namespace cgs {

struct Term {
  Rational coeff;
  PowerProduct pp;

  friend bool operator==(const Term&, const Term&) = default;
};

// Multivariate polynomial over Q. Terms are kept sorted strictly decreasing
// under the ring's ordering, coefficients nonzero; the zero polynomial has no
// terms. The leading term is terms().front().
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, Rational c);
  static Polynomial indeterminate(RingPtr ring, std::string_view name, std::int32_t e = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].pp.is_one()); }
  // True when no term involves a main variable (element of K[A]).
  bool pure_parameters() const;

  const Term& leading_term() const;
  long total_degree() const;  // -1 for the zero polynomial

  friend Polynomial operator-(const Polynomial& f);
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Rational& c, const Polynomial& f);

  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Parameter values, one per ring parameter, in declaration order.
struct Point {
  std::vector<Rational> coords;

  friend bool operator==(const Point&, const Point&) = default;
};

// Leading term under an arbitrary ordering (defaults elsewhere to the ring's).
Term leading(const Polynomial& f, const TermOrdering& ord);

struct LeadingX {
  PowerProduct lpp_x;  // X part of LPP(f), parameter exponents zero
  Polynomial lc_x;     // coefficient of lpp_x as an element of K[A]
};
// Requires an elimination ordering (X block dominant), which every
// TermOrdering here is. f must be nonzero.
LeadingX leading_x(const Polynomial& f, const TermOrdering& ord);

// Substitute parameter values; result lives in the same ring with all
// parameter exponents zero.
Polynomial evaluate_params(const Polynomial& f, const Point& p);

Polynomial partial_derivative(const Polynomial& f, std::string_view name);

Polynomial power(const Polynomial& f, long e);

// Text form: terms in decreasing ring order, "-" for negative coefficients,
// explicit "*", "^" for exponents > 1, unit coefficients suppressed.
std::string render(const Polynomial& f);
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace cgs
