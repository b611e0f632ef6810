#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "cgs/errors.hpp"

namespace cgs {

// Exact rational number. Always kept canonical: gcd(num, den) = 1, den > 0.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, coefficients from literals
  Rational(long num, long den) {
    if (den == 0) throw usage_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  static Rational from_string(std::string_view text) {
    try {
      mpq_class v(std::string(text), 10);
      if (v.get_den() == 0) throw usage_error("Rational: zero denominator");
      v.canonicalize();
      Rational r;
      r.v_ = std::move(v);
      return r;
    } catch (const std::invalid_argument&) {
      throw usage_error("Rational: malformed literal '" + std::string(text) + "'");
    }
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string to_string() const { return v_.get_str(); }
  std::string numerator_string() const { return v_.get_num().get_str(); }
  std::string denominator_string() const { return v_.get_den().get_str(); }

  friend Rational operator-(const Rational& a) { return Rational(-a.v_); }
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw usage_error("Rational: division by zero");
    return Rational(a.v_ / b.v_);
  }

  Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
  Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
  Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.v_))); }

  // a^e for e >= 0.
  friend Rational pow(const Rational& a, unsigned long e) {
    if (e == 0) return Rational(1);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), a.v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), a.v_.get_den().get_mpz_t(), e);
    Rational r;
    r.v_ = mpq_class(num) / mpq_class(den);
    return r;
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace cgs
