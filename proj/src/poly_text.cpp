#include <cctype>
#include <string>

#include "cgs/polynomial.hpp"

namespace cgs {

namespace {

// Grammar:
//   poly   := '-'? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := ident | nat ('/' nat)? | '(' poly ')'
// Whitespace is insignificant.
class Parser {
 public:
  Parser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  Polynomial run() {
    Polynomial f = poly();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return f;
  }

 private:
  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw parse_error(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Polynomial poly() {
    bool neg = accept('-');
    Polynomial f = term();
    if (neg) f = -f;
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        f = f + term();
      } else if (c == '-') {
        ++pos_;
        f = f - term();
      } else {
        return f;
      }
    }
  }

  Polynomial term() {
    Polynomial f = factor();
    while (accept('*')) f = f * factor();
    return f;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (accept('^')) return power(b, nat("exponent"));
    return b;
  }

  Polynomial base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial f = poly();
      expect(')');
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (accept('/')) {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits after '/'");
        std::string den = digits();
        try {
          return Polynomial::constant(ring_, Rational::from_string(num + "/" + den));
        } catch (const usage_error&) {
          fail("zero denominator");
        }
      }
      return Polynomial::constant(ring_, Rational::from_string(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = ident();
      if (!ring_->index_of(name)) fail("unknown indeterminate '" + name + "'");
      return Polynomial::indeterminate(ring_, name);
    }
    fail(pos_ >= text_.size() ? "unexpected end of input" : "unexpected character");
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++pos_;
      } else {
        break;
      }
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  long nat(const char* what) {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
    std::string d = digits();
    if (d.size() > 6) fail(std::string(what) + " too large");
    return std::stol(d);
  }
};

// Parameters first, then variables, each block in declaration order.
std::string render_pp(const PowerProduct& pp, const RingSpec& ring) {
  std::string out;
  auto emit = [&](std::size_t i) {
    std::int32_t e = pp.exponent(i);
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += ring.name(i);
    if (e > 1) out += "^" + std::to_string(e);
  };
  for (std::size_t i = 0; i < ring.n_params(); ++i) emit(ring.n_vars() + i);
  for (std::size_t i = 0; i < ring.n_vars(); ++i) emit(i);
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  if (!ring) throw usage_error("parse_polynomial: null ring");
  return Parser(text, ring).run();
}

std::string render(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const RingSpec& ring = *f.ring();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool neg = t.coeff.sign() < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    Rational a = abs(t.coeff);
    std::string pp = render_pp(t.pp, ring);
    if (pp.empty()) {
      out += a.to_string();
    } else if (a.is_one()) {
      out += pp;
    } else {
      out += a.to_string() + "*" + pp;
    }
  }
  return out;
}

}  // namespace cgs
