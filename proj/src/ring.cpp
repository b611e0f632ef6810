#include "cgs/ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

namespace cgs {

std::string to_string(BlockOrder o) {
  return o == BlockOrder::Lex ? "lex" : "degrevlex";
}

std::optional<BlockOrder> block_order_from_string(std::string_view text) {
  if (text == "lex") return BlockOrder::Lex;
  if (text == "degrevlex") return BlockOrder::DegRevLex;
  return std::nullopt;
}

namespace {

void check_width(const PowerProduct& s, const PowerProduct& t) {
  if (s.width() != t.width()) throw usage_error("power products from different rings");
}

}  // namespace

PowerProduct pp_multiply(const PowerProduct& s, const PowerProduct& t) {
  check_width(s, t);
  std::vector<std::int32_t> e(s.width());
  for (std::size_t i = 0; i < e.size(); ++i) {
    long v = long(s.exponent(i)) + long(t.exponent(i));
    if (v > std::numeric_limits<std::int32_t>::max())
      throw usage_error("power product exponent overflow");
    e[i] = std::int32_t(v);
  }
  return PowerProduct(std::move(e));
}

bool pp_divides(const PowerProduct& s, const PowerProduct& t) {
  check_width(s, t);
  for (std::size_t i = 0; i < s.width(); ++i)
    if (s.exponent(i) < t.exponent(i)) return false;
  return true;
}

PowerProduct pp_lcm(const PowerProduct& s, const PowerProduct& t) {
  check_width(s, t);
  std::vector<std::int32_t> e(s.width());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(s.exponent(i), t.exponent(i));
  return PowerProduct(std::move(e));
}

PowerProduct pp_quotient(const PowerProduct& s, const PowerProduct& t) {
  check_width(s, t);
  std::vector<std::int32_t> e(s.width());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (s.exponent(i) < t.exponent(i)) throw usage_error("pp_quotient: not divisible");
    e[i] = s.exponent(i) - t.exponent(i);
  }
  return PowerProduct(std::move(e));
}

bool pp_coprime(const PowerProduct& s, const PowerProduct& t) {
  check_width(s, t);
  for (std::size_t i = 0; i < s.width(); ++i)
    if (s.exponent(i) > 0 && t.exponent(i) > 0) return false;
  return true;
}

long x_degree(const PowerProduct& s, std::size_t n_x) {
  long d = 0;
  for (std::size_t i = 0; i < n_x && i < s.width(); ++i) d += s.exponent(i);
  return d;
}

PowerProduct x_part(const PowerProduct& s, std::size_t n_x) {
  std::vector<std::int32_t> e(s.width(), 0);
  for (std::size_t i = 0; i < n_x && i < s.width(); ++i) e[i] = s.exponent(i);
  return PowerProduct(std::move(e));
}

PowerProduct a_part(const PowerProduct& s, std::size_t n_x) {
  std::vector<std::int32_t> e(s.width(), 0);
  for (std::size_t i = n_x; i < s.width(); ++i) e[i] = s.exponent(i);
  return PowerProduct(std::move(e));
}

bool pure_parameters(const PowerProduct& s, std::size_t n_x) {
  for (std::size_t i = 0; i < n_x && i < s.width(); ++i)
    if (s.exponent(i) != 0) return false;
  return true;
}

namespace {

// Compare one block [lo, hi) of two exponent vectors.
std::strong_ordering block_compare(const PowerProduct& s, const PowerProduct& t, std::size_t lo,
                                   std::size_t hi, BlockOrder kind) {
  if (kind == BlockOrder::Lex) {
    for (std::size_t i = lo; i < hi; ++i) {
      if (s.exponent(i) != t.exponent(i))
        return s.exponent(i) < t.exponent(i) ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }
  // degrevlex: compare block degree, then reversed lex on negated exponents.
  long ds = 0, dt = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    ds += s.exponent(i);
    dt += t.exponent(i);
  }
  if (ds != dt) return ds < dt ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t i = hi; i-- > lo;) {
    if (s.exponent(i) != t.exponent(i))
      return s.exponent(i) > t.exponent(i) ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering TermOrdering::compare(const PowerProduct& s, const PowerProduct& t) const {
  check_width(s, t);
  if (s.width() < n_x_) throw usage_error("power product narrower than the X block");
  auto cx = block_compare(s, t, 0, n_x_, x_);
  if (cx != std::strong_ordering::equal) return cx;
  return block_compare(s, t, n_x_, s.width(), a_);
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

RingSpec::RingSpec(std::vector<std::string> variables, std::vector<std::string> parameters,
                   BlockOrder order_x, BlockOrder order_a)
    : vars_(std::move(variables)), params_(std::move(parameters)), order_x_(order_x),
      order_a_(order_a) {
  if (vars_.empty()) throw usage_error("ring needs at least one main variable");
  std::set<std::string> seen;
  for (const auto* list : {&vars_, &params_}) {
    for (const auto& n : *list) {
      if (!valid_identifier(n)) throw usage_error("bad indeterminate name '" + n + "'");
      if (!seen.insert(n).second) throw usage_error("duplicate indeterminate '" + n + "'");
    }
  }
}

const std::string& RingSpec::name(std::size_t i) const {
  if (i < vars_.size()) return vars_[i];
  i -= vars_.size();
  if (i < params_.size()) return params_[i];
  throw usage_error("indeterminate index out of range");
}

std::optional<std::size_t> RingSpec::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  for (std::size_t i = 0; i < params_.size(); ++i)
    if (params_[i] == name) return vars_.size() + i;
  return std::nullopt;
}

}  // namespace cgs
