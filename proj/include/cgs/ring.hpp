#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgs/errors.hpp"

namespace cgs {

enum class BlockOrder { Lex, DegRevLex };

std::string to_string(BlockOrder o);
std::optional<BlockOrder> block_order_from_string(std::string_view text);

// Exponent vector over the combined indeterminates of a ring.
// Layout: the N_X main variables first, then the N_A parameters.
class PowerProduct {
 public:
  PowerProduct() = default;
  explicit PowerProduct(std::size_t width) : e_(width, 0) {}
  PowerProduct(std::initializer_list<std::int32_t> e) : e_(e) {}
  explicit PowerProduct(std::vector<std::int32_t> e) : e_(std::move(e)) {}

  std::size_t width() const { return e_.size(); }
  std::int32_t exponent(std::size_t i) const { return e_.at(i); }
  void set_exponent(std::size_t i, std::int32_t v) {
    if (v < 0) throw usage_error("PowerProduct: negative exponent");
    e_.at(i) = v;
  }
  const std::vector<std::int32_t>& exponents() const { return e_; }

  long total_degree() const {
    long d = 0;
    for (auto v : e_) d += v;
    return d;
  }
  bool is_one() const {
    for (auto v : e_) if (v != 0) return false;
    return true;
  }

  friend bool operator==(const PowerProduct&, const PowerProduct&) = default;

 private:
  std::vector<std::int32_t> e_;
};

PowerProduct pp_multiply(const PowerProduct& s, const PowerProduct& t);
// True iff t divides s (componentwise s >= t).
bool pp_divides(const PowerProduct& s, const PowerProduct& t);
PowerProduct pp_lcm(const PowerProduct& s, const PowerProduct& t);
// s / t; requires t | s.
PowerProduct pp_quotient(const PowerProduct& s, const PowerProduct& t);
bool pp_coprime(const PowerProduct& s, const PowerProduct& t);

// Degree in the first n_x positions only.
long x_degree(const PowerProduct& s, std::size_t n_x);
// Copy with all parameter (resp. variable) exponents cleared.
PowerProduct x_part(const PowerProduct& s, std::size_t n_x);
PowerProduct a_part(const PowerProduct& s, std::size_t n_x);
bool pure_parameters(const PowerProduct& s, std::size_t n_x);

// Block elimination ordering: the X block dominates, each block compared
// lex or degrevlex on its own.
class TermOrdering {
 public:
  TermOrdering(std::size_t n_x, BlockOrder order_x, BlockOrder order_a)
      : n_x_(n_x), x_(order_x), a_(order_a) {}

  std::size_t n_x() const { return n_x_; }
  BlockOrder order_x() const { return x_; }
  BlockOrder order_a() const { return a_; }

  std::strong_ordering compare(const PowerProduct& s, const PowerProduct& t) const;
  bool less(const PowerProduct& s, const PowerProduct& t) const {
    return compare(s, t) == std::strong_ordering::less;
  }
  bool greater(const PowerProduct& s, const PowerProduct& t) const {
    return compare(s, t) == std::strong_ordering::greater;
  }

  friend bool operator==(const TermOrdering&, const TermOrdering&) = default;

 private:
  std::size_t n_x_;
  BlockOrder x_;
  BlockOrder a_;
};

// K[A, X] with named indeterminates. Names are unique identifiers.
class RingSpec {
 public:
  RingSpec(std::vector<std::string> variables, std::vector<std::string> parameters,
           BlockOrder order_x = BlockOrder::Lex, BlockOrder order_a = BlockOrder::DegRevLex);

  std::size_t n_vars() const { return vars_.size(); }
  std::size_t n_params() const { return params_.size(); }
  std::size_t width() const { return vars_.size() + params_.size(); }

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<std::string>& parameters() const { return params_; }

  // Combined index: variables first, then parameters.
  const std::string& name(std::size_t i) const;
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool is_parameter(std::size_t i) const { return i >= vars_.size(); }

  BlockOrder order_x() const { return order_x_; }
  BlockOrder order_a() const { return order_a_; }
  TermOrdering ordering() const { return TermOrdering(vars_.size(), order_x_, order_a_); }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  std::vector<std::string> vars_;
  std::vector<std::string> params_;
  BlockOrder order_x_;
  BlockOrder order_a_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

inline RingPtr make_ring(std::vector<std::string> variables, std::vector<std::string> parameters,
                         BlockOrder order_x = BlockOrder::Lex,
                         BlockOrder order_a = BlockOrder::DegRevLex) {
  return std::make_shared<const RingSpec>(std::move(variables), std::move(parameters), order_x,
                                          order_a);
}

// Shared-pointer fast path, content comparison otherwise.
inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace cgs
