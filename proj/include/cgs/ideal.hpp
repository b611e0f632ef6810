#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cgs/groebner.hpp"
#include "cgs/polynomial.hpp"
#include "cgs/stats.hpp"

namespace cgs {

// Ideal of the ring, held by generators with a lazily computed reduced
// Groebner basis and derived facts cached behind a shared state. Copies are
// shallow; the cache fills at most once.
class IdealHandle {
 public:
  IdealHandle() = default;
  IdealHandle(RingPtr ring, std::vector<Polynomial> gens);

  // Wraps generators whose reduced basis is already known (skips recompute).
  static IdealHandle with_basis(RingPtr ring, std::vector<Polynomial> gens,
                                std::vector<Polynomial> basis);

  bool valid() const { return st_ != nullptr; }
  const RingPtr& ring() const;
  const std::vector<Polynomial>& generators() const;

  bool has_cached_basis() const;
  // Reduced Groebner basis under the ring ordering. Computing it on first
  // call books one gb_ka (all generators in K[A]) or gb_kax operation.
  const std::vector<Polynomial>& reduced_basis(Stats* stats = nullptr) const;

  bool is_unit(Stats* stats = nullptr) const;
  bool is_zero_ideal(Stats* stats = nullptr) const;
  // True when every generator lies in K[A].
  bool pure_parameters() const;

  // Cache slot used by dimension(); -2 means unset.
  int cached_dimension() const;
  void set_cached_dimension(int d) const;

  // Stable identity of the shared state, for memo tables.
  const void* key() const { return st_.get(); }

 private:
  struct State {
    RingPtr ring;
    std::vector<Polynomial> gens;
    std::optional<std::vector<Polynomial>> basis;
    int dim = -2;
  };
  std::shared_ptr<State> st_;
};

}  // namespace cgs
