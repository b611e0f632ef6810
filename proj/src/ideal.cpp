#include "cgs/ideal.hpp"

namespace cgs {

namespace {

void check_gens(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  if (!ring) throw usage_error("ideal without a ring");
  for (const auto& g : gens)
    if (!same_ring(g.ring(), ring)) throw usage_error("ideal generator from a different ring");
}

}  // namespace

IdealHandle::IdealHandle(RingPtr ring, std::vector<Polynomial> gens) {
  check_gens(ring, gens);
  st_ = std::make_shared<State>();
  st_->ring = std::move(ring);
  st_->gens = std::move(gens);
}

IdealHandle IdealHandle::with_basis(RingPtr ring, std::vector<Polynomial> gens,
                                    std::vector<Polynomial> basis) {
  check_gens(ring, gens);
  check_gens(ring, basis);
  IdealHandle h(std::move(ring), std::move(gens));
  h.st_->basis = std::move(basis);
  return h;
}

const RingPtr& IdealHandle::ring() const {
  if (!st_) throw usage_error("empty ideal handle");
  return st_->ring;
}

const std::vector<Polynomial>& IdealHandle::generators() const {
  if (!st_) throw usage_error("empty ideal handle");
  return st_->gens;
}

bool IdealHandle::has_cached_basis() const { return st_ && st_->basis.has_value(); }

const std::vector<Polynomial>& IdealHandle::reduced_basis(Stats* stats) const {
  if (!st_) throw usage_error("empty ideal handle");
  if (!st_->basis) {
    StopWatch watch;
    st_->basis = reduced_groebner_basis(st_->gens, st_->ring->ordering());
    if (stats) {
      if (pure_parameters())
        stats->gb_ka.add(watch.seconds());
      else
        stats->gb_kax.add(watch.seconds());
    }
  }
  return *st_->basis;
}

bool IdealHandle::is_unit(Stats* stats) const {
  const auto& b = reduced_basis(stats);
  return b.size() == 1 && b.front().is_constant();
}

bool IdealHandle::is_zero_ideal(Stats* stats) const { return reduced_basis(stats).empty(); }

bool IdealHandle::pure_parameters() const {
  if (!st_) throw usage_error("empty ideal handle");
  for (const auto& g : st_->gens)
    if (!g.pure_parameters()) return false;
  return true;
}

int IdealHandle::cached_dimension() const {
  if (!st_) throw usage_error("empty ideal handle");
  return st_->dim;
}

void IdealHandle::set_cached_dimension(int d) const { st_->dim = d; }

}  // namespace cgs
