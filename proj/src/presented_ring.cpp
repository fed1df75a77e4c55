#include "fsplit/presented_ring.hpp"

#include <algorithm>

namespace fsplit {

PresentedRing::PresentedRing(Ideal defining)
    : defining_(std::move(defining)), cache_(std::make_shared<MultiplierCache>()) {
  if (defining_.is_unit()) throw ValidationError("defining ideal is the unit ideal");
  const auto& elements = defining_.basis().elements;
  graded_ = std::all_of(elements.begin(), elements.end(),
                        [](const Polynomial& g) { return g.is_homogeneous(); });
  if (!graded_ && !ambient()->order().degree_compatible()) {
    // A reduced basis for a non-graded order can hide homogeneity.
    Ideal copy = remap(defining_, ambient()->with_order(TermOrder::grevlex()),
                       [&] {
                         std::vector<std::size_t> id(ambient()->num_vars());
                         for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
                         return id;
                       }());
    const auto& graded_basis = copy.basis().elements;
    graded_ = std::all_of(graded_basis.begin(), graded_basis.end(),
                          [](const Polynomial& g) { return g.is_homogeneous(); });
  }
}

Ideal PresentedRing::normalize(const Ideal& j) const {
  if (defining_.is_zero()) return j;
  if (ideal_leq(defining_, j)) return j;
  return sum(j, defining_);
}

Ideal PresentedRing::maximal_ideal() const {
  MonomialPrime all{static_cast<std::uint32_t>((std::uint64_t{1} << ambient()->num_vars()) - 1)};
  return all.to_ideal(ambient());
}

Ideal PresentedRing::cached_multiplier(unsigned e, const std::function<Ideal()>& compute) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->by_level.find(e); it != cache_->by_level.end()) return it->second;
  }
  // Computed outside the lock; concurrent callers may duplicate work but
  // store the same ideal.
  Ideal value = compute();
  std::lock_guard lock(cache_->mutex);
  return cache_->by_level.try_emplace(e, std::move(value)).first->second;
}

}  // namespace fsplit
