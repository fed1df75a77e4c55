#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "fsplit/ideal.hpp"

namespace fsplit {

/// R = S/I with S = F_p[x_1..x_n]. Ideals of R are handled as lifts to S
/// that contain I.
class PresentedRing {
 public:
  /// Throws ValidationError if the defining ideal is the unit ideal.
  explicit PresentedRing(Ideal defining);
  static PresentedRing regular(RingPtr ambient) { return PresentedRing(Ideal::zero(std::move(ambient))); }

  const RingPtr& ambient() const { return defining_.ring(); }
  const Ideal& defining_ideal() const { return defining_; }
  std::uint32_t characteristic() const { return ambient()->characteristic(); }
  bool graded() const { return graded_; }
  bool is_regular() const { return defining_.is_zero(); }

  /// J + I.
  Ideal normalize(const Ideal& j) const;
  /// The homogeneous maximal ideal <x_1, ..., x_n>.
  Ideal maximal_ideal() const;

  /// Compute-once storage for per-level Fedder multipliers.
  Ideal cached_multiplier(unsigned e, const std::function<Ideal()>& compute) const;

 private:
  struct MultiplierCache {
    std::mutex mutex;
    std::map<unsigned, Ideal> by_level;
  };

  Ideal defining_;
  bool graded_ = true;
  std::shared_ptr<MultiplierCache> cache_;
};

}  // namespace fsplit
