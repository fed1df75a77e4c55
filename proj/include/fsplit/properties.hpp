#pragma once

// Structural laws of the Cartier core map, checked on a finite family of
// ideals of one ring: all monomial primes for Stanley-Reisner rings, and
// otherwise I, each <x_i> + I and the homogeneous maximal ideal.

#include <string>
#include <vector>

#include "fsplit/cartier.hpp"

namespace fsplit {

enum class PropertyStatus { pass, fail, skipped };
std::string to_string(PropertyStatus s);

struct PropertyResult {
  std::string name;
  PropertyStatus status = PropertyStatus::skipped;
  std::size_t cases = 0;
  std::string detail;
};

struct PropertyOptions {
  CoreOptions core;
  /// Cap on pairs examined by the two-ideal laws.
  std::size_t max_pairs = 48;
};

/// One result per law, in a fixed order: monotonicity, intersection,
/// sum_of_fixed, compatibility_characterization, core_in_ideal, idempotence,
/// radicality, prime_cores_prime, minimal_primes_fixed, finite_atlas_image.
/// Laws that need F-purity or Stanley-Reisner structure are skipped when the
/// ring lacks it.
std::vector<PropertyResult> check_cartier_properties(const PresentedRing& ring,
                                                     PropertyOptions options = {});

}  // namespace fsplit
