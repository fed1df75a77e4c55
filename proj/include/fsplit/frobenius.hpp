#pragma once

// Frobenius operators on ideals of S = F_p[x_1..x_n].

#include <cstdint>

#include "fsplit/presented_ring.hpp"

namespace fsplit {

/// q = p^e, checked against the ring's degree cap.
std::uint64_t frobenius_q(const Ring& ring, unsigned e);

/// J^{[p^e]}: generated by the p^e-th powers of generators of J.
Ideal bracket_power(const Ideal& j, unsigned e);

/// The smallest ideal L with K contained in L^{[p^e]}. Each generator is
/// split along the basis {x^a : 0 <= a_i < p^e} of S over S^{p^e}; the
/// coefficient polynomials generate the root. Exact because F_p is perfect
/// with trivial p-th roots.
Ideal frobenius_root(const Ideal& k, unsigned e);

/// I^{[p^e]} : I, whose elements parametrize Hom_R(F^e_* R, R). Equals S when
/// I = 0 or e = 0. Cached per ring and level.
Ideal fedder_multiplier(const PresentedRing& ring, unsigned e);

}  // namespace fsplit
