#pragma once

// Ring changes that the Cartier core commutes with: homogenization, adjoining
// a polynomial variable, and restricting a Stanley-Reisner ring to the
// minimal primes inside a monomial prime.

#include <string>

#include "fsplit/cartier.hpp"
#include "fsplit/stanley_reisner.hpp"

namespace fsplit {

/// S and S[t] with t appended as the last variable.
class HomogenizationContext {
 public:
  explicit HomogenizationContext(RingPtr source, std::string t_name = "t_h");

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  std::size_t t_index() const { return source_->num_vars(); }

  /// t^{deg f} f(x / t).
  Polynomial homogenize(const Polynomial& f) const;
  /// t -> 1.
  Polynomial dehomogenize(const Polynomial& f) const;

  /// J^h, generated by the homogenized reduced grevlex basis of J.
  Ideal homogenize_ideal(const Ideal& j) const;
  Ideal dehomogenize_ideal(const Ideal& j) const;
  /// I S[t] as a presented ring; requires homogeneous I.
  PresentedRing extend(const PresentedRing& ring) const;
  /// S[t] / I^h for arbitrary I.
  PresentedRing homogenize_ring(const PresentedRing& ring) const;

 private:
  RingPtr source_;
  RingPtr target_;
};

struct AdjoinVariableCheck {
  /// C_R(J) R[x] = C_{R[x]}(J').
  bool extension_equal = false;
  /// C_{R[x]}(J') intersected with S equals C_R(J).
  bool contraction_equal = false;
  CoreReport base;
  CoreReport extended;
};

/// R[x] = S[x] / I S[x], with the new variable appended last.
struct AdjoinedRing {
  PresentedRing ring;
  std::size_t variable;
};
AdjoinedRing adjoin_variable(const PresentedRing& ring, std::string name = "x_new");
/// J R[x].
Ideal extend_ideal(const Ideal& j, const RingPtr& target);
/// Intersection of an ideal of S[x] with S (x is the last variable).
Ideal contract_last_variable(const Ideal& j, const RingPtr& base);

/// Verifies both equalities for J' sandwiched between J R[x] and
/// J R[x] + <x>; throws ValidationError if the sandwich fails.
AdjoinVariableCheck adjoin_variable_core_check(const PresentedRing& ring, const Ideal& j,
                                               const AdjoinedRing& adjoined, const Ideal& j_prime,
                                               CoreOptions options = {});

/// S / I' with I' the intersection of the minimal primes of I inside q.
PresentedRing restrict_to_contained_minimal_primes(const PresentedRing& ring, MonomialPrime q);

}  // namespace fsplit
