#pragma once

// Cartier contractions and cores for R = S/I over the full Cartier algebra
// and over the pair algebras C^{a^t}, plus the F-purity and strong
// F-regularity classifiers built on them.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fsplit/frobenius.hpp"

namespace fsplit {

/// Positive rational exponent t = num / den.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  /// Accepts "n", "n/d".
  static Rational parse(std::string_view text);
  /// ceil(t * n) in exact integer arithmetic.
  std::uint64_t ceil_times(std::uint64_t n) const;
  std::string to_string() const;
};

/// phi = Phi_e o F^e_*(s) in Hom_R(F^e_* R, R), s in I^{[p^e]} : I.
class MultiplierMap {
 public:
  /// Throws ValidationError unless s lies in the level-e Fedder multiplier.
  static MultiplierMap make(const PresentedRing& ring, Polynomial s, unsigned e);

  const Polynomial& multiplier() const { return s_; }
  unsigned level() const { return e_; }

 private:
  MultiplierMap(Polynomial s, unsigned e) : s_(std::move(s)), e_(e) {}
  friend MultiplierMap multiplier_compose(const PresentedRing&, const MultiplierMap&,
                                          const MultiplierMap&);

  Polynomial s_;
  unsigned e_;
};

/// phi . psi = phi o F^e_* psi: (s, e) . (t, d) = (s^{p^d} t, e + d). The
/// result is re-checked against the level-(e+d) multiplier; a failure is an
/// engine bug and throws std::logic_error.
MultiplierMap multiplier_compose(const PresentedRing& ring, const MultiplierMap& f,
                                 const MultiplierMap& g);

struct CartierPair {
  Ideal a;
  Rational t;

  /// Validates t > 0, a nonzero, and a not inside I.
  CartierPair(const PresentedRing& ring, Ideal a, Rational t);
  /// ceil(t (p^e - 1)).
  std::uint64_t exponent(std::uint32_t p, unsigned e) const;
};

enum class Certification { closed_form_exact, compatible_to_e, heuristic };
std::string to_string(Certification c);

struct CoreOptions {
  unsigned e_max = 4;
  unsigned window = 2;
};

struct CoreReport {
  Ideal core;
  /// Lifted contractions A_e(J), keyed by level.
  std::map<unsigned, Ideal> contractions;
  /// Partial intersections, keyed by level.
  std::map<unsigned, Ideal> partial;
  /// First level of the final constant run, if the run reached the window.
  std::optional<unsigned> stabilized_at;
  unsigned levels_computed = 0;
  Certification certification = Certification::heuristic;
  /// E for compatible_to_e.
  unsigned certified_to = 0;
  bool f_pure = false;
  std::vector<std::string> warnings;
};

/// Lift of A_e(J): J^{[p^e]} : (I^{[p^e]} : I), with J normalized to J + I.
Ideal cartier_contraction(const PresentedRing& ring, const Ideal& j, unsigned e);

/// Intersects contractions level by level until the partial intersections
/// hold constant for `window` levels or e_max is reached. When they never
/// settle (as for J^{[p^e]} descending to 0 in a regular ring), the candidate
/// is the part of the reduced basis that persists across the last two levels,
/// plus I. The candidate is then certified against the Stanley-Reisner
/// closed form when it applies, else by compatibility at every level up to
/// e_max.
CoreReport cartier_core(const PresentedRing& ring, const Ideal& j, CoreOptions options = {});

/// K is contained in its own level-e contraction, i.e.
/// (I^{[q]} : I) K is contained in K^{[q]}.
bool is_compatible(const PresentedRing& ring, const Ideal& k, unsigned e);

/// Global F-purity: the non-F-pure locus V(root(I^{[p]} : I) + I) is empty.
bool is_f_pure(const PresentedRing& ring);
/// Defining ideal (up to radical, as a lift) of the non-F-pure locus.
Ideal f_pure_locus(const PresentedRing& ring);

struct SplittingAlong {
  bool splits = false;
  /// First level at which c escapes m^{[q]} : (I^{[q]} : I).
  std::optional<unsigned> level;
  unsigned e_max = 0;
};

/// At the homogeneous maximal ideal of a graded ring: some phi in D_e with
/// phi(F^e_* c) = 1 for e <= e_max. A negative answer holds up to e_max only.
SplittingAlong is_f_pure_along(const PresentedRing& ring, const Polynomial& c, unsigned e_max);

/// Cartier core of the homogeneous maximal ideal.
CoreReport splitting_prime(const PresentedRing& ring, CoreOptions options = {});

enum class Tristate { yes, no, unknown };
std::string to_string(Tristate t);

struct RegularityVerdict {
  Tristate answer = Tristate::unknown;
  std::optional<CoreReport> splitting;
  std::string reason;
};

/// Graded rings only. yes when the splitting prime lies in a minimal prime of
/// I, no when it lies in none, unknown when the splitting prime is heuristic.
RegularityVerdict is_strongly_f_regular(const PresentedRing& ring, CoreOptions options = {});

/// Lift of A_{D_e}(J) for D = C^{a^t}: the full contraction, colon
/// a^{ceil(t(p^e-1))}.
Ideal pair_contraction(const PresentedRing& ring, const Ideal& j, const CartierPair& pair,
                       unsigned e);
CoreReport pair_core(const PresentedRing& ring, const Ideal& j, const CartierPair& pair,
                     CoreOptions options = {});
/// Some level e <= e_max splits every point: sum_e root_e(I^{[q]}:I . a^k) + I = S.
bool is_pair_f_pure(const PresentedRing& ring, const CartierPair& pair, unsigned e_max);

}  // namespace fsplit
