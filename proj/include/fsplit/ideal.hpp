#pragma once

// Ideals of F_p[x_1..x_n]: Groebner bases, membership, colon, intersection,
// saturation, and monomial fast paths.

#include <atomic>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "fsplit/polyring.hpp"

namespace fsplit {

/// Reduced Groebner basis: monic, auto-reduced, sorted by ascending leading
/// monomial. Unique for a given ideal and term order.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> elements;
};

enum class MonomialFlag { monomial, not_monomial, unknown };

class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {});

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring)); }
  static Ideal unit(RingPtr ring);
  /// Wraps a basis already known to be reduced; seeds the cache.
  static Ideal from_basis(GroebnerBasis basis);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  /// Reduced basis, computed at most once per ideal value (copies share it).
  const GroebnerBasis& basis() const;
  bool has_cached_basis() const;

  /// Cheap check: every generator is a single term.
  bool has_monomial_generators() const { return monomial_gens_; }
  MonomialFlag monomial_flag() const;
  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const;

  /// "<g1, g2, ...>" over the sorted reduced basis.
  std::string to_string() const;
  std::vector<std::string> basis_strings() const;

 private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<GroebnerBasis> basis;
    std::atomic<bool> ready{false};
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  bool monomial_gens_ = true;
  std::shared_ptr<Cache> cache_;
};

GroebnerBasis groebner_basis(const Ideal& ideal);
/// Buchberger on raw generators; returns the reduced basis.
std::vector<Polynomial> reduced_groebner_basis(const RingPtr& ring, std::vector<Polynomial> gens);

/// Remainder of full reduction; zero iff f lies in the ideal of `basis`.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

bool contains(const Ideal& ideal, const Polynomial& f);
/// Every generator of a reduces to zero modulo b.
bool ideal_leq(const Ideal& a, const Ideal& b);
bool ideal_equal(const Ideal& a, const Ideal& b);

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& a, unsigned n);
Ideal intersect(const Ideal& a, const Ideal& b);
/// a : b. Throws ValidationError when b is the zero ideal.
Ideal colon(const Ideal& a, const Ideal& b);
Ideal colon(const Ideal& a, const Polynomial& g);
/// a : g^infinity.
Ideal saturate(const Ideal& a, const Polynomial& g);

/// Moves an ideal into another ring along a variable map.
Ideal remap(const Ideal& ideal, const RingPtr& target, std::span<const std::size_t> var_map);
/// Intersection with the subring on the variables after the first `k`. The
/// ideal's ring must use TermOrder::elimination(k); `target` is the ring on
/// the surviving variables, in order.
Ideal eliminate_leading(const Ideal& ideal, std::size_t k, const RingPtr& target);

/// A prime generated by a subset of the variables; the empty subset is the
/// zero ideal.
struct MonomialPrime {
  std::uint32_t variables = 0;

  std::size_t size() const;
  bool contains_variable(std::size_t i) const { return (variables >> i) & 1u; }
  bool operator<=(const MonomialPrime& other) const {
    return (variables & ~other.variables) == 0;
  }
  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;

  Ideal to_ideal(const RingPtr& ring) const;
  std::string to_string(const Ring& ring) const;
  std::vector<std::string> names(const Ring& ring) const;
};

/// Recognizes an ideal generated by variables only.
std::optional<MonomialPrime> as_monomial_prime(const Ideal& ideal);

bool is_squarefree_monomial(const Ideal& ideal);
/// Minimal vertex covers of the generator-support hypergraph. Sorted by
/// (size, bitmask).
std::vector<MonomialPrime> minimal_primes_squarefree(const Ideal& ideal);

}  // namespace fsplit
