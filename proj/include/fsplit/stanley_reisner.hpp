#pragma once

// Simplicial complexes, their Stanley-Reisner ideals, the closed form of the
// Cartier core on monomial primes, and the atlas of the core map.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsplit/cartier.hpp"

namespace fsplit {

inline constexpr std::size_t kDefaultPrimeEnumerationBound = 12;

class SimplicialComplex {
 public:
  /// Facets as vertex bitmasks. Vertices in no facet are non-faces.
  SimplicialComplex(std::vector<std::string> vertices, std::vector<std::uint32_t> facets);

  /// One facet per line, vertices comma-separated; blank lines and `#`
  /// comments are skipped, a line holding only `{}` is the empty facet.
  /// `extra_vertices` declares vertices that lie in no facet.
  static SimplicialComplex parse(std::string_view text,
                                 const std::vector<std::string>& extra_vertices = {});

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::uint32_t>& facets() const { return facets_; }
  bool is_face(std::uint32_t subset) const;
  /// All faces, sorted by (size, bitmask); includes the empty face.
  std::vector<std::uint32_t> faces() const;
  std::vector<std::uint32_t> minimal_nonfaces() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::uint32_t> facets_;
};

/// Squarefree monomials of the minimal non-faces, in a ring whose variables
/// include the complex's vertex names.
Ideal sr_ideal(const SimplicialComplex& complex, const RingPtr& ring);
PresentedRing sr_ring(const SimplicialComplex& complex, std::uint32_t p,
                      int degree_cap = kDefaultDegreeCap);

/// I is zero or a squarefree monomial ideal.
bool is_stanley_reisner(const PresentedRing& ring);
/// Minimal primes when they are available combinatorially (Stanley-Reisner
/// rings, including the regular case).
std::optional<std::vector<MonomialPrime>> monomial_minimal_primes(const PresentedRing& ring);

/// Sum of the minimal primes contained in q.
MonomialPrime closed_form_prime(const PresentedRing& ring, MonomialPrime q);
Ideal core_closed_form(const PresentedRing& ring, MonomialPrime q);

/// Variable subsets whose ideal contains I, sorted by (size, bitmask).
std::vector<MonomialPrime> enumerate_monomial_primes(
    const PresentedRing& ring, std::size_t bound = kDefaultPrimeEnumerationBound);

/// Distinct nonempty sums of the given primes, sorted by (size, bitmask).
std::vector<MonomialPrime> sums_of_primes(const std::vector<MonomialPrime>& primes);

struct AtlasNode {
  MonomialPrime prime;
  MonomialPrime image;
  Certification certification = Certification::heuristic;
  bool fixed = false;
};

struct AtlasGraph {
  RingPtr ring;
  std::vector<MonomialPrime> minimal_primes;
  std::vector<AtlasNode> nodes;

  std::vector<MonomialPrime> image() const;
  std::vector<MonomialPrime> fixed_points() const;
  /// Empty when the image is the set of sums of minimal primes, the map is
  /// idempotent on it and edges preserve containment.
  std::vector<std::string> invariant_violations() const;
  std::string to_dot() const;
};

/// Computes every monomial prime's core along both the closed form and the
/// contraction engine. Disagreement throws std::logic_error. `threads` = 0
/// uses the hardware concurrency.
AtlasGraph core_map_atlas(const PresentedRing& ring, CoreOptions options = {},
                          unsigned threads = 0);

}  // namespace fsplit
