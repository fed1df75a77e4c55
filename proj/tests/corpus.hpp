#pragma once

// Test corpus: simplicial complexes on up to five vertices and low-degree
// hypersurfaces on up to three variables.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace fsplit::testing {

inline const std::vector<std::uint32_t> kCorpusPrimes{2, 3, 5};

struct ComplexCase {
  std::vector<std::string> vertices;
  std::vector<std::uint32_t> facets;

  std::string label() const {
    std::string out = "[";
    for (std::size_t k = 0; k < facets.size(); ++k) {
      if (k) out += " ";
      out += "{";
      bool first = true;
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!((facets[k] >> i) & 1u)) continue;
        if (!first) out += ",";
        out += vertices[i];
        first = false;
      }
      out += "}";
    }
    return out + "] on " + std::to_string(vertices.size()) + " vertices";
  }
};

inline std::vector<std::string> vertex_names(std::size_t n) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f"};
  return {names, names + n};
}

inline std::vector<std::uint32_t> canonical_facets(const std::vector<std::uint32_t>& facets,
                                                   std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::uint32_t> best;
  do {
    std::vector<std::uint32_t> image;
    for (auto f : facets) {
      std::uint32_t g = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if ((f >> i) & 1u) g |= 1u << perm[i];
      }
      image.push_back(g);
    }
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = image;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool is_antichain_extension(const std::vector<std::uint32_t>& chosen, std::uint32_t s) {
  return std::none_of(chosen.begin(), chosen.end(), [s](std::uint32_t c) {
    return (c & s) == c || (c & s) == s;
  });
}

/// Every non-void complex on vertex set {0..n-1}, one per isomorphism class.
/// Vertices outside every facet are non-faces.
inline std::vector<ComplexCase> complexes_up_to_isomorphism(std::size_t n) {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::uint32_t> chosen;
  const std::uint32_t subsets = 1u << n;
  auto walk = [&](auto&& self, std::uint32_t next) -> void {
    if (!chosen.empty()) seen.insert(canonical_facets(chosen, n));
    for (std::uint32_t s = next; s < subsets; ++s) {
      if (!is_antichain_extension(chosen, s)) continue;
      chosen.push_back(s);
      self(self, s + 1);
      chosen.pop_back();
    }
  };
  walk(walk, 0);
  std::vector<ComplexCase> out;
  for (const auto& facets : seen) out.push_back({vertex_names(n), facets});
  return out;
}

/// All isomorphism classes on 1..4 vertices.
inline std::vector<ComplexCase> small_complexes() {
  std::vector<ComplexCase> out;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto batch = complexes_up_to_isomorphism(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

/// Distinct random complexes on n vertices, reproducible from the seed.
inline std::vector<ComplexCase> random_complexes(std::size_t n, std::size_t count,
                                                 std::uint32_t seed = 20260915) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::uint32_t> subset(1, (1u << n) - 1);
  std::uniform_int_distribution<int> how_many(1, static_cast<int>(n) + 1);
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<ComplexCase> out;
  while (out.size() < count) {
    std::vector<std::uint32_t> raw;
    for (int k = how_many(rng); k > 0; --k) raw.push_back(subset(rng));
    std::vector<std::uint32_t> facets;
    for (auto s : raw) {
      const bool dominated = std::any_of(raw.begin(), raw.end(), [s](std::uint32_t t) {
        return t != s && (s & t) == s;
      });
      if (!dominated && std::find(facets.begin(), facets.end(), s) == facets.end()) facets.push_back(s);
    }
    std::sort(facets.begin(), facets.end());
    if (seen.insert(canonical_facets(facets, n)).second) out.push_back({vertex_names(n), facets});
  }
  return out;
}

struct HypersurfaceCase {
  std::string vars;
  std::string f;
};

/// Degree at most three on at most three variables.
inline const std::vector<HypersurfaceCase>& hypersurfaces() {
  static const std::vector<HypersurfaceCase> cases{
      {"x", "x"},
      {"x", "x^2"},
      {"x", "x^3"},
      {"x", "x^2 + x"},
      {"x,y", "x*y"},
      {"x,y", "x^2 + y^2"},
      {"x,y", "y^2 - x^3"},
      {"x,y", "x*y*(x + y)"},
      {"x,y", "x^3 + y^3"},
      {"x,y", "x^2 - y"},
      {"x,y", "x*y - 1"},
      {"x,y,z", "x*y - z^2"},
      {"x,y,z", "x*y*z"},
      {"x,y,z", "x^2 + y^2 + z^2"},
      {"x,y,z", "x^3 + y^3 + z^3"},
      {"x,y,z", "x^2*y - z^2"},
      {"x,y,z", "y^2*z - x^3 - x*z^2"},
      {"x,y,z", "x*y - z^3"},
  };
  return cases;
}

}  // namespace fsplit::testing
