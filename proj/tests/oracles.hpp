#pragma once

// Reference computations that share no code path with the engine beyond
// polynomial arithmetic.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "corpus.hpp"
#include "support.hpp"

namespace fsplit::testing {

// ---------------------------------------------------------- face rings

inline std::uint32_t full_mask(std::size_t n) { return (1u << n) - 1; }

/// Minimal primes of a face ring are the complements of its facets.
inline std::vector<std::uint32_t> oracle_minimal_primes(const ComplexCase& c) {
  std::vector<std::uint32_t> out;
  for (auto f : c.facets) out.push_back(full_mask(c.vertices.size()) & ~f);
  return out;
}

/// q contains the face ideal iff it contains the complement of a facet.
inline std::vector<std::uint32_t> oracle_monomial_primes(const ComplexCase& c) {
  const auto mins = oracle_minimal_primes(c);
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 0; q <= full_mask(c.vertices.size()); ++q) {
    for (auto m : mins) {
      if ((m & q) == m) {
        out.push_back(q);
        break;
      }
    }
  }
  return out;
}

/// Sum of the minimal primes contained in q.
inline std::uint32_t oracle_closed_form(const ComplexCase& c, std::uint32_t q) {
  std::uint32_t out = 0;
  for (auto m : oracle_minimal_primes(c)) {
    if ((m & q) == m) out |= m;
  }
  return out;
}

inline Ideal mask_ideal(const RingPtr& r, std::uint32_t mask) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < r->num_vars(); ++i) {
    if ((mask >> i) & 1u) gens.push_back(Polynomial::variable(r, i));
  }
  return Ideal(r, std::move(gens));
}

// --------------------------------------------------------- Fermat cubic

/// Fedder at p for x^3 + y^3 + z^3: some term x^{3a} y^{3b} z^{3c} of f^{p-1}
/// has all exponents below p and a multinomial coefficient that is nonzero
/// mod p.
inline bool oracle_fermat_cubic_f_pure(std::uint32_t p) {
  const unsigned n = p - 1;
  std::vector<std::uint64_t> fact(n + 1, 1);
  for (unsigned k = 1; k <= n; ++k) fact[k] = fact[k - 1] * k % p;
  auto inv = [p](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    for (a %= p; e; e >>= 1, a = a * a % p) {
      if (e & 1) r = r * a % p;
    }
    return r;
  };
  for (unsigned a = 0; a <= n; ++a) {
    for (unsigned b = 0; a + b <= n; ++b) {
      const unsigned c = n - a - b;
      if (3 * a >= p || 3 * b >= p || 3 * c >= p) continue;
      const auto coeff = fact[n] * inv(fact[a]) % p * inv(fact[b]) % p * inv(fact[c]) % p;
      if (coeff != 0) return true;
    }
  }
  return false;
}

// ----------------------------------------------------- monomial ideals

using Exps = std::vector<unsigned>;

inline bool oracle_monomial_member(const std::vector<Exps>& gens, const Exps& m) {
  for (const auto& g : gens) {
    bool divides = true;
    for (std::size_t i = 0; i < m.size(); ++i) divides = divides && g[i] <= m[i];
    if (divides) return true;
  }
  return false;
}

/// Is the ideal of `a` inside the ideal of `b`?
inline bool oracle_monomial_leq(const std::vector<Exps>& a, const std::vector<Exps>& b) {
  for (const auto& g : a) {
    if (!oracle_monomial_member(b, g)) return false;
  }
  return true;
}

inline std::vector<Exps> oracle_monomial_bracket(std::vector<Exps> gens, std::uint64_t q) {
  for (auto& g : gens) {
    for (auto& e : g) e = static_cast<unsigned>(e * q);
  }
  return gens;
}

inline std::vector<Exps> oracle_monomial_root(std::vector<Exps> gens, std::uint64_t q) {
  for (auto& g : gens) {
    for (auto& e : g) e = static_cast<unsigned>(e / q);
  }
  return gens;
}

inline Ideal exps_ideal(const RingPtr& r, const std::vector<Exps>& gens) {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) {
    Monomial m;
    for (std::size_t i = 0; i < g.size(); ++i) m.set(i, g[i]);
    polys.push_back(Polynomial::term(r, m));
  }
  return Ideal(r, std::move(polys));
}

// --------------------------------------------- linear-algebra membership

/// For homogeneous generators and homogeneous f of degree d: f lies in the
/// ideal iff it lies in the F_p-span of {m g : deg(m g) = d}. Decided by
/// Gaussian elimination over the monomial coordinates.
inline bool oracle_homogeneous_member(const RingPtr& r, const std::vector<Polynomial>& gens,
                                      const Polynomial& f) {
  if (f.is_zero()) return true;
  const int d = f.total_degree();
  const std::size_t n = r->num_vars();
  std::vector<Monomial> of_degree;
  auto build = [&](auto&& self, std::size_t i, int left, Monomial m) -> void {
    if (i + 1 == n) {
      m.set(i, static_cast<unsigned>(left));
      of_degree.push_back(m);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      Monomial next = m;
      next.set(i, static_cast<unsigned>(k));
      self(self, i + 1, left - k, next);
    }
  };
  std::map<std::vector<std::uint16_t>, std::size_t> column;
  std::vector<std::vector<Coeff>> rows;
  auto row_of = [&](const Polynomial& g) {
    std::vector<Coeff> row(column.size(), 0);
    for (const auto& t : g.terms()) {
      const std::vector<std::uint16_t> key(t.monomial.exp.begin(), t.monomial.exp.begin() + n);
      row[column.at(key)] = t.coeff;
    }
    return row;
  };
  for (int k = 0; k <= d; ++k) {
    of_degree.clear();
    build(build, 0, k, Monomial{});
    if (k == d) {
      for (const auto& m : of_degree) {
        column.emplace(std::vector<std::uint16_t>(m.exp.begin(), m.exp.begin() + n), column.size());
      }
    }
  }
  for (const auto& g : gens) {
    if (g.is_zero() || g.total_degree() > d) continue;
    of_degree.clear();
    build(build, 0, d - g.total_degree(), Monomial{});
    for (const auto& m : of_degree) rows.push_back(row_of(g.times_term(m, 1)));
  }
  // Row-reduce the span, then reduce f against it.
  const std::uint32_t p = r->characteristic();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < column.size() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Coeff scale = r->inv(rows[rank][col]);
    for (auto& v : rows[rank]) v = static_cast<Coeff>(std::uint64_t{v} * scale % p);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == rank || rows[k][col] == 0) continue;
      const Coeff factor = rows[k][col];
      for (std::size_t c = 0; c < column.size(); ++c) {
        rows[k][c] = r->sub(rows[k][c], r->mul(factor, rows[rank][c]));
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  auto target = row_of(f);
  for (std::size_t k = 0; k < rank; ++k) {
    const Coeff factor = target[pivots[k]];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < column.size(); ++c) {
      target[c] = r->sub(target[c], r->mul(factor, rows[k][c]));
    }
  }
  return std::all_of(target.begin(), target.end(), [](Coeff v) { return v == 0; });
}

}  // namespace fsplit::testing
