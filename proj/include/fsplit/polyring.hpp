#pragma once

// Exact multivariate polynomial arithmetic over a prime field F_p.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fsplit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: syntax, unknown names, inconsistent rings.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input that parses but violates a precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A computation would produce a monomial above the ring's degree cap.
class DegreeCapError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kMaxVariables = 24;
inline constexpr int kDefaultDegreeCap = 4096;
inline constexpr int kMaxDegreeCap = 65535;

using Coeff = std::uint32_t;

struct Monomial {
  std::array<std::uint16_t, kMaxVariables> exp{};
  std::uint32_t degree = 0;

  static Monomial one() { return {}; }
  static Monomial variable(std::size_t i, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exp[i]; }
  void set(std::size_t i, unsigned value);

  bool divides(const Monomial& other) const;
  bool is_squarefree() const;
  /// Bitmask of variables with nonzero exponent.
  std::uint32_t support() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_gcd(const Monomial& a, const Monomial& b);
/// a / b; requires b | a.
Monomial monomial_quotient(const Monomial& a, const Monomial& b);
/// a / gcd(a, b), the monomial colon a : b.
Monomial monomial_colon(const Monomial& a, const Monomial& b);

struct TermOrder {
  enum class Kind { grevlex, lex, block_elimination };
  Kind kind = Kind::grevlex;
  /// For block_elimination: the first `block` variables are eliminated.
  std::size_t block = 0;
  /// permutation[i] = variable occupying precedence slot i; empty means identity.
  std::vector<std::size_t> permutation;

  static TermOrder grevlex() { return {}; }
  static TermOrder lex() { return {Kind::lex, 0, {}}; }
  static TermOrder elimination(std::size_t k) { return {Kind::block_elimination, k, {}}; }

  bool degree_compatible() const { return kind == Kind::grevlex; }
  friend bool operator==(const TermOrder&, const TermOrder&) = default;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// The polynomial ring F_p[x_1..x_n] with a fixed term order and degree cap.
/// Immutable after construction; share through RingPtr.
class Ring {
 public:
  static RingPtr create(std::uint32_t p, std::vector<std::string> names,
                        TermOrder order = TermOrder::grevlex(),
                        int degree_cap = kDefaultDegreeCap);

  std::uint32_t characteristic() const { return p_; }
  std::size_t num_vars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  const TermOrder& order() const { return order_; }
  int degree_cap() const { return degree_cap_; }

  /// Same ring with a different order or cap.
  RingPtr with_order(TermOrder order) const;
  RingPtr with_degree_cap(int cap) const;
  /// Same coefficients and order kind, variable list replaced.
  RingPtr with_names(std::vector<std::string> names, TermOrder order) const;

  /// Three-way comparison in the term order: negative if a < b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  Monomial multiply(const Monomial& a, const Monomial& b) const;
  void check_degree(std::uint64_t degree) const;

  Coeff reduce(std::int64_t value) const;
  Coeff add(Coeff a, Coeff b) const { return static_cast<Coeff>((std::uint64_t{a} + b) % p_); }
  Coeff sub(Coeff a, Coeff b) const { return static_cast<Coeff>((std::uint64_t{a} + p_ - b) % p_); }
  Coeff mul(Coeff a, Coeff b) const { return static_cast<Coeff>((std::uint64_t{a} * b) % p_); }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff inv(Coeff a) const;

  friend bool same_ring(const Ring& a, const Ring& b);

 private:
  Ring(std::uint32_t p, std::vector<std::string> names, TermOrder order, int cap);

  std::uint32_t p_;
  std::vector<std::string> names_;
  TermOrder order_;
  int degree_cap_;
  std::vector<std::size_t> slot_;  // slot_[k] = variable in precedence slot k
};

bool same_ring(const Ring& a, const Ring& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);
bool is_prime(std::uint64_t n);

struct Term {
  Monomial monomial;
  Coeff coeff = 0;
};

/// Sparse polynomial, terms strictly descending in the ring's term order, no
/// zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial term(RingPtr ring, const Monomial& m, Coeff c = 1);
  /// Sorts, merges and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Trusts that `terms` is already canonical.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// A single nonzero term.
  bool is_term() const { return terms_.size() == 1; }
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  Coeff leading_coeff() const { return terms_.front().coeff; }
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  /// Largest exponent of variable i over all terms.
  unsigned degree_in(std::size_t i) const;

  Polynomial operator-() const;
  Polynomial scaled(Coeff c) const;
  Polynomial times_term(const Monomial& m, Coeff c) const;
  Polynomial monic() const;
  Polynomial pow(std::uint64_t n) const;
  /// f^{p^e}: exponents scaled by p^e, coefficients fixed.
  Polynomial frobenius(unsigned e) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Printed form: descending terms, explicit `*`, `^` exponents, residues in [0, p).
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Exact division a / b; throws if b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Moves f into `target`, sending variable i to var_map[i].
Polynomial remap(const Polynomial& f, const RingPtr& target, std::span<const std::size_t> var_map);

/// Substitutes 1 for the listed variables (which must be absent from target).
Polynomial specialize_to_one(const Polynomial& f, const RingPtr& target,
                             std::span<const std::optional<std::size_t>> var_map);

// Text form. Grammar: sums of products of integers, variable names,
// parenthesized expressions and `^` with non-negative integer exponents.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);
std::string monomial_to_string(const Monomial& m, const Ring& ring);

}  // namespace fsplit
