#include "fsplit/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace fsplit {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t i, unsigned power) {
  Monomial m;
  m.set(i, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned value) {
  if (value > kMaxDegreeCap) throw DegreeCapError("exponent exceeds representable range");
  degree = degree - exp[i] + value;
  exp[i] = static_cast<std::uint16_t>(value);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree > other.degree) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exp.begin(), exp.end(), [](auto e) { return e <= 1; });
}

std::uint32_t Monomial::support() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exp[i] != 0) mask |= 1u << i;
  }
  return mask;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exp[i] = std::max(a.exp[i], b.exp[i]);
    m.degree += m.exp[i];
  }
  return m;
}

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exp[i] = std::min(a.exp[i], b.exp[i]);
    m.degree += m.exp[i];
  }
  return m;
}

Monomial monomial_quotient(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
  }
  m.degree = a.degree - b.degree;
  return m;
}

Monomial monomial_colon(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exp[i] = a.exp[i] > b.exp[i] ? static_cast<std::uint16_t>(a.exp[i] - b.exp[i]) : 0;
    m.degree += m.exp[i];
  }
  return m;
}

// -------------------------------------------------------------------- Ring

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Ring::Ring(std::uint32_t p, std::vector<std::string> names, TermOrder order, int cap)
    : p_(p), names_(std::move(names)), order_(std::move(order)), degree_cap_(cap) {
  if (!is_prime(p_)) throw ValidationError("characteristic " + std::to_string(p_) + " is not prime");
  if (p_ > (1u << 30)) throw ValidationError("characteristic too large");
  if (names_.size() > kMaxVariables) {
    throw ValidationError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw ParseError("empty variable name");
    if (!seen.insert(n).second) throw ParseError("duplicate variable name '" + n + "'");
  }
  if (degree_cap_ < 1 || degree_cap_ > kMaxDegreeCap) {
    throw ValidationError("degree cap must lie in [1, " + std::to_string(kMaxDegreeCap) + "]");
  }
  if (order_.permutation.empty()) {
    slot_.resize(names_.size());
    std::iota(slot_.begin(), slot_.end(), std::size_t{0});
  } else {
    slot_ = order_.permutation;
    auto sorted = slot_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != i || sorted.size() != names_.size()) {
        throw ValidationError("term order permutation is not a permutation of the variables");
      }
    }
  }
  if (order_.kind == TermOrder::Kind::block_elimination && order_.block > names_.size()) {
    throw ValidationError("elimination block larger than the variable count");
  }
}

RingPtr Ring::create(std::uint32_t p, std::vector<std::string> names, TermOrder order,
                     int degree_cap) {
  return RingPtr(new Ring(p, std::move(names), std::move(order), degree_cap));
}

RingPtr Ring::with_order(TermOrder order) const {
  return create(p_, names_, std::move(order), degree_cap_);
}

RingPtr Ring::with_degree_cap(int cap) const { return create(p_, names_, order_, cap); }

RingPtr Ring::with_names(std::vector<std::string> names, TermOrder order) const {
  return create(p_, std::move(names), std::move(order), degree_cap_);
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

bool same_ring(const Ring& a, const Ring& b) {
  return &a == &b ||
         (a.p_ == b.p_ && a.names_ == b.names_ && a.order_ == b.order_);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(*a, *b)) throw ValidationError("ring mismatch");
}

int Ring::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = names_.size();
  auto revlex = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = hi; k-- > lo;) {
      const auto v = slot_[k];
      if (a.exp[v] != b.exp[v]) return a.exp[v] < b.exp[v] ? 1 : -1;
    }
    return 0;
  };
  switch (order_.kind) {
    case TermOrder::Kind::grevlex:
      if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
      return revlex(0, n);
    case TermOrder::Kind::lex:
      for (std::size_t k = 0; k < n; ++k) {
        const auto v = slot_[k];
        if (a.exp[v] != b.exp[v]) return a.exp[v] < b.exp[v] ? -1 : 1;
      }
      return 0;
    case TermOrder::Kind::block_elimination: {
      const std::size_t k = order_.block;
      std::uint32_t da = 0, db = 0;
      for (std::size_t s = 0; s < k; ++s) {
        da += a.exp[slot_[s]];
        db += b.exp[slot_[s]];
      }
      if (da != db) return da < db ? -1 : 1;
      if (int c = revlex(0, k); c != 0) return c;
      if (a.degree - da != b.degree - db) return a.degree - da < b.degree - db ? -1 : 1;
      return revlex(k, n);
    }
  }
  return 0;
}

void Ring::check_degree(std::uint64_t degree) const {
  if (degree > static_cast<std::uint64_t>(degree_cap_)) {
    throw DegreeCapError("total degree " + std::to_string(degree) + " exceeds the degree cap " +
                         std::to_string(degree_cap_));
  }
}

Monomial Ring::multiply(const Monomial& a, const Monomial& b) const {
  check_degree(std::uint64_t{a.degree} + b.degree);
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) m.exp[i] = a.exp[i] + b.exp[i];
  m.degree = a.degree + b.degree;
  return m;
}

Coeff Ring::reduce(std::int64_t value) const {
  auto r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

Coeff Ring::inv(Coeff a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  // Extended Euclid.
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    const auto q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t);
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Polynomial f(std::move(ring));
  if (auto r = f.ring_->reduce(c); r != 0) f.terms_.push_back({Monomial::one(), r});
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->num_vars()) throw std::out_of_range("variable index");
  return term(std::move(ring), Monomial::variable(i), 1);
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, Coeff c) {
  ring->check_degree(m.degree);
  Polynomial f(std::move(ring));
  c %= f.ring_->characteristic();
  if (c != 0) f.terms_.push_back({m, c});
  return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial f(std::move(ring));
  const Ring& r = *f.ring_;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return r.compare(a.monomial, b.monomial) > 0; });
  for (auto& t : terms) {
    t.coeff %= r.characteristic();
    if (!f.terms_.empty() && f.terms_.back().monomial == t.monomial) {
      f.terms_.back().coeff = r.add(f.terms_.back().coeff, t.coeff);
      if (f.terms_.back().coeff == 0) f.terms_.pop_back();
    } else if (t.coeff != 0) {
      f.terms_.push_back(t);
    }
  }
  return f;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial f(std::move(ring));
  f.terms_ = std::move(terms);
  return f;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.degree == 0);
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_.front().monomial.degree == 0 && terms_.front().coeff == 1;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree));
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.monomial.degree == terms_.front().monomial.degree;
  });
}

unsigned Polynomial::degree_in(std::size_t i) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.monomial.exp[i]);
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial f = *this;
  for (auto& t : f.terms_) t.coeff = ring_->neg(t.coeff);
  return f;
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= ring_->characteristic();
  Polynomial f(ring_);
  if (c == 0) return f;
  f.terms_ = terms_;
  for (auto& t : f.terms_) t.coeff = ring_->mul(t.coeff, c);
  return f;
}

Polynomial Polynomial::times_term(const Monomial& m, Coeff c) const {
  c %= ring_->characteristic();
  Polynomial f(ring_);
  if (c == 0) return f;
  f.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    f.terms_.push_back({ring_->multiply(t.monomial, m), ring_->mul(t.coeff, c)});
  }
  return f;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(ring_->inv(leading_coeff()));
}

Polynomial Polynomial::frobenius(unsigned e) const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= ring_->characteristic();
    if (q > kMaxDegreeCap) {
      if (is_constant()) break;
      throw DegreeCapError("Frobenius power p^e exceeds the degree cap");
    }
  }
  if (is_constant()) return *this;
  ring_->check_degree(q * static_cast<std::uint64_t>(total_degree()));
  Polynomial f(ring_);
  f.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      m.exp[i] = static_cast<std::uint16_t>(t.monomial.exp[i] * q);
    }
    m.degree = static_cast<std::uint32_t>(t.monomial.degree * q);
    f.terms_.push_back({m, t.coeff});
  }
  return f;
}

namespace {

Polynomial binary_pow(const Polynomial& f, std::uint64_t n) {
  Polynomial result = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace

Polynomial Polynomial::pow(std::uint64_t n) const {
  if (n == 0) return constant(ring_, 1);
  if (is_zero()) return *this;
  const std::uint64_t p = ring_->characteristic();
  if (total_degree() > 0) {
    ring_->check_degree(n * static_cast<std::uint64_t>(total_degree()));
  }
  // f^n = prod_i (f^{d_i})^{p^i} for the base-p digits d_i of n.
  Polynomial result = constant(ring_, 1);
  unsigned level = 0;
  while (n > 0) {
    const auto digit = n % p;
    if (digit != 0) result = result * binary_pow(*this, digit).frobenius(level);
    n /= p;
    ++level;
  }
  return result;
}

namespace {

template <typename Combine>
Polynomial merge(const Polynomial& a, const Polynomial& b, Combine combine_b) {
  const Ring& r = *a.ring();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ta = a.terms();
  auto tb = b.terms();
  std::size_t i = 0, j = 0;
  while (i < ta.size() && j < tb.size()) {
    const int c = r.compare(ta[i].monomial, tb[j].monomial);
    if (c > 0) {
      out.push_back(ta[i++]);
    } else if (c < 0) {
      out.push_back({tb[j].monomial, combine_b(tb[j].coeff)});
      ++j;
    } else {
      const Coeff s = r.add(ta[i].coeff, combine_b(tb[j].coeff));
      if (s != 0) out.push_back({ta[i].monomial, s});
      ++i;
      ++j;
    }
  }
  for (; i < ta.size(); ++i) out.push_back(ta[i]);
  for (; j < tb.size(); ++j) out.push_back({tb[j].monomial, combine_b(tb[j].coeff)});
  return Polynomial::from_sorted_terms(a.ring(), std::move(out));
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  return merge(a, b, [](Coeff c) { return c; });
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  const Ring& r = *a.ring();
  return merge(a, b, [&](Coeff c) { return r.neg(c); });
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring());
  if (a.is_term()) return b.times_term(a.leading_monomial(), a.leading_coeff());
  if (b.is_term()) return a.times_term(b.leading_monomial(), b.leading_coeff());
  const Ring& r = *a.ring();
  r.check_degree(static_cast<std::uint64_t>(a.total_degree()) + b.total_degree());
  std::vector<Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      products.push_back({r.multiply(ta.monomial, tb.monomial), r.mul(ta.coeff, tb.coeff)});
    }
  }
  return Polynomial::from_terms(a.ring(), std::move(products));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(*a.ring(), *b.ring()) || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.num_vars(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m.exp[i] > 1) out += '^' + std::to_string(m.exp[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.monomial.degree == 0) {
      out += std::to_string(t.coeff);
    } else if (t.coeff == 1) {
      out += monomial_to_string(t.monomial, *ring_);
    } else {
      out += std::to_string(t.coeff) + '*' + monomial_to_string(t.monomial, *ring_);
    }
  }
  return out;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const Ring& r = *a.ring();
  const Coeff lc_inv = r.inv(b.leading_coeff());
  Polynomial rem = a;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const auto& lt = rem.leading_term();
    if (!b.leading_monomial().divides(lt.monomial)) {
      throw std::domain_error("polynomial division is not exact");
    }
    const Term q{monomial_quotient(lt.monomial, b.leading_monomial()), r.mul(lt.coeff, lc_inv)};
    quotient.push_back(q);
    rem = rem - b.times_term(q.monomial, q.coeff);
  }
  // Quotient terms arrive in strictly descending order.
  return Polynomial::from_sorted_terms(a.ring(), std::move(quotient));
}

Polynomial remap(const Polynomial& f, const RingPtr& target, std::span<const std::size_t> var_map) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < f.ring()->num_vars(); ++i) {
      if (t.monomial.exp[i] != 0) m.set(var_map[i], t.monomial.exp[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial specialize_to_one(const Polynomial& f, const RingPtr& target,
                             std::span<const std::optional<std::size_t>> var_map) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < f.ring()->num_vars(); ++i) {
      if (t.monomial.exp[i] != 0 && var_map[i]) m.set(*var_map[i], t.monomial.exp[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace fsplit
