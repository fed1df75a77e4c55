#include <cctype>

#include "fsplit/polyring.hpp"

namespace fsplit {
namespace {

// Recursive descent over
//   expr    := ['+'|'-'] product (('+'|'-') product)*
//   product := power ('*' power)*
//   power   := atom ['^' integer]
//   atom    := integer | name | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial run() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    auto f = expr();
    skip_space();
    if (!at_end()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  Polynomial expr() {
    skip_space();
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    auto acc = product();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      if (peek('+')) {
        ++pos_;
        acc = acc + product();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - product();
      } else {
        return acc;
      }
    }
  }

  Polynomial product() {
    auto acc = power();
    for (;;) {
      skip_space();
      if (!peek('*')) return acc;
      ++pos_;
      acc = acc * power();
    }
  }

  Polynomial power() {
    auto base = atom();
    skip_space();
    if (!peek('^')) return base;
    ++pos_;
    skip_space();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a non-negative integer exponent");
    }
    std::uint64_t n = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = n * 10 + static_cast<unsigned>(text_[pos_++] - '0');
      if (n > static_cast<std::uint64_t>(ring_->degree_cap())) {
        throw DegreeCapError("exponent exceeds the degree cap " +
                             std::to_string(ring_->degree_cap()));
      }
    }
    return base.pow(n);
  }

  Polynomial atom() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      skip_space();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::int64_t p = ring_->characteristic();
      std::int64_t value = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = (value * 10 + (text_[pos_++] - '0')) % p;
      }
      return Polynomial::constant(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const auto start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                           text_[pos_] == '_')) {
        ++pos_;
      }
      const auto name = text_.substr(start, pos_ - start);
      const auto index = ring_->index_of(name);
      if (!index) fail("unknown variable '" + std::string(name) + "'");
      return Polynomial::variable(ring_, *index);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  bool peek(char c) const { return !at_end() && text_[pos_] == c; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\"");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).run();
}

}  // namespace fsplit
