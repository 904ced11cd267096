#ifndef CUBICLAB_IO_POLY_TEXT_HPP
#define CUBICLAB_IO_POLY_TEXT_HPP

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cubiclab/poly/poly.hpp"

// Text form of polynomials, as in the example files:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coef | [coef ['*']] factor (['*'] factor)*
//   factor := var ['^' digits]
// Variables are matched against the ring's names, longest match first, so
// "x_0x_1^2" reads as x_0 * x_1^2. Whitespace is ignored between tokens.

namespace cubiclab::io {

using poly::Monomial;
using poly::Poly;
using poly::RingPtr;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column),
        message_(what) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_, column_;
  std::string message_;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Poly parse() {
    std::vector<poly::Term> terms;
    skip_space();
    if (at_end()) fail("empty expression");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      advance();
    }
    for (;;) {
      terms.push_back(term(negative));
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("unexpected '") + peek() + "'");
      negative = peek() == '-';
      advance();
    }
    return Poly(ring_, std::move(terms));
  }

 private:
  poly::Term term(bool negative) {
    skip_space();
    if (at_end()) fail("expected a term");
    const auto& field = ring_->field();
    std::uint32_t coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = field.reduce(number("coefficient"));
      have_coef = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        advance();
        skip_space();
        if (at_end() || !starts_variable()) fail("expected a variable after '*'");
      }
    }
    std::vector<unsigned> exps(ring_->nvars(), 0);
    bool have_factor = false;
    for (;;) {
      skip_space();
      if (at_end()) break;
      if (peek() == '*') {
        if (!have_factor) fail("unexpected '*'");
        advance();
        skip_space();
        if (at_end() || !starts_variable()) fail("expected a variable after '*'");
      }
      if (!starts_variable()) {
        if (std::isalpha(static_cast<unsigned char>(peek()))) unknown_variable();
        break;
      }
      const std::size_t var = variable();
      unsigned e = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        advance();
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed exponent");
        const long long v = number("exponent");
        if (v > 255) fail("exponent too large");
        e = static_cast<unsigned>(v);
      }
      exps[var] += e;
      if (exps[var] > 255) fail("exponent too large");
      have_factor = true;
    }
    if (!have_coef && !have_factor) fail("expected a term");
    if (negative) coef = field.neg(coef);
    return {Monomial::from_exponents(exps), coef};
  }

  bool starts_variable() const { return match_variable().has_value(); }

  std::optional<std::size_t> match_variable() const {
    std::optional<std::size_t> best;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      const auto& n = ring_->name(i);
      if (n.size() > best_len && s_.substr(pos_, n.size()) == n) {
        // x_1 must not match the prefix of x_12
        const std::size_t end = pos_ + n.size();
        if (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end])) &&
            std::isdigit(static_cast<unsigned char>(n.back())))
          continue;
        best = i;
        best_len = n.size();
      }
    }
    return best;
  }

  std::size_t variable() {
    const auto v = match_variable();
    for (std::size_t k = 0; k < ring_->name(*v).size(); ++k) advance();
    return *v;
  }

  [[noreturn]] void unknown_variable() {
    std::size_t end = pos_ + 1;
    if (end < s_.size() && s_[end] == '_') {
      ++end;
      while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
    }
    fail("unknown variable '" + std::string(s_.substr(pos_, end - pos_)) + "'");
  }

  long long number(const char* what) {
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > (1LL << 40)) fail(std::string(what) + " too large");
      advance();
    }
    return v;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

}  // namespace detail

inline Poly parse_poly(std::string_view text, const RingPtr& ring) {
  return detail::PolyParser(text, ring).parse();
}

/// Terms in the ring's order, coefficients as signed residues, unit
/// coefficients omitted, variables concatenated: "-6x_0x_1^2-x_1^3+...".
inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  const auto& field = p.ring()->field();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    long long c = field.signed_value(t.coef);
    if (c < 0) {
      out += '-';
      c = -c;
    } else if (!first) {
      out += '+';
    }
    first = false;
    if (c != 1 || t.mono.deg == 0) out += std::to_string(c);
    for (std::size_t i = 0; i < p.ring()->nvars(); ++i) {
      if (!t.mono.exp[i]) continue;
      out += p.ring()->name(i);
      if (t.mono.exp[i] > 1) out += "^" + std::to_string(t.mono.exp[i]);
    }
  }
  return out;
}

}  // namespace cubiclab::io

#endif  // CUBICLAB_IO_POLY_TEXT_HPP
