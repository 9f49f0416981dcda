#pragma once

/// \file polytext.hpp
/// Plain-text polynomial notation, e.g. `x0^2 + 3*x0*x1 + 2`.
///
/// Variables are x0..x9.  Integer literals denote ring elements: over Z_n and
/// F_p they are reduced mod n (p); over GF(p^k) a literal is an element repr
/// and must be below p^k.  The parser accepts + - * ^ and parentheses; the
/// printer emits a canonical sum of terms (graded, then lexicographic,
/// descending) that parses back to the same polynomial.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rootcensus/multipoly.hpp"
#include "rootcensus/ring.hpp"

namespace rootcensus {

class PolyParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(const Ring& r, std::string_view text, std::size_t nvars) : ring_(r), pr_(r, nvars), s_(text) {}

  MPoly parse() {
    MPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw PolyParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::uint64_t integer() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > (UINT64_MAX - 9) / 10) fail("integer literal too large");
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
    }
    return v;
  }

  MPoly expr() {
    MPoly acc = term();
    while (true) {
      if (accept('+'))
        acc = pr_.add(acc, term());
      else if (accept('-'))
        acc = pr_.sub(acc, term());
      else
        return acc;
    }
  }

  MPoly term() {
    MPoly acc = unary();
    while (accept('*')) acc = pr_.mul(acc, unary());
    return acc;
  }

  MPoly unary() {
    if (accept('-')) return pr_.neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  MPoly power() {
    MPoly base = primary();
    if (!accept('^')) return base;
    std::uint64_t e = integer();
    if (e > 1000) fail("exponent too large");
    MPoly acc = pr_.one();
    for (std::uint64_t i = 0; i < e; ++i) acc = pr_.mul(acc, base);
    return acc;
  }

  MPoly primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected variable index");
      auto j = static_cast<std::size_t>(s_[pos_++] - '0');
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("variables are x0..x9");
      return pr_.variable(j);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return pr_.constant(literal(integer()));
    fail("unexpected character");
  }

  Elem literal(std::uint64_t v) const {
    if (ring_.kind() == RingKind::extension_field) {
      if (v >= ring_.size()) throw PolyParseError("literal " + std::to_string(v) + " is not an element repr of " + ring_.describe());
      return ring_.from_repr(v);
    }
    return ring_.from_repr(v % ring_.size());
  }

  const Ring& ring_;
  MPolyRing pr_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Number of variables mentioned: one more than the largest xN index.
inline std::size_t infer_nvars(std::string_view text) {
  std::size_t n = 0;
  for (std::size_t i = 0; i + 1 < text.size(); ++i)
    if (text[i] == 'x' && std::isdigit(static_cast<unsigned char>(text[i + 1])))
      n = std::max(n, static_cast<std::size_t>(text[i + 1] - '0') + 1);
  return n;
}

/// Parses text into a polynomial in max(min_nvars, inferred) variables.
inline MPoly parse_poly(const Ring& r, std::string_view text, std::size_t min_nvars = 0) {
  std::size_t nvars = std::max(min_nvars, infer_nvars(text));
  return detail::PolyParser(r, text, nvars).parse();
}

inline std::string format_poly(const MPoly& p) {
  if (p.is_zero()) return "0";
  struct Term {
    std::vector<std::uint32_t> e;
    std::uint32_t total;
    Elem c;
  };
  std::vector<Term> terms;
  for_each_term(p, [&](std::span<const std::uint32_t> e, Elem c) {
    std::uint32_t t = 0;
    for (auto x : e) t += x;
    terms.push_back({{e.begin(), e.end()}, t, c});
  });
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    if (a.total != b.total) return a.total > b.total;
    return a.e > b.e;
  });
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t j = 0; j < t.e.size(); ++j) {
      if (t.e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(j);
      if (t.e[j] > 1) mono += "^" + std::to_string(t.e[j]);
    }
    if (mono.empty())
      out += std::to_string(t.c.v);
    else if (t.c.v == 1)
      out += mono;
    else
      out += std::to_string(t.c.v) + "*" + mono;
  }
  return out;
}

}  // namespace rootcensus
