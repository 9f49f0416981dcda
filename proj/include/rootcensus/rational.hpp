#pragma once

/// \file rational.hpp
/// Exact rationals over signed 128-bit integers.
///
/// Census statistics are ratios of counts that stay far below 2^64, so the
/// cross products formed while computing a variance fit comfortably in 128
/// bits. Every operation checks for overflow and throws instead of wrapping.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rootcensus {

using i128 = __int128;
using u128 = unsigned __int128;

inline std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

inline std::string to_string(i128 v) {
  if (v < 0) return "-" + to_string(static_cast<u128>(-(v + 1)) + 1);
  return to_string(static_cast<u128>(v));
}

inline i128 parse_i128(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("bad integer literal");
  // Accumulate with the final sign so that the most negative value parses.
  i128 v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal");
    const i128 d = neg ? -(s[i] - '0') : s[i] - '0';
    if (__builtin_mul_overflow(v, i128{10}, &v) || __builtin_add_overflow(v, d, &v))
      throw std::overflow_error("integer literal overflows 128 bits");
  }
  return v;
}

namespace detail {

inline i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
  return r;
}

inline i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
  return r;
}

inline i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

class Rational {
 public:
  constexpr Rational() = default;
  Rational(i128 num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(i128 num, i128 den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    normalize();
  }

  i128 num() const { return num_; }
  i128 den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "a/b", or just "a" when the denominator is one.
  std::string str() const {
    if (den_ == 1) return to_string(num_);
    return to_string(num_) + "/" + to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    i128 g = detail::gcd128(a.den_, b.den_);
    i128 lhs = detail::checked_mul(a.num_, b.den_ / g);
    i128 rhs = detail::checked_mul(b.num_, a.den_ / g);
    return {detail::checked_add(lhs, rhs), detail::checked_mul(a.den_, b.den_ / g)};
  }
  friend Rational operator-(const Rational& a) { return {-a.num_, a.den_}; }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    i128 g1 = detail::gcd128(a.num_, b.den_);
    i128 g2 = detail::gcd128(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return {detail::checked_mul(a.num_ / g1, b.num_ / g2), detail::checked_mul(a.den_ / g2, b.den_ / g1)};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return a * Rational(b.den_, b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive, so cross multiplication preserves order.
    i128 l = detail::checked_mul(a.num_, b.den_);
    i128 r = detail::checked_mul(b.num_, a.den_);
    return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    i128 g = detail::gcd128(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  i128 num_ = 0;
  i128 den_ = 1;
};

}  // namespace rootcensus
