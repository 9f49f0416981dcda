#pragma once

/// \file numtheory.hpp
/// Integer helpers behind the root-count variance formulas over Z_n.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rootcensus/rational.hpp"

namespace rootcensus {

inline std::uint64_t gcd_int(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Deterministic trial division; intended for inputs up to about 10^12.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Prime factorization as (prime, exponent) pairs in ascending prime order.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factorize(0)");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1U);
  return out;
}

inline std::uint64_t totient(std::uint64_t n) {
  if (n == 0) throw std::domain_error("totient(0) is undefined");
  std::uint64_t phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

/// All positive divisors of n, ascending.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::domain_error("divisors(0)");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// (p, k) with n = p^k, k >= 1, or nullopt.
inline std::optional<std::pair<std::uint64_t, unsigned>> is_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) throw std::overflow_error("ipow overflow");
  }
  return r;
}

/// Exact binomial coefficient; throws on 128-bit overflow.
inline u128 binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  u128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is exact at every step.
    u128 t;
    if (__builtin_mul_overflow(r, static_cast<u128>(n - k + i), &t)) throw std::overflow_error("binomial overflow");
    r = t / i;
  }
  return r;
}

/// Sum_{k=1}^{n-1} gcd(n, k)  (OEIS A006579).
inline std::uint64_t a006579(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t k = 1; k < n; ++k) s += gcd_int(n, k);
  return s;
}

/// Variance of the number of distinct roots of a random monic polynomial of
/// degree >= 2 over Z_n:  sum over proper divisors d of n of (d/n) phi(n/d).
///
/// The equivalent full-divisor form sum_{d|n} ((d-1)/n) phi(n/d) is evaluated
/// as well and the two are required to agree.
inline Rational theory_var_zn(std::uint64_t n) {
  if (n < 2) throw std::domain_error("theory_var_zn requires n >= 2");
  i128 proper = 0;
  i128 full = 0;
  for (std::uint64_t d : divisors(n)) {
    auto phi = static_cast<i128>(totient(n / d));
    if (d != n) proper += static_cast<i128>(d) * phi;
    full += static_cast<i128>(d - 1) * phi;
  }
  Rational a(proper, static_cast<i128>(n));
  Rational b(full, static_cast<i128>(n));
  if (a != b) throw std::logic_error("divisor-sum forms of the Z_n variance disagree");
  return a;
}

}  // namespace rootcensus
