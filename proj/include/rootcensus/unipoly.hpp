#pragma once

/// \file unipoly.hpp
/// Dense univariate polynomials over a Ring.
///
/// A UniPoly is a coefficient vector, lowest degree first, with no trailing
/// zeros (the zero polynomial is empty).  The ring travels separately as an
/// explicit argument, mirroring how Elem values are handled.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rootcensus/ring.hpp"

namespace rootcensus {

/// Minimal commutative-ring interface used by the generic Sylvester code.
template <class R>
concept CommutativeRing = requires(const R& r, const typename R::value_type& a) {
  { r.zero() } -> std::convertible_to<typename R::value_type>;
  { r.one() } -> std::convertible_to<typename R::value_type>;
  { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.sub(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
};

static_assert(CommutativeRing<Ring>);

struct UniPoly {
  std::vector<Elem> coeffs;

  UniPoly() = default;
  explicit UniPoly(std::vector<Elem> c) : coeffs(std::move(c)) { trim(); }

  bool is_zero() const { return coeffs.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Elem lead() const { return coeffs.empty() ? Elem{0} : coeffs.back(); }
  bool is_monic() const { return !coeffs.empty() && coeffs.back().v == 1; }

  void trim() {
    while (!coeffs.empty() && coeffs.back().v == 0) coeffs.pop_back();
  }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;
};

/// Builds a polynomial from integer coefficients (lowest first) via Z -> ring.
inline UniPoly uni_from_ints(const Ring& r, std::initializer_list<std::int64_t> cs) {
  std::vector<Elem> c;
  c.reserve(cs.size());
  for (auto v : cs) c.push_back(r.from_int(v));
  return UniPoly(std::move(c));
}

inline UniPoly uni_add(const Ring& r, const UniPoly& f, const UniPoly& g) {
  std::vector<Elem> c(std::max(f.coeffs.size(), g.coeffs.size()), r.zero());
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) c[i] = f.coeffs[i];
  for (std::size_t i = 0; i < g.coeffs.size(); ++i) c[i] = r.add(c[i], g.coeffs[i]);
  return UniPoly(std::move(c));
}

inline UniPoly uni_sub(const Ring& r, const UniPoly& f, const UniPoly& g) {
  std::vector<Elem> c(std::max(f.coeffs.size(), g.coeffs.size()), r.zero());
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) c[i] = f.coeffs[i];
  for (std::size_t i = 0; i < g.coeffs.size(); ++i) c[i] = r.sub(c[i], g.coeffs[i]);
  return UniPoly(std::move(c));
}

inline UniPoly uni_mul(const Ring& r, const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Elem> c(f.coeffs.size() + g.coeffs.size() - 1, r.zero());
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (r.is_zero(f.coeffs[i])) continue;
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) c[i + j] = r.add(c[i + j], r.mul(f.coeffs[i], g.coeffs[j]));
  }
  return UniPoly(std::move(c));
}

inline UniPoly uni_scale(const Ring& r, const UniPoly& f, Elem s) {
  std::vector<Elem> c(f.coeffs.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = r.mul(f.coeffs[i], s);
  return UniPoly(std::move(c));
}

inline Elem uni_eval(const Ring& r, const UniPoly& f, Elem x) {
  Elem acc = r.zero();
  for (std::size_t i = f.coeffs.size(); i-- > 0;) acc = r.add(r.mul(acc, x), f.coeffs[i]);
  return acc;
}

/// f = quot * g + rem with deg rem < deg g.  Over Z_n the divisor must be
/// monic; over a field any nonzero divisor is accepted.
inline std::pair<UniPoly, UniPoly> uni_divmod(const Ring& r, const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  if (!r.is_field() && !g.is_monic()) throw std::domain_error("division over Z_n requires a monic divisor");
  Elem inv_lead = r.inv(g.lead());
  std::vector<Elem> rem = f.coeffs;
  int dg = g.degree();
  int df = f.degree();
  if (df < dg) return {UniPoly{}, f};
  std::vector<Elem> quot(static_cast<std::size_t>(df - dg + 1), r.zero());
  for (int d = df; d >= dg; --d) {
    Elem c = rem[static_cast<std::size_t>(d)];
    if (r.is_zero(c)) continue;
    c = r.mul(c, inv_lead);
    auto shift = static_cast<std::size_t>(d - dg);
    quot[shift] = c;
    for (std::size_t i = 0; i < g.coeffs.size(); ++i) rem[shift + i] = r.sub(rem[shift + i], r.mul(c, g.coeffs[i]));
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

inline UniPoly uni_monic(const Ring& r, const UniPoly& f) {
  if (f.is_zero() || f.is_monic()) return f;
  return uni_scale(r, f, r.inv(f.lead()));
}

/// Monic gcd by the Euclidean algorithm; the ring must be a field.
inline UniPoly uni_gcd(const Ring& r, UniPoly f, UniPoly g) {
  if (!r.is_field()) throw std::domain_error("uni_gcd requires a field");
  if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  while (!g.is_zero()) {
    UniPoly rem = uni_divmod(r, f, g).second;
    f = std::move(g);
    g = std::move(rem);
  }
  return uni_monic(r, f);
}

/// True when gcd(f, g) has positive degree.
inline bool uni_share_factor(const Ring& r, const UniPoly& f, const UniPoly& g) { return uni_gcd(r, f, g).degree() > 0; }

/// Number of alpha in Z_n (or the field) with f(alpha) = 0, by full scan.
inline std::uint32_t count_distinct_roots_zn(const Ring& r, const UniPoly& f) {
  if (!f.is_monic() || f.degree() < 1) throw std::domain_error("root count requires a monic polynomial of degree >= 1");
  std::uint32_t roots = 0;
  for (Elem a : r.elements())
    if (r.is_zero(uni_eval(r, f, a))) ++roots;
  return roots;
}

}  // namespace rootcensus
