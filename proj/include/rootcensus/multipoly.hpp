#pragma once

/// \file multipoly.hpp
/// Dense multivariate polynomials over a Ring, stored in an exponent box.
///
/// These serve as the coefficient ring for Sylvester determinants whose
/// entries are polynomials in the non-main variables, and as the general
/// form for text I/O.  Sizes at desk scale are tiny (a handful of variables,
/// degree below ~20), so a dense box is both simple and fast.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rootcensus/ring.hpp"
#include "rootcensus/unipoly.hpp"

namespace rootcensus {

struct MPoly {
  /// Per variable: one more than the largest exponent present.  All zero for
  /// the zero polynomial.
  std::vector<std::uint32_t> extent;
  /// Coefficients, last variable fastest.  Empty iff the polynomial is zero.
  std::vector<Elem> c;

  std::size_t nvars() const { return extent.size(); }
  bool is_zero() const { return c.empty(); }

  friend bool operator==(const MPoly&, const MPoly&) = default;
};

namespace detail {

inline std::vector<std::size_t> strides_of(std::span<const std::uint32_t> extent) {
  std::vector<std::size_t> s(extent.size(), 1);
  for (std::size_t j = extent.size(); j-- > 1;) s[j - 1] = s[j] * extent[j];
  return s;
}

inline std::size_t box_size(std::span<const std::uint32_t> extent) {
  std::size_t n = 1;
  for (auto e : extent) n *= e;
  return n;
}

}  // namespace detail

/// Calls fn(exponents, coeff) for every nonzero term.
template <class F>
void for_each_term(const MPoly& p, F&& fn) {
  if (p.is_zero()) return;
  std::vector<std::uint32_t> e(p.nvars(), 0);
  for (std::size_t idx = 0; idx < p.c.size(); ++idx) {
    if (p.c[idx].v != 0) fn(std::span<const std::uint32_t>(e), p.c[idx]);
    for (std::size_t j = e.size(); j-- > 0;) {
      if (++e[j] < p.extent[j]) break;
      e[j] = 0;
    }
  }
}

/// Arithmetic context for polynomials in a fixed number of variables.
class MPolyRing {
 public:
  using value_type = MPoly;

  MPolyRing(const Ring& base, std::size_t nvars) : base_(&base), nvars_(nvars) {}

  const Ring& base() const { return *base_; }
  std::size_t nvars() const { return nvars_; }

  MPoly zero() const { return {std::vector<std::uint32_t>(nvars_, 0), {}}; }
  MPoly one() const { return constant(base_->one()); }
  bool is_zero(const MPoly& a) const { return a.is_zero(); }

  MPoly constant(Elem v) const {
    if (v.v == 0) return zero();
    return {std::vector<std::uint32_t>(nvars_, 1), {v}};
  }

  /// coeff * x_j^power.
  MPoly monomial(std::span<const std::uint32_t> exps, Elem coeff) const {
    if (exps.size() != nvars_) throw std::invalid_argument("monomial arity mismatch");
    if (coeff.v == 0) return zero();
    MPoly m{std::vector<std::uint32_t>(nvars_), {}};
    for (std::size_t j = 0; j < nvars_; ++j) m.extent[j] = exps[j] + 1;
    m.c.assign(detail::box_size(m.extent), base_->zero());
    m.c.back() = coeff;
    return m;
  }

  MPoly variable(std::size_t j) const {
    std::vector<std::uint32_t> e(nvars_, 0);
    e.at(j) = 1;
    return monomial(e, base_->one());
  }

  MPoly add(const MPoly& a, const MPoly& b) const { return combine(a, b, false); }
  MPoly sub(const MPoly& a, const MPoly& b) const { return combine(a, b, true); }
  MPoly neg(const MPoly& a) const { return sub(zero(), a); }

  MPoly mul(const MPoly& a, const MPoly& b) const {
    check(a);
    check(b);
    if (a.is_zero() || b.is_zero()) return zero();
    if (is_one(a)) return b;
    if (is_one(b)) return a;
    MPoly r{std::vector<std::uint32_t>(nvars_), {}};
    for (std::size_t j = 0; j < nvars_; ++j) r.extent[j] = a.extent[j] + b.extent[j] - 1;
    auto strides = detail::strides_of(r.extent);
    auto ta = indexed_terms(a, strides);
    auto tb = indexed_terms(b, strides);
    r.c.assign(detail::box_size(r.extent), base_->zero());
    for (const auto& [ia, ca] : ta)
      for (const auto& [ib, cb] : tb) r.c[ia + ib] = base_->add(r.c[ia + ib], base_->mul(ca, cb));
    normalize(r);
    return r;
  }

  MPoly scale(const MPoly& a, Elem s) const {
    MPoly r = a;
    for (auto& v : r.c) v = base_->mul(v, s);
    normalize(r);
    return r;
  }

  Elem coeff(const MPoly& a, std::span<const std::uint32_t> exps) const {
    if (a.is_zero()) return base_->zero();
    std::size_t idx = 0;
    auto strides = detail::strides_of(a.extent);
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (exps[j] >= a.extent[j]) return base_->zero();
      idx += exps[j] * strides[j];
    }
    return a.c[idx];
  }

  /// Total degree; -1 for zero.
  int total_degree(const MPoly& a) const {
    int d = -1;
    for_each_term(a, [&](std::span<const std::uint32_t> e, Elem) {
      int s = 0;
      for (auto x : e) s += static_cast<int>(x);
      d = std::max(d, s);
    });
    return d;
  }

  Elem eval(const MPoly& a, std::span<const Elem> point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluation point arity mismatch");
    Elem acc = base_->zero();
    for_each_term(a, [&](std::span<const std::uint32_t> e, Elem c) {
      Elem t = c;
      for (std::size_t j = 0; j < nvars_; ++j) t = base_->mul(t, base_->pow(point[j], e[j]));
      acc = base_->add(acc, t);
    });
    return acc;
  }

  /// Univariate polynomial of a single-variable MPoly.
  UniPoly to_uni(const MPoly& a) const {
    if (nvars_ != 1) throw std::invalid_argument("to_uni requires exactly one variable");
    return UniPoly(a.c);
  }

  MPoly from_uni(const UniPoly& f) const {
    if (nvars_ != 1) throw std::invalid_argument("from_uni requires exactly one variable");
    if (f.is_zero()) return zero();
    return {{static_cast<std::uint32_t>(f.coeffs.size())}, f.coeffs};
  }

  void normalize(MPoly& a) const {
    std::vector<std::uint32_t> top(nvars_, 0);
    bool any = false;
    for_each_term(a, [&](std::span<const std::uint32_t> e, Elem) {
      any = true;
      for (std::size_t j = 0; j < nvars_; ++j) top[j] = std::max(top[j], e[j] + 1);
    });
    if (!any) {
      a = zero();
      return;
    }
    if (top == a.extent) return;
    MPoly r{top, std::vector<Elem>(detail::box_size(top), base_->zero())};
    auto strides = detail::strides_of(top);
    for_each_term(a, [&](std::span<const std::uint32_t> e, Elem c) {
      std::size_t idx = 0;
      for (std::size_t j = 0; j < nvars_; ++j) idx += e[j] * strides[j];
      r.c[idx] = c;
    });
    a = std::move(r);
  }

 private:
  void check(const MPoly& a) const {
    if (a.nvars() != nvars_) throw std::invalid_argument("polynomial has the wrong number of variables");
  }

  bool is_one(const MPoly& a) const { return a.c.size() == 1 && a.c[0].v == 1; }

  static std::vector<std::pair<std::size_t, Elem>> indexed_terms(const MPoly& a, const std::vector<std::size_t>& strides) {
    std::vector<std::pair<std::size_t, Elem>> t;
    for_each_term(a, [&](std::span<const std::uint32_t> e, Elem c) {
      std::size_t idx = 0;
      for (std::size_t j = 0; j < e.size(); ++j) idx += e[j] * strides[j];
      t.emplace_back(idx, c);
    });
    return t;
  }

  MPoly combine(const MPoly& a, const MPoly& b, bool subtract) const {
    check(a);
    check(b);
    if (b.is_zero()) return a;
    MPoly r{std::vector<std::uint32_t>(nvars_), {}};
    for (std::size_t j = 0; j < nvars_; ++j) r.extent[j] = std::max(a.extent[j], b.extent[j]);
    auto strides = detail::strides_of(r.extent);
    r.c.assign(detail::box_size(r.extent), base_->zero());
    for (const auto& [i, c] : indexed_terms(a, strides)) r.c[i] = c;
    for (const auto& [i, c] : indexed_terms(b, strides)) r.c[i] = subtract ? base_->sub(r.c[i], c) : base_->add(r.c[i], c);
    normalize(r);
    return r;
  }

  const Ring* base_;
  std::size_t nvars_;
};

static_assert(CommutativeRing<MPolyRing>);

}  // namespace rootcensus
