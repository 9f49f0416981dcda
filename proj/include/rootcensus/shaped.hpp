#pragma once

/// \file shaped.hpp
/// Multivariate polynomials monic in a main variable with a total-degree
/// coefficient shape:
///
///     f = x0^d + sum_{i<d} c_i(x1, ..., x_{r}) x0^i,   deg c_i <= d - i.
///
/// The free coefficients of every c_i are stored densely over the
/// total-degree simplex, exponent tuples in ascending lexicographic order,
/// powers of x0 ascending.  This flat coefficient vector doubles as a base-q
/// odometer: coefficient 0 is the least significant digit of the
/// polynomial's enumeration index.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "rootcensus/multipoly.hpp"
#include "rootcensus/ring.hpp"
#include "rootcensus/unipoly.hpp"

namespace rootcensus {

class Shape {
 public:
  struct Slot {
    std::uint32_t power;                // exponent of the main variable
    std::vector<std::uint32_t> exps;    // exponents of x1..x_r
  };

  /// nvars counts the main variable; nvars >= 1, main_deg >= 1.
  Shape(std::size_t nvars, std::uint32_t main_deg) : nvars_(nvars), main_deg_(main_deg) {
    if (nvars < 1) throw std::invalid_argument("shape needs at least the main variable");
    if (main_deg < 1) throw std::invalid_argument("shape needs positive main degree");
    std::size_t r = nvars - 1;
    for (std::uint32_t i = 0; i < main_deg; ++i) {
      std::uint32_t bound = main_deg - i;
      std::vector<std::uint32_t> e(r, 0);
      append_simplex(e, 0, bound, i);
    }
  }

  std::size_t nvars() const { return nvars_; }
  std::size_t free_vars() const { return nvars_ - 1; }
  std::uint32_t main_deg() const { return main_deg_; }
  std::size_t slot_count() const { return slots_.size(); }
  const std::vector<Slot>& slots() const { return slots_; }

  friend bool operator==(const Shape& a, const Shape& b) { return a.nvars_ == b.nvars_ && a.main_deg_ == b.main_deg_; }

 private:
  // Lexicographic enumeration of exponent tuples with sum <= budget.
  void append_simplex(std::vector<std::uint32_t>& e, std::size_t j, std::uint32_t budget, std::uint32_t power) {
    if (j == e.size()) {
      slots_.push_back({power, e});
      return;
    }
    for (std::uint32_t v = 0; v <= budget; ++v) {
      e[j] = v;
      append_simplex(e, j + 1, budget - v, power);
    }
    e[j] = 0;
  }

  std::size_t nvars_;
  std::uint32_t main_deg_;
  std::vector<Slot> slots_;
};

struct ShapedMultiPoly {
  std::shared_ptr<const Shape> shape;
  std::vector<Elem> coeffs;  // one per slot

  std::uint32_t main_deg() const { return shape->main_deg(); }
  std::size_t nvars() const { return shape->nvars(); }

  friend bool operator==(const ShapedMultiPoly& a, const ShapedMultiPoly& b) {
    return *a.shape == *b.shape && a.coeffs == b.coeffs;
  }
};

inline std::shared_ptr<const Shape> make_shape(std::size_t nvars, std::uint32_t main_deg) {
  return std::make_shared<const Shape>(nvars, main_deg);
}

/// Number of shaped polynomials, q^slots; throws if it exceeds 64 bits.
inline std::uint64_t shaped_population(const Ring& r, const Shape& s) {
  return ipow(r.size(), static_cast<unsigned>(s.slot_count()));
}

inline ShapedMultiPoly shaped_from_index(const Ring& r, std::shared_ptr<const Shape> s, std::uint64_t index) {
  ShapedMultiPoly f{std::move(s), {}};
  f.coeffs.resize(f.shape->slot_count());
  for (auto& c : f.coeffs) {
    c = Elem{static_cast<std::uint32_t>(index % r.size())};
    index /= r.size();
  }
  if (index != 0) throw std::out_of_range("shaped polynomial index out of range");
  return f;
}

inline std::uint64_t shaped_index(const Ring& r, const ShapedMultiPoly& f) {
  std::uint64_t idx = 0;
  for (std::size_t i = f.coeffs.size(); i-- > 0;) idx = idx * r.size() + f.coeffs[i].v;
  return idx;
}

template <class Rng>
ShapedMultiPoly random_shaped(const Ring& r, std::shared_ptr<const Shape> s, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, r.size() - 1);
  ShapedMultiPoly f{std::move(s), {}};
  f.coeffs.resize(f.shape->slot_count());
  for (auto& c : f.coeffs) c = Elem{pick(rng)};
  return f;
}

/// Precomputed monomial values of every slot at one point, so that a
/// specialization is a dot product per power of the main variable.
struct SlotWeights {
  std::vector<Elem> w;  // aligned with Shape::slots()
};

inline SlotWeights slot_weights(const Ring& r, const Shape& s, std::span<const Elem> point) {
  if (point.size() != s.free_vars()) throw std::invalid_argument("evaluation point arity mismatch");
  SlotWeights sw;
  sw.w.reserve(s.slot_count());
  for (const auto& slot : s.slots()) {
    Elem t = r.one();
    for (std::size_t j = 0; j < point.size(); ++j) t = r.mul(t, r.pow(point[j], slot.exps[j]));
    sw.w.push_back(t);
  }
  return sw;
}

/// Specialized univariate coefficients (lowest first, leading 1 omitted).
inline void specialize_into(const Ring& r, const ShapedMultiPoly& f, const SlotWeights& sw, std::span<Elem> out) {
  for (auto& v : out) v = r.zero();
  const auto& slots = f.shape->slots();
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (f.coeffs[s].v == 0) continue;
    auto p = slots[s].power;
    out[p] = r.add(out[p], r.mul(f.coeffs[s], sw.w[s]));
  }
}

/// f(x0, point): monic of degree main_deg in x0.
inline UniPoly multi_eval(const Ring& r, const ShapedMultiPoly& f, std::span<const Elem> point) {
  if (point.size() + 1 != f.nvars()) throw std::invalid_argument("evaluation point arity mismatch");
  auto sw = slot_weights(r, *f.shape, point);
  std::vector<Elem> c(f.main_deg() + 1, r.zero());
  specialize_into(r, f, sw, std::span<Elem>(c.data(), f.main_deg()));
  c.back() = r.one();
  return UniPoly(std::move(c));
}

/// Coefficients in x0 (lowest first, including the leading 1) as
/// polynomials in x1..x_r.
inline std::vector<MPoly> main_coefficients(const Ring& r, const ShapedMultiPoly& f) {
  MPolyRing cr(r, f.shape->free_vars());
  std::vector<MPoly> out(f.main_deg() + 1, cr.zero());
  const auto& slots = f.shape->slots();
  for (std::size_t s = 0; s < slots.size(); ++s)
    out[slots[s].power] = cr.add(out[slots[s].power], cr.monomial(slots[s].exps, f.coeffs[s]));
  out.back() = cr.one();
  return out;
}

/// The polynomial in all nvars variables, x0 first.
inline MPoly to_mpoly(const Ring& r, const ShapedMultiPoly& f) {
  MPolyRing full(r, f.nvars());
  std::vector<std::uint32_t> e(f.nvars(), 0);
  MPoly acc = full.zero();
  const auto& slots = f.shape->slots();
  for (std::size_t s = 0; s < slots.size(); ++s) {
    e[0] = slots[s].power;
    for (std::size_t j = 0; j < slots[s].exps.size(); ++j) e[j + 1] = slots[s].exps[j];
    acc = full.add(acc, full.monomial(e, f.coeffs[s]));
  }
  std::fill(e.begin(), e.end(), 0);
  e[0] = f.main_deg();
  return full.add(acc, full.monomial(e, r.one()));
}

/// Recovers the shaped form of p (x0 first).  p must be monic in x0 with
/// total degree equal to its x0-degree.
inline ShapedMultiPoly shaped_from_mpoly(const Ring& r, const MPoly& p) {
  if (p.is_zero() || p.nvars() < 1) throw std::domain_error("shaped polynomial must be nonzero");
  auto main_deg = static_cast<std::uint32_t>(p.extent[0] - 1);
  if (main_deg < 1) throw std::domain_error("shaped polynomial needs positive degree in x0");
  bool ok = true;
  for_each_term(p, [&](std::span<const std::uint32_t> e, Elem c) {
    std::uint32_t tot = 0;
    for (auto x : e) tot += x;
    if (tot > main_deg) ok = false;
    if (e[0] == main_deg && (tot != main_deg || c.v != 1)) ok = false;
  });
  if (!ok) throw std::domain_error("polynomial is not monic in x0 with the total-degree shape");
  MPolyRing full(r, p.nvars());
  std::vector<std::uint32_t> lead(p.nvars(), 0);
  lead[0] = main_deg;
  if (full.coeff(p, lead).v != 1) throw std::domain_error("polynomial is not monic in x0");
  ShapedMultiPoly f{make_shape(p.nvars(), main_deg), {}};
  std::vector<std::uint32_t> e(p.nvars(), 0);
  for (const auto& slot : f.shape->slots()) {
    e[0] = slot.power;
    for (std::size_t j = 0; j < slot.exps.size(); ++j) e[j + 1] = slot.exps[j];
    f.coeffs.push_back(full.coeff(p, e));
  }
  return f;
}

inline ShapedMultiPoly shaped_mul(const Ring& r, const ShapedMultiPoly& a, const ShapedMultiPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("shaped product arity mismatch");
  MPolyRing full(r, a.nvars());
  return shaped_from_mpoly(r, full.mul(to_mpoly(r, a), to_mpoly(r, b)));
}

}  // namespace rootcensus
