#pragma once

/// \file resultant.hpp
/// Sylvester matrices and resultants.
///
/// Sign convention: res(A, B) is the determinant of the Sylvester matrix
/// whose first deg(B) rows hold A's coefficients (leading first, shifted one
/// column per row) followed by deg(A) rows of B's.  With this layout
/// res(x - a, x - b) = a - b, and res(A, B) = lc(A)^deg(B) * prod B(root of A).
/// The Euclidean route reproduces this sign exactly.

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "rootcensus/multipoly.hpp"
#include "rootcensus/ring.hpp"
#include "rootcensus/shaped.hpp"
#include "rootcensus/unipoly.hpp"

namespace rootcensus {

template <CommutativeRing R>
struct SylvesterMatrix {
  using value_type = typename R::value_type;

  std::size_t n = 0;  // degree of the first input
  std::size_t m = 0;  // degree of the second input
  std::vector<value_type> entries;  // row-major, (n + m) x (n + m)

  std::size_t dim() const { return n + m; }
  const value_type& at(std::size_t row, std::size_t col) const { return entries[row * dim() + col]; }
};

/// a and b are coefficient sequences in the main variable, lowest first,
/// with nonzero leading entries and positive degree.
template <CommutativeRing R>
SylvesterMatrix<R> sylvester_matrix(const R& ring, std::span<const typename R::value_type> a,
                                    std::span<const typename R::value_type> b) {
  if (a.size() < 2 || b.size() < 2) throw std::domain_error("Sylvester matrix needs inputs of positive degree");
  if (ring.is_zero(a.back()) || ring.is_zero(b.back())) throw std::domain_error("leading coefficient is zero");
  SylvesterMatrix<R> s;
  s.n = a.size() - 1;
  s.m = b.size() - 1;
  const std::size_t d = s.dim();
  s.entries.assign(d * d, ring.zero());
  for (std::size_t row = 0; row < s.m; ++row)
    for (std::size_t i = 0; i <= s.n; ++i) s.entries[row * d + row + i] = a[s.n - i];
  for (std::size_t row = 0; row < s.n; ++row)
    for (std::size_t i = 0; i <= s.m; ++i) s.entries[(s.m + row) * d + row + i] = b[s.m - i];
  return s;
}

/// Determinant by Laplace expansion, memoized over column subsets: the minor
/// on rows 0..|S|-1 and column set S is expanded along its last row.  Only
/// ring addition, subtraction and multiplication are used.
template <CommutativeRing R>
typename R::value_type determinant(const R& ring, std::span<const typename R::value_type> entries, std::size_t dim) {
  using V = typename R::value_type;
  if (entries.size() != dim * dim) throw std::invalid_argument("determinant: matrix is not square");
  if (dim == 0) return ring.one();
  if (dim > 24) throw std::invalid_argument("determinant: matrix too large for minor expansion");
  const std::uint32_t full = (std::uint32_t{1} << dim) - 1;
  std::vector<V> minor(std::size_t{full} + 1, ring.zero());
  std::vector<bool> nonzero(std::size_t{full} + 1, false);
  minor[0] = ring.one();
  nonzero[0] = true;
  for (std::uint32_t set = 1; set <= full; ++set) {
    const auto row = static_cast<std::size_t>(std::popcount(set) - 1);
    V acc = ring.zero();
    bool any = false;
    int pos = 0;
    for (std::size_t col = 0; col < dim; ++col) {
      if (!(set & (std::uint32_t{1} << col))) continue;
      const std::uint32_t rest = set & ~(std::uint32_t{1} << col);
      const V& e = entries[row * dim + col];
      if (nonzero[rest] && !ring.is_zero(e)) {
        V term = ring.mul(e, minor[rest]);
        acc = ((pos + row) % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
        any = true;
      }
      ++pos;
    }
    if (any && !ring.is_zero(acc)) {
      minor[set] = std::move(acc);
      nonzero[set] = true;
    }
  }
  return minor[full];
}

template <CommutativeRing R>
typename R::value_type resultant_det(const R& ring, std::span<const typename R::value_type> a,
                                     std::span<const typename R::value_type> b) {
  auto s = sylvester_matrix(ring, a, b);
  return determinant(ring, std::span<const typename R::value_type>(s.entries), s.dim());
}

inline Elem resultant_det(const Ring& r, const UniPoly& f, const UniPoly& g) {
  return resultant_det(r, std::span<const Elem>(f.coeffs), std::span<const Elem>(g.coeffs));
}

/// Resultant over a field via the Euclidean remainder sequence:
///   res(A, B) = lc(A)^(deg B - deg R) res(A, R)   for R = B mod A,
///   res(A, B) = (-1)^(deg A deg B) res(B, A),
///   res(c, B) = c^deg B,  res(A, c) = c^deg A.
inline Elem resultant_uni(const Ring& r, UniPoly a, UniPoly b) {
  if (!r.is_field()) throw std::domain_error("resultant_uni requires a field");
  if (a.degree() < 1 || b.degree() < 1) throw std::domain_error("resultant needs inputs of positive degree");
  Elem scale = r.one();
  while (true) {
    const int n = a.degree();
    const int m = b.degree();
    if (n == 0) return r.mul(scale, r.pow(a.lead(), static_cast<std::uint64_t>(m)));
    if (m == 0) return r.mul(scale, r.pow(b.lead(), static_cast<std::uint64_t>(n)));
    if (m < n) {
      if ((n * m) % 2 == 1) scale = r.neg(scale);
      std::swap(a, b);
      continue;
    }
    UniPoly rem = uni_divmod(r, b, a).second;
    if (rem.is_zero()) return r.zero();
    scale = r.mul(scale, r.pow(a.lead(), static_cast<std::uint64_t>(m - rem.degree())));
    b = std::move(rem);
  }
}

/// res_{x0}(A, B) as a polynomial in x1..x_r, by minor expansion over the
/// polynomial coefficient ring.  Enforces deg R <= deg A * deg B.
inline MPoly resultant_poly(const Ring& r, const ShapedMultiPoly& a, const ShapedMultiPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("resultant inputs have different variable counts");
  MPolyRing cr(r, a.shape->free_vars());
  auto ca = main_coefficients(r, a);
  auto cb = main_coefficients(r, b);
  MPoly res = resultant_det(cr, std::span<const MPoly>(ca), std::span<const MPoly>(cb));
  if (cr.total_degree(res) > static_cast<int>(a.main_deg() * b.main_deg()))
    throw std::logic_error("resultant exceeds the Bezout degree bound");
  return res;
}

/// Bivariate convenience: R(y) as a univariate polynomial.
inline UniPoly resultant_poly_bivariate(const Ring& r, const ShapedMultiPoly& a, const ShapedMultiPoly& b) {
  if (a.nvars() != 2) throw std::invalid_argument("resultant_poly_bivariate needs two variables");
  return MPolyRing(r, 1).to_uni(resultant_poly(r, a, b));
}

enum class ResultantRoute { evaluate_resultant, specialize_first };

/// res_{x0}(A(x0, point), B(x0, point)) by either route; the two agree for
/// inputs monic in x0.
inline Elem resultant_specialized(const Ring& r, const ShapedMultiPoly& a, const ShapedMultiPoly& b,
                                  std::span<const Elem> point, ResultantRoute route = ResultantRoute::specialize_first) {
  if (route == ResultantRoute::evaluate_resultant) {
    MPolyRing cr(r, a.shape->free_vars());
    return cr.eval(resultant_poly(r, a, b), point);
  }
  return resultant_uni(r, multi_eval(r, a, point), multi_eval(r, b, point));
}

}  // namespace rootcensus
