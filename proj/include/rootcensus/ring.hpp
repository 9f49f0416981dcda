#pragma once

/// \file ring.hpp
/// Runtime arithmetic contexts for Z_n, F_p and GF(p^k).
///
/// Elements are plain canonical integers in [0, size()).  For GF(p^k) the
/// base-p digits of an element are the coefficients (lowest first) of its
/// residue polynomial modulo the reduction polynomial, so GF(4) built on
/// x^2 + x + 1 has 0, 1, x, x + 1 as reprs 0, 1, 2, 3.  A Ring is immutable
/// after construction and cheap to copy; copies share the lookup tables.

#include <compare>
#include <cstdint>
#include <memory>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rootcensus/numtheory.hpp"

namespace rootcensus {

struct Elem {
  std::uint32_t v = 0;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

class NotAUnit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class RingKind { integers_mod, prime_field, extension_field };

struct RingSpec {
  RingKind kind = RingKind::integers_mod;
  std::uint64_t n = 0;  // integers_mod
  std::uint64_t p = 0;  // prime_field, extension_field
  unsigned k = 1;       // extension_field
  /// Ascending coefficients of a monic degree-k polynomial over F_p.
  /// Empty selects the irreducible with the smallest integer encoding.
  std::vector<std::uint32_t> reduction;

  static RingSpec integers_mod(std::uint64_t n) { return {RingKind::integers_mod, n, 0, 1, {}}; }
  static RingSpec prime_field(std::uint64_t p) { return {RingKind::prime_field, 0, p, 1, {}}; }
  static RingSpec extension_field(std::uint64_t p, unsigned k, std::vector<std::uint32_t> reduction = {}) {
    return {RingKind::extension_field, 0, p, k, std::move(reduction)};
  }
  /// F_q for a prime power q: a prime field when q is prime, GF(p^k) otherwise.
  static RingSpec field_of_order(std::uint64_t q) {
    auto pp = is_prime_power(q);
    if (!pp) throw std::domain_error("field order " + std::to_string(q) + " is not a prime power");
    if (pp->second == 1) return prime_field(q);
    return extension_field(pp->first, pp->second);
  }
};

namespace detail {

// Small dense polynomial helpers over F_p (ascending coefficients) used to
// validate and select reduction polynomials.
using FpPoly = std::vector<std::uint64_t>;

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  u128 r = 1 % m, x = b % m;
  while (e != 0) {
    if (e & 1U) r = r * x % m;
    x = x * x % m;
    e >>= 1U;
  }
  return static_cast<std::uint64_t>(r);
}

inline void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FpPoly fp_mod(FpPoly a, const FpPoly& f, std::uint64_t p) {
  fp_trim(a);
  std::uint64_t inv_lead = powmod_u64(f.back(), p - 2, p);
  while (a.size() >= f.size()) {
    std::uint64_t c = static_cast<std::uint64_t>(static_cast<u128>(a.back()) * inv_lead % p);
    std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i < f.size(); ++i) {
      u128 t = static_cast<u128>(c) * f[i] % p;
      a[shift + i] = static_cast<std::uint64_t>((a[shift + i] + p - static_cast<std::uint64_t>(t)) % p);
    }
    fp_trim(a);
  }
  return a;
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint64_t>((r[i + j] + static_cast<u128>(a[i]) * b[j]) % p);
  return fp_mod(std::move(r), f, p);
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Ben-Or: monic f of degree k is irreducible over F_p iff
/// gcd(x^(p^i) - x, f) = 1 for i = 1..k/2.
inline bool fp_is_irreducible(const FpPoly& f, std::uint64_t p) {
  std::size_t k = f.size() - 1;
  if (k == 0) return false;
  if (k == 1) return true;
  FpPoly x{0, 1};
  FpPoly h = fp_mod(x, f, p);
  for (std::size_t i = 1; i <= k / 2; ++i) {
    // h <- h^p mod f
    FpPoly base = h, acc{1};
    for (std::uint64_t e = p; e != 0; e >>= 1U) {
      if (e & 1U) acc = fp_mulmod(acc, base, f, p);
      base = fp_mulmod(base, base, f, p);
    }
    h = acc;
    FpPoly d = h;
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = (d[1] + p - 1) % p;
    if (fp_gcd(d, f, p).size() > 1) return false;
  }
  return true;
}

}  // namespace detail

class Ring {
 public:
  using value_type = Elem;

  static constexpr std::uint64_t max_size = std::uint64_t{1} << 31U;
  static constexpr std::uint64_t table_limit = 256;

  explicit Ring(RingSpec spec) : kind_(spec.kind) {
    switch (spec.kind) {
      case RingKind::integers_mod:
        if (spec.n < 2) throw std::domain_error("Z_n requires n >= 2");
        if (spec.n >= max_size) throw std::domain_error("ring too large");
        size_ = spec.n;
        p_ = spec.n;
        k_ = 1;
        break;
      case RingKind::prime_field:
        if (!is_prime(spec.p)) throw std::domain_error(std::to_string(spec.p) + " is not prime");
        if (spec.p >= max_size) throw std::domain_error("field too large");
        size_ = spec.p;
        p_ = spec.p;
        k_ = 1;
        break;
      case RingKind::extension_field: init_extension(spec); break;
    }
  }

  static Ring integers_mod(std::uint64_t n) { return Ring(RingSpec::integers_mod(n)); }
  static Ring prime_field(std::uint64_t p) { return Ring(RingSpec::prime_field(p)); }
  static Ring field(std::uint64_t q) { return Ring(RingSpec::field_of_order(q)); }

  RingKind kind() const { return kind_; }
  bool is_field() const { return kind_ != RingKind::integers_mod; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(size_); }
  /// p for fields; n for Z_n.
  std::uint64_t characteristic() const { return p_; }
  unsigned extension_degree() const { return k_; }
  const std::vector<std::uint32_t>& reduction() const { return reduction_; }

  std::string describe() const {
    switch (kind_) {
      case RingKind::integers_mod: return "Z_" + std::to_string(size_);
      case RingKind::prime_field: return "F_" + std::to_string(size_);
      case RingKind::extension_field: break;
    }
    std::string s = "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ") mod ";
    for (std::size_t i = reduction_.size(); i-- > 0;) {
      if (reduction_[i] == 0) continue;
      if (s.back() != ' ') s += " + ";
      if (i == 0 || reduction_[i] != 1) s += std::to_string(reduction_[i]);
      if (i > 0) s += (reduction_[i] != 1 ? "*x" : "x");
      if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
  }

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  bool is_zero(Elem a) const { return a.v == 0; }

  Elem from_repr(std::uint64_t r) const {
    if (r >= size_) throw std::out_of_range("element repr " + std::to_string(r) + " out of range");
    return {static_cast<std::uint32_t>(r)};
  }

  /// Image of an integer under Z -> ring.
  Elem from_int(std::int64_t x) const {
    auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = x % m;
    if (r < 0) r += m;
    return {static_cast<std::uint32_t>(r)};
  }

  /// Elements in increasing repr order.
  auto elements() const {
    return std::views::iota(std::uint32_t{0}, size()) | std::views::transform([](std::uint32_t v) { return Elem{v}; });
  }

  Elem add(Elem a, Elem b) const {
    if (kind_ != RingKind::extension_field) return {static_cast<std::uint32_t>((std::uint64_t{a.v} + b.v) % p_)};
    if (tables_) return {tables_->add[a.v * size_ + b.v]};
    return digitwise(a, b, false);
  }

  Elem sub(Elem a, Elem b) const {
    if (kind_ != RingKind::extension_field) return {static_cast<std::uint32_t>((std::uint64_t{a.v} + p_ - b.v) % p_)};
    if (tables_) return {tables_->sub[a.v * size_ + b.v]};
    return digitwise(a, b, true);
  }

  Elem neg(Elem a) const { return sub(zero(), a); }

  Elem mul(Elem a, Elem b) const {
    if (kind_ != RingKind::extension_field) return {static_cast<std::uint32_t>((std::uint64_t{a.v} * b.v) % p_)};
    if (tables_) return {tables_->mul[a.v * size_ + b.v]};
    return ext_mul(a, b);
  }

  bool is_unit(Elem a) const {
    if (a.v == 0) return false;
    if (is_field()) return true;
    return gcd_int(a.v, p_) == 1;
  }

  Elem inv(Elem a) const {
    if (!is_unit(a)) throw NotAUnit("element " + std::to_string(a.v) + " is not a unit in " + describe());
    if (kind_ == RingKind::extension_field) {
      if (tables_) return {tables_->inv[a.v]};
      return pow(a, size_ - 2);
    }
    // Extended Euclid on (a, n).
    std::int64_t t = 0, new_t = 1;
    auto r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a.v);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    return from_int(t);
  }

  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = one(), b = a;
    while (e != 0) {
      if (e & 1U) r = mul(r, b);
      b = mul(b, b);
      e >>= 1U;
    }
    return r;
  }

  /// Base-p digits (length k) of an extension-field element; {v} otherwise.
  std::vector<std::uint32_t> digits(Elem a) const {
    std::vector<std::uint32_t> d(k_, 0);
    std::uint64_t v = a.v;
    for (unsigned i = 0; i < k_; ++i) {
      d[i] = static_cast<std::uint32_t>(v % p_);
      v /= p_;
    }
    return d;
  }

  Elem from_digits(std::span<const std::uint32_t> d) const {
    if (d.size() != k_) throw std::invalid_argument("digit vector length mismatch");
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
      if (d[i] >= p_) throw std::invalid_argument("digit out of range");
      v = v * p_ + d[i];
    }
    return {static_cast<std::uint32_t>(v)};
  }

 private:
  struct Tables {
    std::vector<std::uint32_t> add, sub, mul, inv;
  };

  void init_extension(const RingSpec& spec) {
    if (!is_prime(spec.p)) throw std::domain_error(std::to_string(spec.p) + " is not prime");
    if (spec.k < 1) throw std::domain_error("extension degree must be >= 1");
    p_ = spec.p;
    k_ = spec.k;
    size_ = 1;
    for (unsigned i = 0; i < k_; ++i) {
      size_ *= p_;
      if (size_ >= max_size) throw std::domain_error("field too large");
    }
    if (spec.reduction.empty()) {
      reduction_ = smallest_irreducible(p_, k_);
    } else {
      const auto& r = spec.reduction;
      if (r.size() != k_ + 1 || r.back() != 1) throw std::domain_error("reduction polynomial must be monic of degree k");
      detail::FpPoly f(r.begin(), r.end());
      for (auto c : f)
        if (c >= p_) throw std::domain_error("reduction coefficient out of range");
      if (!detail::fp_is_irreducible(f, p_)) throw std::domain_error("reduction polynomial is reducible");
      reduction_ = r;
    }
    if (size_ <= table_limit) build_tables();
  }

  static std::vector<std::uint32_t> smallest_irreducible(std::uint64_t p, unsigned k) {
    std::uint64_t count = ipow(p, k);
    for (std::uint64_t low = 0; low < count; ++low) {
      detail::FpPoly f(k + 1, 0);
      std::uint64_t v = low;
      for (unsigned i = 0; i < k; ++i) {
        f[i] = v % p;
        v /= p;
      }
      f[k] = 1;
      if (detail::fp_is_irreducible(f, p)) return {f.begin(), f.end()};
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  Elem digitwise(Elem a, Elem b, bool subtract) const {
    std::uint64_t x = a.v, y = b.v, out = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
      std::uint64_t da = x % p_, db = y % p_;
      x /= p_;
      y /= p_;
      out += place * (subtract ? (da + p_ - db) % p_ : (da + db) % p_);
      place *= p_;
    }
    return {static_cast<std::uint32_t>(out)};
  }

  Elem ext_mul(Elem a, Elem b) const {
    auto da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
    // Reduce with the monic reduction polynomial, highest degree first.
    for (std::size_t d = prod.size(); d-- > k_;) {
      std::uint64_t c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (unsigned i = 0; i < k_; ++i) prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - c) * reduction_[i]) % p_;
    }
    std::vector<std::uint32_t> out(prod.begin(), prod.begin() + k_);
    return from_digits(out);
  }

  void build_tables() {
    auto t = std::make_shared<Tables>();
    std::size_t q = size_;
    t->add.resize(q * q);
    t->sub.resize(q * q);
    t->mul.resize(q * q);
    t->inv.assign(q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        t->add[a * q + b] = digitwise({a}, {b}, false).v;
        t->sub[a * q + b] = digitwise({a}, {b}, true).v;
        std::uint32_t m = ext_mul({a}, {b}).v;
        t->mul[a * q + b] = m;
        if (m == 1) t->inv[a] = b;
      }
    }
    tables_ = std::move(t);
  }

  RingKind kind_;
  std::uint64_t size_ = 0;
  std::uint64_t p_ = 0;
  unsigned k_ = 1;
  std::vector<std::uint32_t> reduction_;
  std::shared_ptr<const Tables> tables_;
};

}  // namespace rootcensus
