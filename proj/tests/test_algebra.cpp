#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "rootcensus/numtheory.hpp"
#include "rootcensus/rational.hpp"
#include "rootcensus/ring.hpp"

using namespace rootcensus;

namespace {

// Naive F_p polynomial helpers, independent of the library's ring code.
using Digits = std::vector<std::int64_t>;

Digits naive_mod(Digits a, const Digits& f, std::int64_t p) {
  const std::size_t k = f.size() - 1;
  while (a.size() > k) {
    std::int64_t c = a.back() % p;
    std::size_t shift = a.size() - 1 - k;
    for (std::size_t i = 0; i <= k; ++i) a[shift + i] = ((a[shift + i] - c * f[i]) % p + p) % p;
    a.pop_back();
  }
  return a;
}

bool naive_divides(const Digits& g, const Digits& f, std::int64_t p) {
  for (auto c : naive_mod(f, g, p))
    if (c != 0) return false;
  return true;
}

bool naive_irreducible(const Digits& f, std::int64_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::int64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::int64_t low = 0; low < count; ++low) {
      Digits g(d + 1, 0);
      std::int64_t v = low;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = v % p;
        v /= p;
      }
      g[d] = 1;
      if (naive_divides(g, f, p)) return false;
    }
  }
  return true;
}

std::uint32_t naive_ext_mul(const Ring& r, std::uint32_t a, std::uint32_t b) {
  const auto p = static_cast<std::int64_t>(r.characteristic());
  const unsigned k = r.extension_degree();
  Digits da(k), db(k);
  for (unsigned i = 0; i < k; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  Digits prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  Digits f(r.reduction().begin(), r.reduction().end());
  prod = naive_mod(prod, f, p);
  std::uint32_t out = 0;
  for (std::size_t i = prod.size(); i-- > 0;) out = out * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(prod[i]);
  return out;
}

void expect_ring_axioms_exhaustive(const Ring& r) {
  const auto q = r.size();
  for (std::uint32_t a = 0; a < q; ++a) {
    Elem x{a};
    EXPECT_EQ(r.add(x, r.zero()), x);
    EXPECT_EQ(r.mul(x, r.one()), x);
    EXPECT_EQ(r.add(x, r.neg(x)), r.zero());
    for (std::uint32_t b = 0; b < q; ++b) {
      Elem y{b};
      ASSERT_EQ(r.add(x, y), r.add(y, x));
      ASSERT_EQ(r.mul(x, y), r.mul(y, x));
      ASSERT_EQ(r.sub(r.add(x, y), y), x);
      for (std::uint32_t c = 0; c < q; ++c) {
        Elem z{c};
        ASSERT_EQ(r.add(r.add(x, y), z), r.add(x, r.add(y, z)));
        ASSERT_EQ(r.mul(r.mul(x, y), z), r.mul(x, r.mul(y, z)));
        ASSERT_EQ(r.mul(x, r.add(y, z)), r.add(r.mul(x, y), r.mul(x, z)));
      }
    }
  }
}

void expect_ring_axioms_sampled(const Ring& r, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, r.size() - 1);
  for (int t = 0; t < trials; ++t) {
    Elem x{pick(rng)}, y{pick(rng)}, z{pick(rng)};
    ASSERT_EQ(r.add(r.add(x, y), z), r.add(x, r.add(y, z)));
    ASSERT_EQ(r.mul(r.mul(x, y), z), r.mul(x, r.mul(y, z)));
    ASSERT_EQ(r.mul(x, r.add(y, z)), r.add(r.mul(x, y), r.mul(x, z)));
    ASSERT_EQ(r.mul(x, y), r.mul(y, x));
    ASSERT_EQ(r.sub(r.add(x, y), y), x);
  }
}

}  // namespace

TEST(Ring, ConstructsEachKind) {
  EXPECT_EQ(Ring::integers_mod(12).size(), 12U);
  EXPECT_FALSE(Ring::integers_mod(12).is_field());
  EXPECT_EQ(Ring::prime_field(7).size(), 7U);
  EXPECT_TRUE(Ring::prime_field(7).is_field());
  Ring gf9 = Ring::field(9);
  EXPECT_EQ(gf9.size(), 9U);
  EXPECT_EQ(gf9.characteristic(), 3U);
  EXPECT_EQ(gf9.extension_degree(), 2U);
  EXPECT_EQ(gf9.kind(), RingKind::extension_field);
}

TEST(Ring, RejectsInvalidOrders) {
  EXPECT_THROW(Ring::field(6), std::domain_error);
  EXPECT_THROW(Ring::field(12), std::domain_error);
  EXPECT_THROW(Ring::prime_field(9), std::domain_error);
  EXPECT_THROW(Ring::integers_mod(1), std::domain_error);
  EXPECT_THROW(Ring(RingSpec::extension_field(4, 2)), std::domain_error);
}

TEST(Ring, Gf4UsesSmallestIrreducibleQuadratic) {
  Ring gf4 = Ring::field(4);
  EXPECT_EQ(gf4.reduction(), (std::vector<std::uint32_t>{1, 1, 1}));
  // alpha = x (repr 2): alpha^2 = alpha + 1 (repr 3), alpha^3 = 1.
  Elem alpha{2};
  EXPECT_EQ(gf4.mul(alpha, alpha), Elem{3});
  EXPECT_EQ(gf4.pow(alpha, 3), gf4.one());
  EXPECT_EQ(gf4.add(alpha, alpha), gf4.zero());
  // Brute-force scan: x^2 + x + 1 has no root in F_2, and neither does any
  // smaller monic quadratic candidate qualify.
  EXPECT_TRUE(naive_irreducible({1, 1, 1}, 2));
  EXPECT_FALSE(naive_irreducible({0, 0, 1}, 2));
  EXPECT_FALSE(naive_irreducible({1, 0, 1}, 2));
  EXPECT_FALSE(naive_irreducible({0, 1, 1}, 2));
}

TEST(Ring, DefaultReductionIsSmallestIrreducible) {
  for (std::uint64_t p : {2, 3, 5}) {
    for (unsigned k : {2U, 3U, 4U}) {
      if (ipow(p, k) > 625) continue;
      Ring r(RingSpec::extension_field(p, k));
      Digits chosen(r.reduction().begin(), r.reduction().end());
      EXPECT_TRUE(naive_irreducible(chosen, static_cast<std::int64_t>(p))) << p << "^" << k;
      // Every monic candidate with a smaller encoding is reducible.
      std::uint64_t enc = 0;
      for (std::size_t i = k; i-- > 0;) enc = enc * p + r.reduction()[i];
      for (std::uint64_t low = 0; low < enc; ++low) {
        Digits f(k + 1, 0);
        std::uint64_t v = low;
        for (unsigned i = 0; i < k; ++i) {
          f[i] = static_cast<std::int64_t>(v % p);
          v /= p;
        }
        f[k] = 1;
        EXPECT_FALSE(naive_irreducible(f, static_cast<std::int64_t>(p)));
      }
    }
  }
}

TEST(Ring, SuppliedReductionIsValidated) {
  EXPECT_NO_THROW(Ring(RingSpec::extension_field(2, 3, {1, 0, 1, 1})));
  EXPECT_THROW(Ring(RingSpec::extension_field(2, 2, {1, 0, 1})), std::domain_error);
  EXPECT_THROW(Ring(RingSpec::extension_field(2, 2, {1, 1, 0})), std::domain_error);
}

TEST(Ring, ExtensionMultiplicationMatchesNaivePolynomialProduct) {
  for (std::uint64_t q : {4, 8, 9, 16, 25, 27, 49, 64, 81, 125, 243, 256, 343, 729}) {
    Ring r = Ring::field(q);
    std::mt19937_64 rng(q);
    std::uniform_int_distribution<std::uint32_t> pick(0, r.size() - 1);
    for (int t = 0; t < 2000; ++t) {
      std::uint32_t a = pick(rng), b = pick(rng);
      ASSERT_EQ(r.mul(Elem{a}, Elem{b}).v, naive_ext_mul(r, a, b)) << "q=" << q;
    }
  }
}

TEST(Ring, ZnInverse) {
  Ring z8 = Ring::integers_mod(8);
  EXPECT_EQ(z8.inv(Elem{3}), Elem{3});
  EXPECT_THROW(z8.inv(Elem{2}), NotAUnit);
  EXPECT_THROW(z8.inv(Elem{0}), NotAUnit);
  EXPECT_FALSE(z8.is_unit(Elem{4}));
}

TEST(Ring, FieldInverse) {
  EXPECT_EQ(Ring::prime_field(7).inv(Elem{3}), Elem{5});
  EXPECT_THROW(Ring::prime_field(7).inv(Elem{0}), NotAUnit);
}

TEST(Ring, AxiomsExhaustiveSmallRings) {
  for (std::uint64_t n = 2; n <= 16; ++n) expect_ring_axioms_exhaustive(Ring::integers_mod(n));
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) expect_ring_axioms_exhaustive(Ring::field(q));
}

TEST(Ring, AxiomsSampledLargerRings) {
  expect_ring_axioms_sampled(Ring::integers_mod(1000), 10000, 1);
  expect_ring_axioms_sampled(Ring::prime_field(101), 10000, 2);
  expect_ring_axioms_sampled(Ring::field(27), 10000, 3);
  expect_ring_axioms_sampled(Ring::field(625), 10000, 4);
  expect_ring_axioms_sampled(Ring::field(2187), 10000, 5);
  expect_ring_axioms_sampled(Ring::prime_field(2147483647), 10000, 6);
}

TEST(Ring, InversesExhaustiveUpTo64) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49, 53, 59, 61, 64}) {
    Ring r = Ring::field(q);
    for (std::uint32_t a = 1; a < r.size(); ++a) ASSERT_EQ(r.mul(Elem{a}, r.inv(Elem{a})), r.one()) << q;
  }
  for (std::uint64_t n = 2; n <= 64; ++n) {
    Ring r = Ring::integers_mod(n);
    for (std::uint32_t a = 1; a < n; ++a) {
      EXPECT_EQ(r.is_unit(Elem{a}), gcd_int(a, n) == 1);
      if (r.is_unit(Elem{a})) ASSERT_EQ(r.mul(Elem{a}, r.inv(Elem{a})), r.one());
    }
  }
}

TEST(Ring, DigitsRoundTrip) {
  Ring r = Ring::field(27);
  for (Elem a : r.elements()) {
    auto d = r.digits(a);
    EXPECT_EQ(d.size(), 3U);
    EXPECT_EQ(r.from_digits(d), a);
  }
  EXPECT_THROW(r.from_repr(27), std::out_of_range);
}

TEST(Ring, FromIntIsTheImageOfZ) {
  Ring gf4 = Ring::field(4);
  EXPECT_EQ(gf4.from_int(3), gf4.one());
  EXPECT_EQ(gf4.from_int(-1), gf4.one());
  EXPECT_EQ(Ring::integers_mod(6).from_int(-7), Elem{5});
}

TEST(NumberTheory, TotientExamples) {
  EXPECT_EQ(totient(12), 4U);
  EXPECT_EQ(totient(1), 1U);
  EXPECT_EQ(totient(97), 96U);
  EXPECT_THROW(totient(0), std::domain_error);
}

TEST(NumberTheory, TotientMatchesCoprimeCount) {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t a = 1; a <= n; ++a)
      if (std::gcd(a, n) == 1) ++count;
    ASSERT_EQ(totient(n), count) << n;
  }
}

TEST(NumberTheory, DivisorSumOfTotientIsN) {
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    std::uint64_t s = 0;
    for (auto d : divisors(n)) s += totient(n / d);
    ASSERT_EQ(s, n);
  }
}

TEST(NumberTheory, DivisorsAndFactorization) {
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(factorize(360), (std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(is_prime_power(49), (std::optional<std::pair<std::uint64_t, unsigned>>{{7, 2}}));
  EXPECT_FALSE(is_prime_power(12).has_value());
  EXPECT_FALSE(is_prime_power(1).has_value());
  EXPECT_EQ(gcd_int(0, 5), 5U);
}

TEST(NumberTheory, VarianceFormulaExamples) {
  EXPECT_EQ(theory_var_zn(2), Rational(1, 2));
  EXPECT_EQ(theory_var_zn(6), Rational(3, 2));
  EXPECT_EQ(theory_var_zn(10), Rational(17, 10));
  EXPECT_EQ(theory_var_zn(16), Rational(2));
  EXPECT_EQ(theory_var_zn(9), Rational(4, 3));
  EXPECT_THROW(theory_var_zn(1), std::domain_error);
}

TEST(NumberTheory, VarianceTimesNIsDivisorTotientSum) {
  for (std::uint64_t n = 2; n <= 2000; ++n) {
    // a(n) = sum_{d | n} (d - 1) phi(n / d), computed directly here.
    std::uint64_t a = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) a += (d - 1) * totient(n / d);
    ASSERT_EQ(a006579(n), a) << n;
    ASSERT_EQ(theory_var_zn(n) * Rational(static_cast<i128>(n)), Rational(static_cast<i128>(a))) << n;
  }
}

TEST(NumberTheory, VarianceOfPrimePowers) {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    std::uint64_t q = p;
    for (unsigned k = 1; q <= 10000; ++k, q *= p)
      EXPECT_EQ(theory_var_zn(q), Rational(static_cast<i128>(k * (p - 1)), static_cast<i128>(p)));
  }
}

TEST(Rational, ArithmeticAndNormalization) {
  Rational a(6, -4);
  EXPECT_EQ(a.num(), -3);
  EXPECT_EQ(a.den(), 2);
  EXPECT_EQ(a.str(), "-3/2");
  EXPECT_EQ((Rational(1, 2) + Rational(1, 3)).str(), "5/6");
  EXPECT_EQ((Rational(1, 2) - Rational(1, 2)).str(), "0");
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 3), Rational(1, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_EQ(parse_i128("-170141183460469231731687303715884105728"), std::numeric_limits<i128>::min());
}
