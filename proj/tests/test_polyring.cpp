#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "rootcensus/multipoly.hpp"
#include "rootcensus/numtheory.hpp"
#include "rootcensus/ring.hpp"
#include "rootcensus/shaped.hpp"
#include "rootcensus/unipoly.hpp"

using namespace rootcensus;

namespace {

UniPoly random_poly(const Ring& r, int deg, std::mt19937_64& rng, bool monic) {
  std::uniform_int_distribution<std::uint32_t> pick(0, r.size() - 1);
  std::vector<Elem> c(static_cast<std::size_t>(deg + 1));
  for (auto& v : c) v = Elem{pick(rng)};
  if (monic) {
    c.back() = r.one();
  } else {
    while (c.back().v == 0) c.back() = Elem{pick(rng)};
  }
  return UniPoly(std::move(c));
}

UniPoly monic_from_index(const Ring& r, std::uint64_t idx, int deg) {
  std::vector<Elem> c(static_cast<std::size_t>(deg + 1));
  for (int i = 0; i < deg; ++i) {
    c[static_cast<std::size_t>(i)] = Elem{static_cast<std::uint32_t>(idx % r.size())};
    idx /= r.size();
  }
  c.back() = r.one();
  return UniPoly(std::move(c));
}

bool divides(const Ring& r, const UniPoly& d, const UniPoly& f) { return uni_divmod(r, f, d).second.is_zero(); }

// Oracle: a common monic factor of degree 1..min(deg) exists, by trial division.
bool share_factor_by_search(const Ring& r, const UniPoly& f, const UniPoly& g) {
  const int top = std::min(f.degree(), g.degree());
  for (int d = 1; d <= top; ++d) {
    const std::uint64_t count = ipow(r.size(), static_cast<unsigned>(d));
    for (std::uint64_t i = 0; i < count; ++i) {
      UniPoly h = monic_from_index(r, i, d);
      if (divides(r, h, f) && divides(r, h, g)) return true;
    }
  }
  return false;
}

// Oracle: evaluate the shaped polynomial term by term from its slot list.
Elem slow_eval(const Ring& r, const ShapedMultiPoly& f, Elem x0, const std::vector<Elem>& pt) {
  Elem acc = r.pow(x0, f.main_deg());
  const auto& slots = f.shape->slots();
  for (std::size_t s = 0; s < slots.size(); ++s) {
    Elem t = r.mul(f.coeffs[s], r.pow(x0, slots[s].power));
    for (std::size_t j = 0; j < pt.size(); ++j) t = r.mul(t, r.pow(pt[j], slots[s].exps[j]));
    acc = r.add(acc, t);
  }
  return acc;
}

}  // namespace

TEST(UniPoly, DivModExample) {
  Ring z5 = Ring::integers_mod(5);
  auto [q, rem] = uni_divmod(z5, uni_from_ints(z5, {1, 0, 1}), uni_from_ints(z5, {-1, 1}));
  EXPECT_EQ(q, uni_from_ints(z5, {1, 1}));
  EXPECT_EQ(rem, uni_from_ints(z5, {2}));
}

TEST(UniPoly, DivModErrors) {
  Ring z8 = Ring::integers_mod(8);
  EXPECT_THROW(uni_divmod(z8, uni_from_ints(z8, {1, 1}), UniPoly{}), std::domain_error);
  EXPECT_THROW(uni_divmod(z8, uni_from_ints(z8, {1, 0, 1}), uni_from_ints(z8, {1, 2})), std::domain_error);
}

TEST(UniPoly, DivModIdentityRandom) {
  std::mt19937_64 rng(11);
  for (std::uint64_t q : {7, 9, 16, 101}) {
    Ring r = Ring::field(q);
    for (int t = 0; t < 2000; ++t) {
      UniPoly f = random_poly(r, static_cast<int>(rng() % 9), rng, false);
      UniPoly g = random_poly(r, static_cast<int>(rng() % 5), rng, false);
      auto [quo, rem] = uni_divmod(r, f, g);
      ASSERT_LT(rem.degree(), g.degree());
      ASSERT_EQ(uni_add(r, uni_mul(r, quo, g), rem), f);
    }
  }
  Ring z12 = Ring::integers_mod(12);
  for (int t = 0; t < 2000; ++t) {
    UniPoly f = random_poly(z12, static_cast<int>(rng() % 9), rng, false);
    UniPoly g = random_poly(z12, 1 + static_cast<int>(rng() % 4), rng, true);
    auto [quo, rem] = uni_divmod(z12, f, g);
    ASSERT_EQ(uni_add(z12, uni_mul(z12, quo, g), rem), f);
  }
}

TEST(UniPoly, EvalIsHomomorphism) {
  Ring r = Ring::field(25);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    UniPoly f = random_poly(r, 4, rng, false);
    UniPoly g = random_poly(r, 3, rng, false);
    for (Elem a : r.elements()) {
      ASSERT_EQ(uni_eval(r, uni_mul(r, f, g), a), r.mul(uni_eval(r, f, a), uni_eval(r, g, a)));
      ASSERT_EQ(uni_eval(r, uni_add(r, f, g), a), r.add(uni_eval(r, f, a), uni_eval(r, g, a)));
    }
  }
}

TEST(UniPoly, GcdExamples) {
  Ring f7 = Ring::prime_field(7);
  EXPECT_EQ(uni_gcd(f7, uni_from_ints(f7, {-1, 0, 1}), uni_from_ints(f7, {2, -3, 1})), uni_from_ints(f7, {-1, 1}));
  EXPECT_EQ(uni_gcd(f7, uni_from_ints(f7, {1, 1}), UniPoly{}), uni_from_ints(f7, {1, 1}));
  EXPECT_EQ(uni_gcd(f7, uni_from_ints(f7, {3, 3}), UniPoly{}), uni_from_ints(f7, {1, 1}));
  EXPECT_THROW(uni_gcd(f7, UniPoly{}, UniPoly{}), std::domain_error);
  EXPECT_THROW(uni_gcd(Ring::integers_mod(8), uni_from_ints(Ring::integers_mod(8), {1, 1}), UniPoly{}),
               std::domain_error);
}

TEST(UniPoly, GcdIsGreatestCommonDivisor) {
  std::mt19937_64 rng(5);
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8}) {
    Ring r = Ring::field(q);
    for (int t = 0; t < 1000; ++t) {
      UniPoly h = random_poly(r, static_cast<int>(rng() % 3), rng, true);
      UniPoly f = uni_mul(r, h, random_poly(r, static_cast<int>(rng() % 4), rng, false));
      UniPoly g = uni_mul(r, h, random_poly(r, static_cast<int>(rng() % 4), rng, false));
      UniPoly d = uni_gcd(r, f, g);
      ASSERT_TRUE(d.is_monic());
      ASSERT_TRUE(divides(r, d, f));
      ASSERT_TRUE(divides(r, d, g));
      ASSERT_TRUE(divides(r, h, d));
    }
  }
}

TEST(UniPoly, ShareFactorMatchesTrialDivision) {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    Ring r = Ring::field(q);
    for (int n = 1; n <= 3; ++n) {
      for (int m = 1; m <= 3; ++m) {
        const std::uint64_t pf = ipow(q, static_cast<unsigned>(n)), pg = ipow(q, static_cast<unsigned>(m));
        if (pf * pg > 4096) continue;
        for (std::uint64_t i = 0; i < pf; ++i)
          for (std::uint64_t j = 0; j < pg; ++j) {
            UniPoly f = monic_from_index(r, i, n), g = monic_from_index(r, j, m);
            ASSERT_EQ(uni_share_factor(r, f, g), share_factor_by_search(r, f, g));
          }
      }
    }
  }
}

TEST(UniPoly, NonCoprimeDensityIsOneOverQ) {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    Ring r = Ring::field(q);
    for (int n = 1; n <= 3; ++n) {
      for (int m = 1; m <= 3; ++m) {
        const std::uint64_t pf = ipow(q, static_cast<unsigned>(n)), pg = ipow(q, static_cast<unsigned>(m));
        std::uint64_t shared = 0;
        for (std::uint64_t i = 0; i < pf; ++i) {
          UniPoly f = monic_from_index(r, i, n);
          for (std::uint64_t j = 0; j < pg; ++j)
            if (uni_share_factor(r, f, monic_from_index(r, j, m))) ++shared;
        }
        EXPECT_EQ(shared * q, pf * pg) << "q=" << q << " n=" << n << " m=" << m;
      }
    }
  }
}

TEST(UniPoly, RootCountExamples) {
  Ring z8 = Ring::integers_mod(8);
  EXPECT_EQ(count_distinct_roots_zn(z8, uni_from_ints(z8, {-1, 0, 1})), 4U);
  Ring z2 = Ring::integers_mod(2);
  EXPECT_EQ(count_distinct_roots_zn(z2, uni_from_ints(z2, {1, 1, 1})), 0U);
  EXPECT_THROW(count_distinct_roots_zn(z8, uni_from_ints(z8, {1, 2})), std::domain_error);
  EXPECT_THROW(count_distinct_roots_zn(z8, uni_from_ints(z8, {1})), std::domain_error);
}

TEST(UniPoly, RootCountOverFieldBoundedByDegree) {
  std::mt19937_64 rng(8);
  Ring r = Ring::field(13);
  for (int t = 0; t < 2000; ++t) {
    int d = 1 + static_cast<int>(rng() % 5);
    UniPoly f = random_poly(r, d, rng, true);
    ASSERT_LE(count_distinct_roots_zn(r, f), static_cast<std::uint32_t>(d));
  }
}

TEST(MPoly, ArithmeticAndEvaluation) {
  Ring f7 = Ring::prime_field(7);
  MPolyRing pr(f7, 2);
  MPoly x = pr.variable(0), y = pr.variable(1);
  MPoly f = pr.add(pr.mul(x, x), pr.scale(pr.mul(x, y), Elem{3}));
  std::vector<Elem> pt{Elem{2}, Elem{5}};
  EXPECT_EQ(pr.eval(f, pt), Elem{(4 + 3 * 10) % 7});
  EXPECT_EQ(pr.total_degree(f), 2);
  EXPECT_EQ(pr.total_degree(pr.zero()), -1);
  EXPECT_TRUE(pr.sub(f, f).is_zero());
  std::vector<std::uint32_t> e{1, 1};
  EXPECT_EQ(pr.coeff(f, e), Elem{3});
}

TEST(MPoly, ProductEvaluatesToProductOfValues) {
  Ring r = Ring::field(9);
  MPolyRing pr(r, 3);
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::uint32_t> pick(0, 8);
  auto random_mpoly = [&] {
    MPoly acc = pr.zero();
    for (int t = 0; t < 5; ++t) {
      std::vector<std::uint32_t> e{pick(rng) % 3, pick(rng) % 3, pick(rng) % 3};
      acc = pr.add(acc, pr.monomial(e, Elem{pick(rng)}));
    }
    return acc;
  };
  for (int t = 0; t < 300; ++t) {
    MPoly a = random_mpoly(), b = random_mpoly();
    std::vector<Elem> pt{Elem{pick(rng)}, Elem{pick(rng)}, Elem{pick(rng)}};
    ASSERT_EQ(pr.eval(pr.mul(a, b), pt), r.mul(pr.eval(a, pt), pr.eval(b, pt)));
    ASSERT_EQ(pr.eval(pr.sub(a, b), pt), r.sub(pr.eval(a, pt), pr.eval(b, pt)));
  }
}

TEST(Shaped, SlotCounts) {
  for (std::uint32_t n = 1; n <= 6; ++n) EXPECT_EQ(make_shape(2, n)->slot_count(), n * (n + 3) / 2);
  // Three variables: sum_{i<d} C(d - i + 2, 2).
  EXPECT_EQ(make_shape(3, 1)->slot_count(), 3U);
  EXPECT_EQ(make_shape(3, 2)->slot_count(), 9U);
  EXPECT_EQ(make_shape(1, 4)->slot_count(), 4U);
  EXPECT_EQ(shaped_population(Ring::field(7), *make_shape(2, 2)), 16807U);
}

TEST(Shaped, IndexRoundTrip) {
  Ring r = Ring::field(4);
  auto s = make_shape(2, 2);
  const std::uint64_t pop = shaped_population(r, *s);
  for (std::uint64_t i = 0; i < pop; ++i) ASSERT_EQ(shaped_index(r, shaped_from_index(r, s, i)), i);
  EXPECT_THROW(shaped_from_index(r, s, pop), std::out_of_range);
}

TEST(Shaped, MultiEvalExample) {
  // f = x0^2 + x1 x0 + (x1 + 1) over F_5 at x1 = 2 -> x0^2 + 2 x0 + 3.
  Ring f5 = Ring::prime_field(5);
  MPolyRing pr(f5, 2);
  MPoly x0 = pr.variable(0), x1 = pr.variable(1);
  MPoly f = pr.add(pr.add(pr.mul(x0, x0), pr.mul(x1, x0)), pr.add(x1, pr.one()));
  ShapedMultiPoly sf = shaped_from_mpoly(f5, f);
  std::vector<Elem> pt{Elem{2}};
  EXPECT_EQ(multi_eval(f5, sf, pt), uni_from_ints(f5, {3, 2, 1}));
  EXPECT_THROW(multi_eval(f5, sf, std::vector<Elem>{}), std::invalid_argument);
}

TEST(Shaped, MultiEvalMatchesTermwiseEvaluation) {
  std::mt19937_64 rng(17);
  for (std::uint64_t q : {5, 8, 11}) {
    Ring r = Ring::field(q);
    std::uniform_int_distribution<std::uint32_t> pick(0, r.size() - 1);
    for (std::size_t nvars : {2U, 3U, 4U}) {
      for (std::uint32_t d = 1; d <= 3; ++d) {
        auto s = make_shape(nvars, d);
        for (int t = 0; t < 100; ++t) {
          auto f = random_shaped(r, s, rng);
          std::vector<Elem> pt(nvars - 1);
          for (auto& c : pt) c = Elem{pick(rng)};
          UniPoly u = multi_eval(r, f, pt);
          ASSERT_TRUE(u.is_monic());
          ASSERT_EQ(u.degree(), static_cast<int>(d));
          for (Elem a : r.elements()) ASSERT_EQ(uni_eval(r, u, a), slow_eval(r, f, a, pt));
        }
      }
    }
  }
}

TEST(Shaped, MpolyConversionRoundTrip) {
  Ring r = Ring::field(7);
  std::mt19937_64 rng(2);
  for (std::size_t nvars : {1U, 2U, 3U}) {
    for (std::uint32_t d = 1; d <= 3; ++d) {
      auto s = make_shape(nvars, d);
      for (int t = 0; t < 50; ++t) {
        auto f = random_shaped(r, s, rng);
        MPoly m = to_mpoly(r, f);
        EXPECT_EQ(MPolyRing(r, nvars).total_degree(m), static_cast<int>(d));
        EXPECT_EQ(shaped_from_mpoly(r, m), f);
      }
    }
  }
}

TEST(Shaped, RejectsPolynomialsOutsideTheShape) {
  Ring r = Ring::prime_field(5);
  MPolyRing pr(r, 2);
  MPoly x0 = pr.variable(0), x1 = pr.variable(1);
  // x0 + x1^2 has total degree above its x0-degree.
  EXPECT_THROW(shaped_from_mpoly(r, pr.add(x0, pr.mul(x1, x1))), std::domain_error);
  // 2 x0 is not monic.
  EXPECT_THROW(shaped_from_mpoly(r, pr.scale(x0, Elem{2})), std::domain_error);
  EXPECT_THROW(shaped_from_mpoly(r, pr.one()), std::domain_error);
}

TEST(Shaped, ProductSpecializesToProductOfSpecializations) {
  Ring r = Ring::field(11);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::uint32_t> pick(0, 10);
  for (int t = 0; t < 200; ++t) {
    auto a = random_shaped(r, make_shape(3, 1 + t % 2), rng);
    auto b = random_shaped(r, make_shape(3, 1 + t % 3), rng);
    auto ab = shaped_mul(r, a, b);
    EXPECT_EQ(ab.main_deg(), a.main_deg() + b.main_deg());
    std::vector<Elem> pt{Elem{pick(rng)}, Elem{pick(rng)}};
    ASSERT_EQ(multi_eval(r, ab, pt), uni_mul(r, multi_eval(r, a, pt), multi_eval(r, b, pt)));
  }
}
