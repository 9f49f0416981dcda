#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "rootcensus/multipoly.hpp"
#include "rootcensus/polytext.hpp"
#include "rootcensus/ring.hpp"

using namespace rootcensus;

TEST(PolyText, ParsesAndPrintsCanonically) {
  Ring r = Ring::prime_field(7);
  MPoly p = parse_poly(r, "2 + 3*x1*x0 + x0^2");
  EXPECT_EQ(p.nvars(), 2U);
  EXPECT_EQ(format_poly(p), "x0^2 + 3*x0*x1 + 2");
  EXPECT_EQ(format_poly(parse_poly(r, "x0 - x0")), "0");
}

TEST(PolyText, ReducesLiteralsAndNegation) {
  Ring r = Ring::prime_field(5);
  EXPECT_EQ(format_poly(parse_poly(r, "-x0 + 12")), "4*x0 + 2");
  EXPECT_EQ(format_poly(parse_poly(r, "(x0 + 1)^2")), "x0^2 + 2*x0 + 1");
  EXPECT_EQ(format_poly(parse_poly(r, "x0*(x1 - 1)")), "x0*x1 + 4*x0");
}

TEST(PolyText, MinimumVariableCount) {
  Ring r = Ring::prime_field(3);
  EXPECT_EQ(parse_poly(r, "x0 + 1", 3).nvars(), 3U);
  EXPECT_EQ(parse_poly(r, "x2").nvars(), 3U);
  EXPECT_EQ(infer_nvars("1 + 2"), 0U);
}

TEST(PolyText, ExtensionFieldLiteralsAreReprs) {
  Ring gf4 = Ring::field(4);
  MPoly p = parse_poly(gf4, "2*x0 + 3");
  MPolyRing pr(gf4, 1);
  std::vector<Elem> pt{Elem{2}};
  // alpha * alpha + (alpha + 1) = (alpha + 1) + (alpha + 1) = 0.
  EXPECT_EQ(pr.eval(p, pt), gf4.zero());
  EXPECT_THROW(parse_poly(gf4, "x0 + 4"), PolyParseError);
}

TEST(PolyText, RejectsMalformedInput) {
  Ring r = Ring::prime_field(7);
  for (const char* bad : {"", "x", "x10", "x0 +", "(x0", "x0 ^", "x0 $ 1", "y0", "x0^1001", "2 3"})
    EXPECT_THROW(parse_poly(r, bad), PolyParseError) << bad;
}

TEST(PolyText, RoundTripRandom) {
  std::mt19937_64 rng(12);
  for (std::uint64_t q : {2, 7, 9, 101}) {
    Ring r = Ring::field(q);
    std::uniform_int_distribution<std::uint32_t> pick(0, r.size() - 1);
    for (std::size_t nvars : {1U, 2U, 4U}) {
      MPolyRing pr(r, nvars);
      for (int t = 0; t < 200; ++t) {
        MPoly p = pr.zero();
        for (int k = 0; k < 6; ++k) {
          std::vector<std::uint32_t> e(nvars);
          for (auto& x : e) x = static_cast<std::uint32_t>(rng() % 4);
          p = pr.add(p, pr.monomial(e, Elem{pick(rng)}));
        }
        std::string text = format_poly(p);
        ASSERT_EQ(parse_poly(r, text, nvars), p) << text;
      }
    }
  }
}
