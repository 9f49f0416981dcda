#include <gtest/gtest.h>

#include "rootcensus/polytext.hpp"
#include "rootcensus/unlucky.hpp"

using namespace rootcensus;

namespace {

UnluckyConfig fixed_cofactors(const char* a, const char* b, std::uint64_t p = 101) {
  Ring r = Ring::prime_field(p);
  UnluckyConfig cfg;
  cfg.p = p;
  cfg.nvars = 3;
  cfg.ahat = shaped_from_mpoly(r, parse_poly(r, a, 3));
  cfg.bhat = shaped_from_mpoly(r, parse_poly(r, b, 3));
  return cfg;
}

}  // namespace

TEST(Unlucky, PathologicalSliceIsAlwaysUnlucky) {
  UnluckyConfig cfg = fixed_cofactors("x0^2 + x2", "x0^2 + x2 + x1 - 1");
  cfg.draws = 400;
  cfg.points_per_draw = 500;
  cfg.slice = {{1, 1}};
  cfg.workers = 2;
  auto rep = unlucky_sim(cfg);
  ASSERT_TRUE(rep.slice_trials.has_value());
  EXPECT_GE(*rep.slice_trials, 1000U);
  EXPECT_EQ(*rep.slice_unlucky, *rep.slice_trials);
  // Off the slice the cofactors differ by a unit, so only the slice is unlucky.
  EXPECT_EQ(rep.unlucky, *rep.slice_trials);
  EXPECT_EQ(rep.image_mismatches, 0U);
  EXPECT_EQ(*rep.resultant_degree, 2);
  EXPECT_LE(std::abs(rep.frequency - 1.0 / 101), 3 * rep.stderr_frequency);
}

TEST(Unlucky, EqualCofactorsAlwaysUnlucky) {
  UnluckyConfig cfg = fixed_cofactors("x0^2 + x1*x2 + 3", "x0^2 + x1*x2 + 3");
  cfg.draws = 50;
  cfg.points_per_draw = 20;
  auto rep = unlucky_sim(cfg);
  EXPECT_EQ(rep.frequency, 1.0);
  EXPECT_EQ(rep.coprime_draws, 0U);
  EXPECT_EQ(rep.image_mismatches, 0U);
}

TEST(Unlucky, RandomCoprimeCofactorsBelowOneOverP) {
  UnluckyConfig cfg;
  cfg.p = 101;
  cfg.nvars = 3;
  cfg.draws = 1000;
  cfg.points_per_draw = 100;
  cfg.seed = 99;
  cfg.workers = 2;
  auto rep = unlucky_sim(cfg);
  EXPECT_EQ(rep.trials, 100000U);
  EXPECT_EQ(rep.image_mismatches, 0U);
  EXPECT_GT(rep.coprime_trials, 0U);
  EXPECT_LT(rep.coprime_frequency, 1.0 / 101 + 3 * rep.coprime_stderr);
  EXPECT_LE(std::abs(rep.frequency - 1.0 / 101), 3 * rep.stderr_frequency + 1e-12);
}

TEST(Unlucky, FixedCofactorWithinResultantBound) {
  UnluckyConfig cfg = fixed_cofactors("x0^2 + x1", "x0 + x2");
  cfg.draws = 200;
  cfg.points_per_draw = 200;
  auto rep = unlucky_sim(cfg);
  ASSERT_TRUE(rep.resultant_bound.has_value());
  EXPECT_LE(rep.frequency, rep.resultant_bound->to_double() + 3 * rep.stderr_frequency);
}

TEST(Unlucky, Errors) {
  UnluckyConfig cfg;
  cfg.p = 100;
  EXPECT_THROW(unlucky_sim(cfg), std::domain_error);
  cfg.p = 7;
  cfg.nvars = 1;
  EXPECT_THROW(unlucky_sim(cfg), std::domain_error);
  cfg.nvars = 3;
  cfg.slice = {{0, 1}};
  EXPECT_THROW(unlucky_sim(cfg), std::invalid_argument);
}

TEST(Unlucky, ReproducibleForSeed) {
  UnluckyConfig cfg;
  cfg.p = 11;
  cfg.draws = 100;
  cfg.points_per_draw = 30;
  cfg.seed = 4;
  auto a = unlucky_sim(cfg);
  cfg.workers = 3;
  auto b = unlucky_sim(cfg);
  EXPECT_EQ(a.unlucky, b.unlucky);
  EXPECT_EQ(a.coprime_unlucky, b.coprime_unlucky);
}
