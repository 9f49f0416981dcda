#pragma once

/// \file unlucky.hpp
/// Simulation of unlucky evaluation points in interpolation-based GCD
/// algorithms over F_p.
///
/// Each draw fixes monic shaped G, Â, B̂ (random, or given cofactors with a
/// random G) and forms A = G Â, B = G B̂.  A point alpha is unlucky when
/// gcd(Â(x0, alpha), B̂(x0, alpha)) != 1; equivalently the image
/// gcd(A(x0, alpha), B(x0, alpha)) has degree above deg G, which is checked
/// on every trial.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rootcensus/census.hpp"
#include "rootcensus/numtheory.hpp"
#include "rootcensus/parallel.hpp"
#include "rootcensus/rational.hpp"
#include "rootcensus/resultant.hpp"
#include "rootcensus/ring.hpp"
#include "rootcensus/shaped.hpp"
#include "rootcensus/unipoly.hpp"

namespace rootcensus {

struct UnluckyConfig {
  std::uint64_t p = 101;
  std::size_t nvars = 3;  // including x0
  /// Fixed cofactors; when absent both are drawn at random per draw.
  std::optional<ShapedMultiPoly> ahat;
  std::optional<ShapedMultiPoly> bhat;
  std::uint32_t deg_g = 1;  // 0 means G = 1
  std::uint32_t deg_ahat = 2;
  std::uint32_t deg_bhat = 2;
  std::uint64_t draws = 1000;
  std::uint64_t points_per_draw = 100;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  /// Report trials whose coordinate x_var (var >= 1) equals value.
  std::optional<std::pair<std::size_t, std::uint64_t>> slice;
};

struct UnluckyReport {
  std::uint64_t draws = 0;
  std::uint64_t trials = 0;
  std::uint64_t unlucky = 0;
  double frequency = 0;
  double stderr_frequency = 0;  // clustered by draw

  std::uint64_t coprime_draws = 0;
  std::uint64_t coprime_trials = 0;
  std::uint64_t coprime_unlucky = 0;
  double coprime_frequency = 0;
  double coprime_stderr = 0;

  std::optional<std::uint64_t> slice_trials;
  std::optional<std::uint64_t> slice_unlucky;

  /// Trials where the cofactor test and the image-degree test disagree.
  std::uint64_t image_mismatches = 0;

  Rational reference;     // 1/p
  Rational bezout_bound;  // deg Â deg B̂ / p
  /// Fixed-cofactor runs: the actual resultant degree and deg R / p.
  std::optional<int> resultant_degree;
  std::optional<Rational> resultant_bound;
};

namespace detail {

struct UnluckyAcc {
  std::uint64_t draws = 0, trials = 0, unlucky = 0;
  std::uint64_t cop_draws = 0, cop_trials = 0, cop_unlucky = 0;
  std::uint64_t slice_trials = 0, slice_unlucky = 0, mismatches = 0;
  // Cluster sums: sum u_d^2, sum u_d n_d, sum n_d^2.
  long double uu = 0, un = 0, nn = 0;
  long double cop_uu = 0, cop_un = 0, cop_nn = 0;

  void merge(const UnluckyAcc& o) {
    draws += o.draws;
    trials += o.trials;
    unlucky += o.unlucky;
    cop_draws += o.cop_draws;
    cop_trials += o.cop_trials;
    cop_unlucky += o.cop_unlucky;
    slice_trials += o.slice_trials;
    slice_unlucky += o.slice_unlucky;
    mismatches += o.mismatches;
    uu += o.uu;
    un += o.un;
    nn += o.nn;
    cop_uu += o.cop_uu;
    cop_un += o.cop_un;
    cop_nn += o.cop_nn;
  }
};

inline double cluster_stderr(long double uu, long double un, long double nn, long double total_u, long double total_n) {
  if (total_n <= 0) return 0;
  long double f = total_u / total_n;
  long double ss = uu - 2 * f * un + f * f * nn;
  if (ss < 0) ss = 0;
  return static_cast<double>(std::sqrt(ss) / total_n);
}

}  // namespace detail

inline UnluckyReport unlucky_sim(const UnluckyConfig& cfg) {
  if (!is_prime(cfg.p)) throw std::domain_error("unlucky_sim requires a prime p");
  if (cfg.nvars < 2) throw std::domain_error("unlucky_sim requires at least two variables");
  if (cfg.ahat.has_value() != cfg.bhat.has_value()) throw std::invalid_argument("give both cofactors or neither");
  if (cfg.slice && (cfg.slice->first < 1 || cfg.slice->first >= cfg.nvars))
    throw std::invalid_argument("slice variable must be one of x1..x_{nvars-1}");
  const Ring ring = Ring::prime_field(cfg.p);
  const bool fixed = cfg.ahat.has_value();
  if (fixed) {
    if (cfg.ahat->nvars() != cfg.nvars || cfg.bhat->nvars() != cfg.nvars)
      throw std::invalid_argument("cofactor variable count does not match nvars");
  }
  const std::size_t r = cfg.nvars - 1;
  auto shape_g = cfg.deg_g > 0 ? make_shape(cfg.nvars, cfg.deg_g) : nullptr;
  auto shape_a = fixed ? cfg.ahat->shape : make_shape(cfg.nvars, cfg.deg_ahat);
  auto shape_b = fixed ? cfg.bhat->shape : make_shape(cfg.nvars, cfg.deg_bhat);

  bool fixed_coprime = false;
  UnluckyReport rep;
  if (fixed) {
    MPoly res = resultant_poly(ring, *cfg.ahat, *cfg.bhat);
    fixed_coprime = !res.is_zero();
    rep.resultant_degree = MPolyRing(ring, r).total_degree(res);
    if (fixed_coprime) rep.resultant_bound = Rational(*rep.resultant_degree, static_cast<i128>(cfg.p));
  }

  auto acc = parallel_chunks<detail::UnluckyAcc>(
      cfg.draws, 16, cfg.workers, [] { return detail::UnluckyAcc{}; },
      [&](detail::UnluckyAcc& a, std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
        auto rng = detail::chunk_rng(cfg.seed, chunk);
        std::uniform_int_distribution<std::uint32_t> pick(0, ring.size() - 1);
        std::vector<Elem> pt(r);
        for (std::uint64_t d = begin; d < end; ++d) {
          ShapedMultiPoly ah = fixed ? *cfg.ahat : random_shaped(ring, shape_a, rng);
          ShapedMultiPoly bh = fixed ? *cfg.bhat : random_shaped(ring, shape_b, rng);
          std::optional<ShapedMultiPoly> g;
          if (shape_g) g = random_shaped(ring, shape_g, rng);
          const ShapedMultiPoly big_a = g ? shaped_mul(ring, *g, ah) : ah;
          const ShapedMultiPoly big_b = g ? shaped_mul(ring, *g, bh) : bh;
          const bool coprime = fixed ? fixed_coprime : !resultant_poly(ring, ah, bh).is_zero();
          std::uint64_t u = 0;
          for (std::uint64_t t = 0; t < cfg.points_per_draw; ++t) {
            for (auto& c : pt) c = Elem{pick(rng)};
            const bool bad = uni_share_factor(ring, multi_eval(ring, ah, pt), multi_eval(ring, bh, pt));
            const int image_deg = uni_gcd(ring, multi_eval(ring, big_a, pt), multi_eval(ring, big_b, pt)).degree();
            if (bad != (image_deg > static_cast<int>(cfg.deg_g))) ++a.mismatches;
            if (bad) ++u;
            if (cfg.slice && pt[cfg.slice->first - 1].v == cfg.slice->second % cfg.p) {
              ++a.slice_trials;
              if (bad) ++a.slice_unlucky;
            }
          }
          const auto n = static_cast<long double>(cfg.points_per_draw);
          const auto ul = static_cast<long double>(u);
          ++a.draws;
          a.trials += cfg.points_per_draw;
          a.unlucky += u;
          a.uu += ul * ul;
          a.un += ul * n;
          a.nn += n * n;
          if (coprime) {
            ++a.cop_draws;
            a.cop_trials += cfg.points_per_draw;
            a.cop_unlucky += u;
            a.cop_uu += ul * ul;
            a.cop_un += ul * n;
            a.cop_nn += n * n;
          }
        }
      },
      [](detail::UnluckyAcc& into, const detail::UnluckyAcc& from) { into.merge(from); });

  rep.draws = acc.draws;
  rep.trials = acc.trials;
  rep.unlucky = acc.unlucky;
  rep.frequency = acc.trials ? static_cast<double>(acc.unlucky) / static_cast<double>(acc.trials) : 0.0;
  rep.stderr_frequency = detail::cluster_stderr(acc.uu, acc.un, acc.nn, acc.unlucky, acc.trials);
  rep.coprime_draws = acc.cop_draws;
  rep.coprime_trials = acc.cop_trials;
  rep.coprime_unlucky = acc.cop_unlucky;
  rep.coprime_frequency =
      acc.cop_trials ? static_cast<double>(acc.cop_unlucky) / static_cast<double>(acc.cop_trials) : 0.0;
  rep.coprime_stderr = detail::cluster_stderr(acc.cop_uu, acc.cop_un, acc.cop_nn, acc.cop_unlucky, acc.cop_trials);
  if (cfg.slice) {
    rep.slice_trials = acc.slice_trials;
    rep.slice_unlucky = acc.slice_unlucky;
  }
  rep.image_mismatches = acc.mismatches;
  rep.reference = Rational(1, static_cast<i128>(cfg.p));
  rep.bezout_bound = Rational(static_cast<i128>(shape_a->main_deg()) * shape_b->main_deg(), static_cast<i128>(cfg.p));
  return rep;
}

}  // namespace rootcensus
