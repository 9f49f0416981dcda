#pragma once

/// \file census.hpp
/// Exhaustive and Monte Carlo census engines.
///
///  - zn_root_census: distinct roots of every monic degree-m polynomial over Z_n.
///  - fq_pair_census / mv_census: for pairs (f, g) of shaped polynomials over
///    F_q (monic in x0, total degrees deg_f and deg_g), X counts the points
///    gamma in F_q^(nvars-1) where gcd(f(x0, gamma), g(x0, gamma)) != 1.
///
/// Exhaustive pair runs with identical shapes visit unordered pairs once and
/// weight off-diagonal pairs twice.  Counts are exact 64-bit integers and the
/// reported mean and variance are exact rationals.

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rootcensus/numtheory.hpp"
#include "rootcensus/parallel.hpp"
#include "rootcensus/rational.hpp"
#include "rootcensus/resultant.hpp"
#include "rootcensus/ring.hpp"
#include "rootcensus/shaped.hpp"
#include "rootcensus/unipoly.hpp"

namespace rootcensus {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CensusMode { exhaustive, montecarlo };

inline const char* to_string(CensusMode m) { return m == CensusMode::exhaustive ? "exhaustive" : "montecarlo"; }

struct CensusConfig {
  CensusMode mode = CensusMode::exhaustive;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  /// Cap on logical gcd (or root) evaluations for one exhaustive run.
  std::uint64_t budget = std::uint64_t{1} << 31U;
  /// Reuse a precomputed coprimality table of specialized univariate pairs.
  /// Off forces a fresh gcd at every point.
  bool memoize = true;
  /// After an exhaustive pair run, confirm that every pair with more
  /// vanishing points than a nonzero resultant allows has resultant zero.
  bool verify_resultant_gap = true;
};

struct McStats {
  double mean = 0;
  double variance = 0;  // unbiased
  double stderr_mean = 0;
  double stderr_variance = 0;  // batch means
  std::uint64_t batches = 0;
};

struct ResultantGap {
  std::uint64_t bound = 0;  // max zero count of a nonzero resultant
  std::uint64_t weighted_pairs_above = 0;
  std::uint64_t distinct_pairs_checked = 0;
  bool gap_empty = true;           // freq[k] = 0 for bound < k < K
  bool all_resultants_zero = true;  // every pair above the bound has R = 0
};

struct PointEstimate {
  double estimate = 0;
  double stderr_estimate = 0;
  Rational reference;  // 1/q
  std::optional<Rational> exact;
};

struct CensusResult {
  std::string experiment;
  std::vector<std::pair<std::string, std::string>> parameters;
  CensusMode mode = CensusMode::exhaustive;
  std::uint64_t population = 0;
  std::vector<std::uint64_t> freq;
  std::optional<Rational> mean;
  std::optional<Rational> variance;
  std::optional<McStats> mc;
  Rational theory_mean;
  Rational theory_var;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::optional<std::vector<Rational>> binomial_ref;
  std::optional<ResultantGap> gap;
  std::optional<PointEstimate> per_point;

  /// Exhaustive: exact equality of mean and variance with theory.
  /// Monte Carlo: |mean - E| <= 3 stderr and |var - V| <= 4 stderr(var).
  bool theory_matches() const {
    if (mode == CensusMode::exhaustive) return mean == theory_mean && variance == theory_var;
    if (!mc) return false;
    return std::abs(mc->mean - theory_mean.to_double()) <= 3 * mc->stderr_mean &&
           std::abs(mc->variance - theory_var.to_double()) <= 4 * mc->stderr_variance;
  }

  bool checks_pass() const {
    if (!theory_matches()) return false;
    if (gap && (!gap->gap_empty || !gap->all_resultants_zero)) return false;
    return true;
  }
};

/// Exact mean and variance of the outcome distribution freq / population.
inline std::pair<Rational, Rational> exact_moments(std::span<const std::uint64_t> freq) {
  i128 n = 0, s1 = 0, s2 = 0;
  for (std::size_t k = 0; k < freq.size(); ++k) {
    const auto f = static_cast<i128>(freq[k]);
    const auto kk = static_cast<i128>(k);
    n += f;
    s1 += kk * f;
    s2 += kk * kk * f;
  }
  if (n == 0) throw std::domain_error("empty census");
  Rational mean(s1, n);
  // (n s2 - s1^2) / n^2
  Rational var(detail::checked_add(detail::checked_mul(n, s2), -detail::checked_mul(s1, s1)), detail::checked_mul(n, n));
  return {mean, var};
}

/// B_k = population * C(trials, k) (1/q)^k (1 - 1/q)^(trials - k), exact.
inline std::vector<Rational> binomial_reference(std::uint64_t trials, std::uint64_t q, std::uint64_t population) {
  if (q < 1) throw std::domain_error("binomial_reference requires q >= 1");
  i128 qpow = 1;
  for (std::uint64_t i = 0; i < trials; ++i) qpow = detail::checked_mul(qpow, static_cast<i128>(q));
  std::vector<Rational> out;
  out.reserve(trials + 1);
  for (std::uint64_t k = 0; k <= trials; ++k) {
    i128 num = detail::checked_mul(static_cast<i128>(population), static_cast<i128>(binomial(trials, k)));
    for (std::uint64_t i = k; i < trials; ++i) num = detail::checked_mul(num, static_cast<i128>(q - 1));
    out.emplace_back(num, qpow);
  }
  return out;
}

/// q trials with success probability 1/q.
inline std::vector<Rational> binomial_reference(std::uint64_t q, std::uint64_t population) {
  return binomial_reference(q, q, population);
}

namespace detail {

inline std::uint64_t checked_budget(u128 evals, std::uint64_t budget, const std::string& what) {
  if (evals > budget)
    throw BudgetExceeded(what + " needs " + to_string(evals) + " evaluations, budget is " + std::to_string(budget));
  return static_cast<std::uint64_t>(evals);
}

inline std::vector<std::uint64_t>& add_freq(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
  for (std::size_t k = 0; k < into.size(); ++k)
    if (__builtin_add_overflow(into[k], from[k], &into[k])) throw std::overflow_error("frequency counter overflow");
  return into;
}

inline std::mt19937_64 chunk_rng(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32U)};
  return std::mt19937_64(seq);
}

struct MomentAcc {
  std::vector<std::uint64_t> freq;
  std::vector<long double> batch_s1, batch_s2;
  std::vector<std::uint64_t> batch_n;

  MomentAcc(std::size_t outcomes, std::size_t batches)
      : freq(outcomes, 0), batch_s1(batches, 0), batch_s2(batches, 0), batch_n(batches, 0) {}

  void add(std::uint64_t x, std::size_t batch) {
    ++freq[x];
    batch_s1[batch] += static_cast<long double>(x);
    batch_s2[batch] += static_cast<long double>(x) * x;
    ++batch_n[batch];
  }

  void merge(const MomentAcc& o) {
    add_freq(freq, o.freq);
    for (std::size_t b = 0; b < batch_n.size(); ++b) {
      batch_s1[b] += o.batch_s1[b];
      batch_s2[b] += o.batch_s2[b];
      batch_n[b] += o.batch_n[b];
    }
  }
};

inline McStats mc_stats(const MomentAcc& acc) {
  long double n = 0, s1 = 0, s2 = 0;
  for (std::size_t b = 0; b < acc.batch_n.size(); ++b) {
    n += acc.batch_n[b];
    s1 += acc.batch_s1[b];
    s2 += acc.batch_s2[b];
  }
  McStats st;
  if (n < 2) throw std::domain_error("Monte Carlo run needs at least two samples");
  st.mean = static_cast<double>(s1 / n);
  long double var = (s2 - s1 * s1 / n) / (n - 1);
  st.variance = static_cast<double>(var);
  st.stderr_mean = static_cast<double>(std::sqrt(var / n));
  // Batch means on the per-batch unbiased variance.
  std::vector<long double> vb;
  for (std::size_t b = 0; b < acc.batch_n.size(); ++b) {
    long double nb = acc.batch_n[b];
    if (nb < 2) continue;
    vb.push_back((acc.batch_s2[b] - acc.batch_s1[b] * acc.batch_s1[b] / nb) / (nb - 1));
  }
  st.batches = vb.size();
  if (vb.size() >= 2) {
    long double m = 0;
    for (auto v : vb) m += v;
    m /= static_cast<long double>(vb.size());
    long double ss = 0;
    for (auto v : vb) ss += (v - m) * (v - m);
    long double sd = std::sqrt(ss / static_cast<long double>(vb.size() - 1));
    st.stderr_variance = static_cast<double>(sd / std::sqrt(static_cast<long double>(vb.size())));
  }
  return st;
}

}  // namespace detail

/// Number of distinct roots of every monic degree-m polynomial over Z_n.
inline CensusResult zn_root_census(std::uint64_t n, std::uint32_t m, const CensusConfig& cfg = {}) {
  if (n < 2) throw std::domain_error("zn_root_census requires n >= 2");
  if (m < 1) throw std::domain_error("zn_root_census requires m >= 1");
  const Ring ring = Ring::integers_mod(n);
  u128 pop = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    pop *= n;
    if (pop > (u128{1} << 64U) - 1) throw BudgetExceeded("population exceeds 64 bits");
  }
  detail::checked_budget(pop * n, cfg.budget, "Z_n root census");
  const auto population = static_cast<std::uint64_t>(pop);

  auto freq = parallel_chunks<std::vector<std::uint64_t>>(
      population, 4096, cfg.workers, [&] { return std::vector<std::uint64_t>(n + 1, 0); },
      [&](std::vector<std::uint64_t>& acc, std::uint64_t, std::uint64_t begin, std::uint64_t end) {
        std::vector<Elem> c(m + 1);
        std::uint64_t idx = begin;
        for (std::uint32_t i = 0; i < m; ++i) {
          c[i] = Elem{static_cast<std::uint32_t>(idx % n)};
          idx /= n;
        }
        c[m] = ring.one();
        UniPoly f;
        for (std::uint64_t p = begin; p < end; ++p) {
          f.coeffs = c;
          ++acc[count_distinct_roots_zn(ring, f)];
          for (std::uint32_t i = 0; i < m; ++i) {
            if (++c[i].v < n) break;
            c[i].v = 0;
          }
        }
      },
      [](std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) { detail::add_freq(into, from); });

  CensusResult res;
  res.experiment = "zn_roots";
  res.parameters = {{"n", std::to_string(n)}, {"m", std::to_string(m)}};
  res.mode = CensusMode::exhaustive;
  res.population = population;
  res.freq = std::move(freq);
  auto [mean, var] = exact_moments(res.freq);
  res.mean = mean;
  res.variance = var;
  res.theory_mean = Rational(1);
  res.theory_var = m == 1 ? Rational(0) : theory_var_zn(n);
  return res;
}

/// Engine shared by the bivariate and multivariate pair censuses.
class PairCensus {
 public:
  PairCensus(Ring field, std::size_t nvars, std::uint32_t deg_f, std::uint32_t deg_g)
      : ring_(std::move(field)), shape_f_(make_shape(nvars, deg_f)), shape_g_(make_shape(nvars, deg_g)) {
    if (!ring_.is_field()) throw std::domain_error("pair census requires a field");
    if (nvars < 2) throw std::domain_error("pair census requires at least one non-main variable");
    const std::size_t r = nvars - 1;
    const std::uint64_t q = ring_.size();
    const std::uint64_t npoints = ipow(q, static_cast<unsigned>(r));
    if (npoints > (std::uint64_t{1} << 20U)) throw BudgetExceeded("too many evaluation points");
    std::vector<Elem> pt(r);
    for (std::uint64_t i = 0; i < npoints; ++i) {
      std::uint64_t v = i;
      for (std::size_t j = 0; j < r; ++j) {
        pt[j] = Elem{static_cast<std::uint32_t>(v % q)};
        v /= q;
      }
      points_.push_back(pt);
      wf_.push_back(slot_weights(ring_, *shape_f_, pt));
      wg_.push_back(slot_weights(ring_, *shape_g_, pt));
    }
    const u128 table = static_cast<u128>(ipow(q, deg_f)) * ipow(q, deg_g);
    memo_possible_ = table <= (u128{1} << 24U);
  }

  const Ring& ring() const { return ring_; }
  std::size_t outcomes() const { return points_.size(); }
  const std::vector<std::vector<Elem>>& points() const { return points_; }
  const std::shared_ptr<const Shape>& shape_f() const { return shape_f_; }
  const std::shared_ptr<const Shape>& shape_g() const { return shape_g_; }

  /// Points where the specializations share a factor, by fresh gcds.
  std::uint32_t unlucky_count_direct(const ShapedMultiPoly& f, const ShapedMultiPoly& g) const {
    std::uint32_t x = 0;
    for (const auto& pt : points_)
      if (uni_share_factor(ring_, multi_eval(ring_, f, pt), multi_eval(ring_, g, pt))) ++x;
    return x;
  }

  CensusResult run(const CensusConfig& cfg, const std::string& experiment) const {
    CensusResult res = cfg.mode == CensusMode::exhaustive ? exhaustive(cfg) : montecarlo(cfg);
    res.experiment = experiment;
    const std::uint64_t q = ring_.size();
    const std::size_t r = shape_f_->free_vars();
    res.parameters = {{"q", std::to_string(q)},
                      {"field", ring_.describe()},
                      {"nvars", std::to_string(shape_f_->nvars())},
                      {"deg_f", std::to_string(shape_f_->main_deg())},
                      {"deg_g", std::to_string(shape_g_->main_deg())}};
    const auto qr2 = static_cast<i128>(ipow(q, static_cast<unsigned>(r - 1)));
    res.theory_mean = Rational(qr2);
    res.theory_var = Rational(qr2) * (Rational(1) - Rational(1, static_cast<i128>(q)));
    try {
      res.binomial_ref = binomial_reference(outcomes(), q, res.population);
    } catch (const std::overflow_error&) {
      res.binomial_ref.reset();
    }
    if (r >= 2) {
      PointEstimate pe;
      pe.reference = Rational(1, static_cast<i128>(q));
      const double k = static_cast<double>(outcomes());
      if (res.mean) {
        pe.exact = *res.mean / Rational(static_cast<i128>(outcomes()));
        pe.estimate = pe.exact->to_double();
      } else {
        pe.estimate = res.mc->mean / k;
        pe.stderr_estimate = res.mc->stderr_mean / k;
      }
      res.per_point = pe;
    }
    return res;
  }

 private:
  // Index of the monic univariate specialization: sum c_i q^i over i < deg.
  void signature(const ShapedMultiPoly& f, const std::vector<SlotWeights>& w, std::uint32_t* out) const {
    const std::uint32_t d = f.main_deg();
    std::vector<Elem> c(d);
    for (std::size_t p = 0; p < points_.size(); ++p) {
      specialize_into(ring_, f, w[p], c);
      std::uint32_t h = 0;
      for (std::uint32_t i = d; i-- > 0;) h = h * ring_.size() + c[i].v;
      out[p] = h;
    }
  }

  static UniPoly monic_from_index(const Ring& r, std::uint32_t h, std::uint32_t deg) {
    std::vector<Elem> c(deg + 1);
    for (std::uint32_t i = 0; i < deg; ++i) {
      c[i] = Elem{h % r.size()};
      h /= r.size();
    }
    c[deg] = r.one();
    return UniPoly(std::move(c));
  }

  std::vector<std::uint8_t> coprimality_table() const {
    const std::uint32_t qf = static_cast<std::uint32_t>(ipow(ring_.size(), shape_f_->main_deg()));
    const std::uint32_t qg = static_cast<std::uint32_t>(ipow(ring_.size(), shape_g_->main_deg()));
    std::vector<std::uint8_t> t(static_cast<std::size_t>(qf) * qg);
    for (std::uint32_t a = 0; a < qf; ++a) {
      UniPoly fa = monic_from_index(ring_, a, shape_f_->main_deg());
      for (std::uint32_t b = 0; b < qg; ++b)
        t[static_cast<std::size_t>(a) * qg + b] =
            uni_share_factor(ring_, fa, monic_from_index(ring_, b, shape_g_->main_deg())) ? 1 : 0;
    }
    return t;
  }

  std::uint64_t gap_bound() const {
    // A nonzero R of total degree <= d in r variables vanishes on at most
    // d q^(r-1) points of F_q^r.
    const std::uint64_t d = std::uint64_t{shape_f_->main_deg()} * shape_g_->main_deg();
    return d * ipow(ring_.size(), static_cast<unsigned>(shape_f_->free_vars() - 1));
  }

  struct ExAcc {
    std::vector<std::uint64_t> freq;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> above;  // (f index, g index)
    std::uint64_t above_weight = 0;
  };

  CensusResult exhaustive(const CensusConfig& cfg) const {
    const std::uint64_t pf = shaped_population(ring_, *shape_f_);
    const std::uint64_t pg = shaped_population(ring_, *shape_g_);
    const bool sym = *shape_f_ == *shape_g_;
    const std::size_t k = outcomes();
    const u128 pairs = sym ? static_cast<u128>(pf) * (pf + 1) / 2 : static_cast<u128>(pf) * pg;
    detail::checked_budget(pairs * k, cfg.budget, "pair census");
    const u128 population = static_cast<u128>(pf) * pg;
    if (population > UINT64_MAX) throw BudgetExceeded("population exceeds 64 bits");

    const bool memo = cfg.memoize && memo_possible_;
    if (memo && static_cast<u128>(pf + pg) * k * 4 > (u128{1} << 30U))
      throw BudgetExceeded("signature tables exceed 1 GiB");
    std::vector<std::uint8_t> table;
    std::vector<std::uint32_t> sig_f, sig_g;
    std::uint32_t qg = 0;
    if (memo) {
      table = coprimality_table();
      qg = static_cast<std::uint32_t>(ipow(ring_.size(), shape_g_->main_deg()));
      sig_g.resize(pg * k);
      for (std::uint64_t j = 0; j < pg; ++j) signature(shaped_from_index(ring_, shape_g_, j), wg_, &sig_g[j * k]);
      if (!sym) {
        sig_f.resize(pf * k);
        for (std::uint64_t i = 0; i < pf; ++i) signature(shaped_from_index(ring_, shape_f_, i), wf_, &sig_f[i * k]);
      }
    }
    const std::vector<std::uint32_t>& sf_all = sym ? sig_g : sig_f;
    const std::uint64_t bound = gap_bound();
    const bool track_gap = cfg.verify_resultant_gap && bound < k;

    auto body = [&](ExAcc& acc, std::uint64_t, std::uint64_t begin, std::uint64_t end) {
      for (std::uint64_t i = begin; i < end; ++i) {
        const std::uint64_t j0 = sym ? i : 0;
        if (memo) {
          const std::uint32_t* sf = &sf_all[i * k];
          for (std::uint64_t j = j0; j < pg; ++j) {
            const std::uint32_t* sg = &sig_g[j * k];
            std::uint32_t x = 0;
            for (std::size_t p = 0; p < k; ++p) x += table[static_cast<std::size_t>(sf[p]) * qg + sg[p]];
            const std::uint64_t w = (sym && j != i) ? 2 : 1;
            acc.freq[x] += w;
            if (track_gap && x > bound) {
              acc.above.emplace_back(i, j);
              acc.above_weight += w;
            }
          }
        } else {
          const ShapedMultiPoly f = shaped_from_index(ring_, shape_f_, i);
          for (std::uint64_t j = j0; j < pg; ++j) {
            const std::uint32_t x = unlucky_count_direct(f, shaped_from_index(ring_, shape_g_, j));
            const std::uint64_t w = (sym && j != i) ? 2 : 1;
            acc.freq[x] += w;
            if (track_gap && x > bound) {
              acc.above.emplace_back(i, j);
              acc.above_weight += w;
            }
          }
        }
      }
    };

    ExAcc acc = parallel_chunks<ExAcc>(
        pf, 16, cfg.workers, [&] { return ExAcc{std::vector<std::uint64_t>(k + 1, 0), {}, 0}; }, body,
        [](ExAcc& into, const ExAcc& from) {
          detail::add_freq(into.freq, from.freq);
          into.above.insert(into.above.end(), from.above.begin(), from.above.end());
          into.above_weight += from.above_weight;
        });

    CensusResult res;
    res.mode = CensusMode::exhaustive;
    res.population = static_cast<std::uint64_t>(population);
    res.freq = std::move(acc.freq);
    auto [mean, var] = exact_moments(res.freq);
    res.mean = mean;
    res.variance = var;
    if (track_gap) {
      ResultantGap gap;
      gap.bound = bound;
      gap.weighted_pairs_above = acc.above_weight;
      gap.distinct_pairs_checked = acc.above.size();
      for (std::uint64_t x = bound + 1; x < k; ++x)
        if (res.freq[x] != 0) gap.gap_empty = false;
      gap.all_resultants_zero = verify_zero_resultants(acc.above, cfg.workers);
      res.gap = gap;
    }
    return res;
  }

  bool verify_zero_resultants(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs, unsigned workers) const {
    auto bad = parallel_chunks<std::uint64_t>(
        pairs.size(), 256, workers, [] { return std::uint64_t{0}; },
        [&](std::uint64_t& acc, std::uint64_t, std::uint64_t begin, std::uint64_t end) {
          for (std::uint64_t i = begin; i < end; ++i) {
            auto f = shaped_from_index(ring_, shape_f_, pairs[i].first);
            auto g = shaped_from_index(ring_, shape_g_, pairs[i].second);
            if (!resultant_poly(ring_, f, g).is_zero()) ++acc;
          }
        },
        [](std::uint64_t& into, std::uint64_t from) { into += from; });
    return bad == 0;
  }

  CensusResult montecarlo(const CensusConfig& cfg) const {
    if (cfg.samples < 2) throw std::domain_error("Monte Carlo census needs at least two samples");
    const std::size_t k = outcomes();
    const bool memo = cfg.memoize && memo_possible_;
    std::vector<std::uint8_t> table;
    std::uint32_t qg = 0;
    if (memo) {
      table = coprimality_table();
      qg = static_cast<std::uint32_t>(ipow(ring_.size(), shape_g_->main_deg()));
    }
    constexpr std::size_t batches = 50;
    const std::uint64_t n = cfg.samples;

    auto acc = parallel_chunks<detail::MomentAcc>(
        n, 1024, cfg.workers, [&] { return detail::MomentAcc(k + 1, batches); },
        [&](detail::MomentAcc& a, std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
          auto rng = detail::chunk_rng(cfg.seed, chunk);
          std::vector<std::uint32_t> sf(k), sg(k);
          for (std::uint64_t s = begin; s < end; ++s) {
            auto f = random_shaped(ring_, shape_f_, rng);
            auto g = random_shaped(ring_, shape_g_, rng);
            std::uint32_t x = 0;
            if (memo) {
              signature(f, wf_, sf.data());
              signature(g, wg_, sg.data());
              for (std::size_t p = 0; p < k; ++p) x += table[static_cast<std::size_t>(sf[p]) * qg + sg[p]];
            } else {
              x = unlucky_count_direct(f, g);
            }
            a.add(x, static_cast<std::size_t>(static_cast<u128>(s) * batches / n));
          }
        },
        [](detail::MomentAcc& into, const detail::MomentAcc& from) { into.merge(from); });

    CensusResult res;
    res.mode = CensusMode::montecarlo;
    res.population = n;
    res.samples = n;
    res.seed = cfg.seed;
    res.freq = acc.freq;
    res.mc = detail::mc_stats(acc);
    return res;
  }

  Ring ring_;
  std::shared_ptr<const Shape> shape_f_;
  std::shared_ptr<const Shape> shape_g_;
  std::vector<std::vector<Elem>> points_;
  std::vector<SlotWeights> wf_, wg_;
  bool memo_possible_ = false;
};

/// Bivariate pairs over F_q with total degrees n, m.
inline CensusResult fq_pair_census(std::uint64_t q, std::uint32_t n, std::uint32_t m, const CensusConfig& cfg = {}) {
  if (n < 1 || m < 1) throw std::domain_error("pair census requires positive degrees");
  return PairCensus(Ring::field(q), 2, n, m).run(cfg, "fq_pair");
}

/// Multivariate pairs over F_q in nvars variables (main variable included).
inline CensusResult mv_census(std::uint64_t q, std::size_t nvars, std::uint32_t l, std::uint32_t m,
                              const CensusConfig& cfg = {}) {
  if (nvars < 2) throw std::domain_error("mv census requires nvars >= 2");
  if (l < 1 || m < 1) throw std::domain_error("pair census requires positive degrees");
  return PairCensus(Ring::field(q), nvars, l, m).run(cfg, "mv");
}

}  // namespace rootcensus
