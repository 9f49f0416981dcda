// rootcensus: command-line front end for the census engines and validators.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rootcensus/io.hpp"
#include "rootcensus/rootcensus.hpp"

#ifndef ROOTCENSUS_VERSION
#define ROOTCENSUS_VERSION "0.0.0"
#endif

using namespace rootcensus;
using nlohmann::ordered_json;

namespace {

enum Exit : int {
  exit_ok = 0,
  exit_check_failed = 1,
  exit_usage = 2,
  exit_budget = 3,
  exit_domain = 4,
  exit_not_confirmed = 5,
  exit_io = 6,
  exit_internal = 70,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotConfirmed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Single-worker throughput used to estimate run time, in logical evaluations
// per second.  Deliberately on the slow side of measured rates.
constexpr double memo_rate = 1.0e8;
constexpr double direct_rate = 2.0e6;
constexpr double root_rate = 1.0e8;
constexpr double long_run_seconds = 60;

struct Common {
  std::string out;
  std::string format = "json";
  unsigned workers = default_workers();
  std::uint64_t budget = std::uint64_t{1} << 31U;
  bool confirm_long = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_long = true) {
  cmd->add_option("--out", c.out, "Output path prefix; writes <prefix>.json|.csv and <prefix>.manifest.json");
  cmd->add_option("--format", c.format, "Result format")->check(CLI::IsMember({"json", "csv", "both"}));
  cmd->add_option("--workers", c.workers, "Worker threads (default: $ROOTCENSUS_WORKERS or hardware)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget", c.budget, "Maximum logical evaluations per exhaustive run")->check(CLI::PositiveNumber);
  if (with_long) cmd->add_flag("--confirm-long", c.confirm_long, "Allow runs estimated to exceed 60 s");
}

void check_duration(double evals, double rate, const Common& c) {
  const double seconds = evals / rate / std::max(1U, c.workers);
  if (seconds > long_run_seconds && !c.confirm_long) {
    std::ostringstream msg;
    msg << "estimated run time " << std::fixed << std::setprecision(0) << seconds
        << " s exceeds 60 s; pass --confirm-long to run it";
    throw NotConfirmed(msg.str());
  }
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      auto v = std::stoull(text);
      return {v, v};
    }
    std::size_t used = 0;
    auto lo = std::stoull(text.substr(0, dots), &used);
    if (used != dots) throw UsageError("bad range");
    auto rest = text.substr(dots + 2);
    auto hi = std::stoull(rest, &used);
    if (used != rest.size()) throw UsageError("bad range");
    if (lo > hi) throw UsageError("empty range " + text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("bad range '" + text + "', expected a..b");
  }
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << body;
  if (!f) throw IoError("write to " + path + " failed");
}

struct Output {
  std::string subcommand;
  ordered_json parameters = ordered_json::object();
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
};

void write_manifest(const Common& c, const Output& o, double seconds, const std::vector<std::string>& argv) {
  if (c.out.empty()) return;
  ordered_json m;
  m["schema"] = "rootcensus.manifest/1";
  m["subcommand"] = o.subcommand;
  m["parameters"] = o.parameters;
  m["seed"] = o.seed ? ordered_json(std::to_string(*o.seed)) : ordered_json(nullptr);
  m["workers"] = o.workers;
  m["version"] = ROOTCENSUS_VERSION;
  m["duration_seconds"] = seconds;
  m["argv"] = argv;
  write_file(c.out + ".manifest.json", m.dump(2) + "\n");
}

void write_census(const Common& c, const CensusResult& r, const std::string& suffix) {
  if (c.out.empty()) return;
  const std::string base = c.out + suffix;
  if (c.format == "json" || c.format == "both") write_file(base + ".json", census_json(r).dump(2) + "\n");
  if (c.format == "csv" || c.format == "both") write_file(base + ".csv", census_csv(r));
}

void write_json(const Common& c, const ordered_json& j) {
  if (c.out.empty()) return;
  if (c.format == "csv") throw UsageError("this subcommand only writes JSON");
  write_file(c.out + ".json", j.dump(2) + "\n");
}

std::string fraction(const Rational& r) { return to_string(r.num()) + "/" + to_string(r.den()); }

std::string param(const CensusResult& r, const std::string& key) {
  for (const auto& [k, v] : r.parameters)
    if (k == key) return v;
  return "";
}

void print_pair_summary(const CensusResult& r) {
  std::cout << r.experiment << " over " << param(r, "field") << ", nvars " << param(r, "nvars") << ", deg f "
            << param(r, "deg_f") << ", deg g " << param(r, "deg_g") << ", " << to_string(r.mode) << "\n";
  std::cout << "population " << r.population << "\n";
  std::cout << std::setw(4) << "k" << std::setw(16) << "F_k" << std::setw(24) << "B_k" << "\n";
  for (std::size_t k = 0; k < r.freq.size(); ++k) {
    std::cout << std::setw(4) << k << std::setw(16) << r.freq[k];
    if (r.binomial_ref) std::cout << std::setw(24) << (*r.binomial_ref)[k].str();
    std::cout << "\n";
  }
  if (r.mode == CensusMode::exhaustive) {
    std::cout << "mean " << r.mean->str() << " (theory " << r.theory_mean.str() << ")  variance " << r.variance->str()
              << " (theory " << r.theory_var.str() << ")\n";
  } else {
    std::cout << std::setprecision(6) << "mean " << r.mc->mean << " +/- " << r.mc->stderr_mean << " (theory "
              << r.theory_mean.str() << ")  variance " << r.mc->variance << " +/- " << r.mc->stderr_variance
              << " (theory " << r.theory_var.str() << ")  samples " << r.samples << " seed " << r.seed << "\n";
  }
  if (r.per_point) {
    std::cout << "per-point unlucky frequency " << std::setprecision(6) << r.per_point->estimate;
    if (!r.per_point->exact) std::cout << " +/- " << r.per_point->stderr_estimate;
    std::cout << " (reference " << r.per_point->reference.str() << ")\n";
  }
  if (r.gap) {
    std::cout << "resultant gap: bound " << r.gap->bound << ", weighted pairs above " << r.gap->weighted_pairs_above
              << ", distinct pairs checked " << r.gap->distinct_pairs_checked << ", gap "
              << (r.gap->gap_empty ? "empty" : "NOT EMPTY") << ", resultants "
              << (r.gap->all_resultants_zero ? "all zero" : "NOT ALL ZERO") << "\n";
  }
  std::cout << "theory " << (r.checks_pass() ? "ok" : "FAILED") << "\n";
}

// ---------------------------------------------------------------- zn-roots

struct ZnArgs {
  Common c;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> m;
  std::string n_range, m_range;
};

int run_zn(ZnArgs& a, Output& o) {
  if (a.n && !a.n_range.empty()) throw UsageError("give --n or --n-range, not both");
  if (a.m && !a.m_range.empty()) throw UsageError("give --m or --m-range, not both");
  if (!a.n && a.n_range.empty()) throw UsageError("--n or --n-range is required");
  if (!a.m && a.m_range.empty()) throw UsageError("--m or --m-range is required");
  auto [n_lo, n_hi] = a.n ? std::pair{*a.n, *a.n} : parse_range(a.n_range);
  auto [m_lo, m_hi] = a.m ? std::pair{*a.m, *a.m} : parse_range(a.m_range);
  if (n_lo < 2) throw UsageError("n must be at least 2");
  if (m_lo < 1) throw UsageError("m must be at least 1");
  if (m_hi > 64) throw UsageError("m must be at most 64");

  o.parameters = {{"n_min", n_lo}, {"n_max", n_hi}, {"m_min", m_lo}, {"m_max", m_hi}, {"budget", a.c.budget}};
  double evals = 0;
  for (auto n = n_lo; n <= n_hi; ++n)
    for (auto m = m_lo; m <= m_hi; ++m) evals += std::pow(static_cast<double>(n), static_cast<double>(m) + 1);
  check_duration(evals, root_rate, a.c);

  CensusConfig cfg;
  cfg.workers = a.c.workers;
  cfg.budget = a.c.budget;
  const bool single = n_lo == n_hi && m_lo == m_hi;
  bool all_ok = true;
  std::cout << std::setw(6) << "n" << std::setw(4) << "m" << std::setw(8) << "E[X]" << std::setw(10) << "Var[X]"
            << std::setw(10) << "a(n)" << "  theory\n";
  for (auto n = n_lo; n <= n_hi; ++n) {
    for (auto m = m_lo; m <= m_hi; ++m) {
      auto r = zn_root_census(n, static_cast<std::uint32_t>(m), cfg);
      const bool ok = r.checks_pass();
      all_ok = all_ok && ok;
      std::cout << std::setw(6) << n << std::setw(4) << m << std::setw(8) << fraction(*r.mean) << std::setw(10)
                << fraction(*r.variance) << std::setw(10) << (m >= 2 ? std::to_string(a006579(n)) : "-") << "  "
                << (ok ? "ok" : "FAILED") << "\n";
      write_census(a.c, r, single ? "" : "_n" + std::to_string(n) + "_m" + std::to_string(m));
    }
  }
  return all_ok ? exit_ok : exit_check_failed;
}

// ------------------------------------------------------ pair-census / mv-census

struct PairArgs {
  Common c;
  std::uint64_t q = 0;
  std::size_t nvars = 2;
  std::uint32_t deg_f = 0, deg_g = 0;
  std::string mode = "exhaustive";
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  bool direct = false;
};

int run_pair(PairArgs& a, Output& o, bool multivariate) {
  if (!is_prime_power(a.q)) throw std::domain_error(std::to_string(a.q) + " is not a prime power");
  if (a.deg_f < 1 || a.deg_g < 1) throw UsageError("degrees must be positive");
  if (a.nvars < 2) throw UsageError("nvars must be at least 2");
  const bool exhaustive = a.mode == "exhaustive";
  o.parameters = {{"q", a.q},           {"nvars", a.nvars},     {"deg_f", a.deg_f}, {"deg_g", a.deg_g},
                  {"mode", a.mode},     {"budget", a.c.budget}, {"direct", a.direct}};
  if (!exhaustive) {
    o.parameters["samples"] = a.samples;
    o.seed = a.seed;
  }

  PairCensus engine(Ring::field(a.q), a.nvars, a.deg_f, a.deg_g);
  const double k = static_cast<double>(engine.outcomes());
  const double rate = a.direct ? direct_rate : memo_rate;
  if (exhaustive) {
    const double pf = std::pow(static_cast<double>(a.q), static_cast<double>(engine.shape_f()->slot_count()));
    const double pg = std::pow(static_cast<double>(a.q), static_cast<double>(engine.shape_g()->slot_count()));
    const double pairs = a.deg_f == a.deg_g ? pf * (pf + 1) / 2 : pf * pg;
    if (pairs * k <= static_cast<double>(a.c.budget)) check_duration(pairs * k, rate, a.c);
  } else {
    // Sampling and specialization dominate Monte Carlo cost.
    check_duration(static_cast<double>(a.samples) * k * 50, rate, a.c);
  }

  CensusConfig cfg;
  cfg.mode = exhaustive ? CensusMode::exhaustive : CensusMode::montecarlo;
  cfg.samples = a.samples;
  cfg.seed = a.seed;
  cfg.workers = a.c.workers;
  cfg.budget = a.c.budget;
  cfg.memoize = !a.direct;
  auto r = engine.run(cfg, multivariate ? "mv" : "fq_pair");
  print_pair_summary(r);
  write_census(a.c, r, "");
  return r.checks_pass() ? exit_ok : exit_check_failed;
}

// ---------------------------------------------------------------- unlucky

struct UnluckyArgs {
  Common c;
  std::uint64_t p = 101;
  std::size_t nvars = 3;
  std::string ahat, bhat;
  std::uint32_t deg_g = 1, deg_ahat = 2, deg_bhat = 2;
  std::uint64_t draws = 1000, points = 100, seed = 1;
  std::optional<std::size_t> slice_var;
  std::optional<std::uint64_t> slice_value;
};

int run_unlucky(UnluckyArgs& a, Output& o) {
  if (!is_prime(a.p)) throw std::domain_error(std::to_string(a.p) + " is not prime");
  if (a.ahat.empty() != a.bhat.empty()) throw UsageError("give both --ahat and --bhat or neither");
  if (a.slice_var.has_value() != a.slice_value.has_value())
    throw UsageError("give both --slice-var and --slice-value or neither");
  Ring ring = Ring::prime_field(a.p);
  UnluckyConfig cfg;
  cfg.p = a.p;
  cfg.nvars = a.nvars;
  cfg.deg_g = a.deg_g;
  cfg.deg_ahat = a.deg_ahat;
  cfg.deg_bhat = a.deg_bhat;
  cfg.draws = a.draws;
  cfg.points_per_draw = a.points;
  cfg.seed = a.seed;
  cfg.workers = a.c.workers;
  if (!a.ahat.empty()) {
    cfg.ahat = shaped_from_mpoly(ring, parse_poly(ring, a.ahat, a.nvars));
    cfg.bhat = shaped_from_mpoly(ring, parse_poly(ring, a.bhat, a.nvars));
    if (cfg.ahat->nvars() != a.nvars || cfg.bhat->nvars() != a.nvars)
      throw UsageError("cofactors mention variables beyond --nvars");
  }
  if (a.slice_var) cfg.slice = {{*a.slice_var, *a.slice_value}};
  o.parameters = {{"p", a.p},         {"nvars", a.nvars},   {"deg_g", a.deg_g},
                  {"deg_ahat", a.deg_ahat}, {"deg_bhat", a.deg_bhat}, {"draws", a.draws},
                  {"points", a.points}};
  if (!a.ahat.empty()) {
    o.parameters["ahat"] = a.ahat;
    o.parameters["bhat"] = a.bhat;
  }
  if (a.slice_var) {
    o.parameters["slice_var"] = *a.slice_var;
    o.parameters["slice_value"] = *a.slice_value;
  }
  o.seed = a.seed;
  check_duration(static_cast<double>(a.draws) * static_cast<double>(a.points) * 200, direct_rate, a.c);

  auto rep = unlucky_sim(cfg);
  bool ok = rep.image_mismatches == 0;
  std::cout << std::fixed << std::setprecision(6);
  std::cout << "unlucky points over F_" << a.p << ", nvars " << a.nvars << ", " << rep.draws << " draws x " << a.points
            << " points\n";
  std::cout << "trials " << rep.trials << " unlucky " << rep.unlucky << " frequency " << rep.frequency << " +/- "
            << rep.stderr_frequency << " (reference " << rep.reference.str() << " = "
            << rep.reference.to_double() << ")\n";
  std::cout << "coprime draws " << rep.coprime_draws << " trials " << rep.coprime_trials << " unlucky "
            << rep.coprime_unlucky << " frequency " << rep.coprime_frequency << " +/- " << rep.coprime_stderr << "\n";
  if (rep.resultant_degree) {
    std::cout << "cofactor resultant degree " << *rep.resultant_degree;
    if (rep.resultant_bound) {
      std::cout << ", Schwartz-Zippel bound " << rep.resultant_bound->str();
      ok = ok && rep.frequency <= rep.resultant_bound->to_double() + 3 * rep.stderr_frequency;
    } else {
      std::cout << " (cofactors share a factor)";
      ok = ok && rep.unlucky == rep.trials;
    }
    std::cout << "\n";
  } else {
    ok = ok && std::abs(rep.frequency - rep.reference.to_double()) <= 3 * rep.stderr_frequency;
  }
  if (rep.slice_trials) {
    const double sf =
        *rep.slice_trials ? static_cast<double>(*rep.slice_unlucky) / static_cast<double>(*rep.slice_trials) : 0.0;
    std::cout << "slice x" << *a.slice_var << "=" << *a.slice_value << ": trials " << *rep.slice_trials << " unlucky "
              << *rep.slice_unlucky << " slice frequency " << sf << " \n";
  }
  std::cout << "image mismatches " << rep.image_mismatches << "\n";
  std::cout << "theory " << (ok ? "ok" : "FAILED") << "\n";
  write_json(a.c, unlucky_json(rep));
  return ok ? exit_ok : exit_check_failed;
}

// ------------------------------------------------------------ incexc-check

struct IncExcArgs {
  Common c;
  std::string file;
  bool random = false;
  std::uint64_t trials = 1000, seed = 1;
  std::size_t max_sets = 6;
  std::uint64_t max_universe = 50;
};

std::string tuple_str(const std::vector<std::uint64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

bool check_system(const SetSystem& sys, ordered_json* record) {
  auto t = t_vector(sys);
  auto direct = b_direct(sys);
  auto rec = b_from_t_recursive(t, sys.universe_size);
  auto closed = b_from_t_closed(t, sys.universe_size);
  auto mom = moment_check(direct, t);
  const bool ok = rec == direct && closed == direct && mom.pass();
  if (record) {
    std::vector<std::string> ts, bs;
    for (auto x : t) ts.push_back(std::to_string(x));
    for (auto x : direct) bs.push_back(std::to_string(x));
    *record = {{"universe_size", std::to_string(sys.universe_size)},
               {"sets", sys.count()},
               {"t", ts},
               {"b", bs},
               {"recursive_matches", rec == direct},
               {"closed_matches", closed == direct},
               {"first_moment", mom.first_ok()},
               {"second_moment", mom.second_ok()}};
  }
  return ok;
}

int run_incexc(IncExcArgs& a, Output& o) {
  if (a.file.empty() == !a.random) throw UsageError("give exactly one of --file or --random");
  ordered_json result;
  result["schema"] = "rootcensus.incexc/1";
  bool ok = true;
  if (!a.file.empty()) {
    o.parameters = {{"file", a.file}};
    std::ifstream in(a.file);
    if (!in) throw IoError("cannot open " + a.file);
    SetSystem sys = read_set_system(in);
    ordered_json rec;
    ok = check_system(sys, &rec);
    result["system"] = rec;
    std::cout << "universe " << sys.universe_size << ", " << sys.count() << " sets\n";
    std::cout << "t = " << tuple_str(t_vector(sys)) << "\n";
    std::cout << "b = " << tuple_str(b_direct(sys)) << "\n";
  } else {
    o.parameters = {{"trials", a.trials}, {"max_sets", a.max_sets}, {"max_universe", a.max_universe}};
    o.seed = a.seed;
    if (a.max_sets > 24) throw UsageError("--max-sets is at most 24");
    std::mt19937_64 rng(a.seed);
    std::uint64_t failures = 0;
    for (std::uint64_t i = 0; i < a.trials; ++i)
      if (!check_system(random_set_system(rng, a.max_sets, a.max_universe), nullptr)) ++failures;
    ok = failures == 0;
    result["trials"] = std::to_string(a.trials);
    result["failures"] = std::to_string(failures);
    std::cout << a.trials << " random set systems, " << failures << " failures\n";
  }
  result["all_pass"] = ok;
  std::cout << "identities " << (ok ? "ok" : "FAILED") << "\n";
  write_json(a.c, result);
  return ok ? exit_ok : exit_check_failed;
}

// --------------------------------------------------------- resultant-check

struct ResultantArgs {
  Common c;
  std::uint64_t q = 7;
  std::size_t nvars = 2;
  std::uint32_t max_deg = 3;
  std::uint64_t pairs = 100, seed = 1;
};

int run_resultant(ResultantArgs& a, Output& o) {
  if (a.nvars < 2) throw UsageError("nvars must be at least 2");
  if (a.max_deg < 1) throw UsageError("max-deg must be positive");
  Ring ring = Ring::field(a.q);
  const std::size_t r = a.nvars - 1;
  const double npts = std::pow(static_cast<double>(a.q), static_cast<double>(r));
  if (npts > (1U << 20U)) throw std::domain_error("too many evaluation points for an exhaustive check");
  o.parameters = {{"q", a.q}, {"nvars", a.nvars}, {"max_deg", a.max_deg}, {"pairs", a.pairs}};
  o.seed = a.seed;
  check_duration(static_cast<double>(a.pairs) * npts * 100, direct_rate, a.c);

  std::mt19937_64 rng(a.seed);
  std::uniform_int_distribution<std::uint32_t> deg(1, a.max_deg);
  MPolyRing cr(ring, r);
  std::uint64_t degree_fail = 0, identity_fail = 0, gcd_fail = 0, points = 0;
  std::vector<Elem> pt(r);
  for (std::uint64_t i = 0; i < a.pairs; ++i) {
    auto f = random_shaped(ring, make_shape(a.nvars, deg(rng)), rng);
    auto g = random_shaped(ring, make_shape(a.nvars, deg(rng)), rng);
    MPoly res;
    try {
      res = resultant_poly(ring, f, g);
    } catch (const std::logic_error&) {
      ++degree_fail;
      continue;
    }
    if (cr.total_degree(res) > static_cast<int>(f.main_deg() * g.main_deg())) ++degree_fail;
    const auto total = static_cast<std::uint64_t>(npts);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t v = idx;
      for (auto& c : pt) {
        c = Elem{static_cast<std::uint32_t>(v % a.q)};
        v /= a.q;
      }
      UniPoly uf = multi_eval(ring, f, pt), ug = multi_eval(ring, g, pt);
      const Elem lhs = cr.eval(res, pt);
      const Elem rhs = resultant_uni(ring, uf, ug);
      if (lhs != rhs) ++identity_fail;
      if ((rhs.v == 0) != uni_share_factor(ring, uf, ug)) ++gcd_fail;
      ++points;
    }
  }
  const bool ok = degree_fail == 0 && identity_fail == 0 && gcd_fail == 0;
  std::cout << a.pairs << " random pairs over " << ring.describe() << ", nvars " << a.nvars << ", degrees 1.."
            << a.max_deg << ", " << points << " points\n";
  std::cout << "degree bound failures " << degree_fail << "\n";
  std::cout << "specialization identity failures " << identity_fail << "\n";
  std::cout << "gcd/resultant equivalence failures " << gcd_fail << "\n";
  std::cout << "properties " << (ok ? "ok" : "FAILED") << "\n";
  ordered_json j = {{"schema", "rootcensus.resultant_check/1"},
                    {"pairs", std::to_string(a.pairs)},
                    {"points", std::to_string(points)},
                    {"degree_bound_failures", std::to_string(degree_fail)},
                    {"specialization_failures", std::to_string(identity_fail)},
                    {"gcd_equivalence_failures", std::to_string(gcd_fail)},
                    {"all_pass", ok}};
  write_json(a.c, j);
  return ok ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and Monte Carlo censuses of polynomial roots and unlucky evaluation points"};
  app.set_version_flag("--version", ROOTCENSUS_VERSION);
  app.require_subcommand(1);

  ZnArgs zn;
  auto* zn_cmd = app.add_subcommand("zn-roots", "Distinct-root census of monic polynomials over Z_n");
  zn_cmd->add_option("--n", zn.n, "Modulus");
  zn_cmd->add_option("--m", zn.m, "Degree");
  zn_cmd->add_option("--n-range", zn.n_range, "Modulus range a..b");
  zn_cmd->add_option("--m-range", zn.m_range, "Degree range a..b");
  add_common(zn_cmd, zn.c);

  PairArgs pair;
  auto* pair_cmd = app.add_subcommand("pair-census", "Unlucky-point census of bivariate pairs over F_q");
  PairArgs mv;
  auto* mv_cmd = app.add_subcommand("mv-census", "Unlucky-point census of multivariate pairs over F_q");
  for (auto [cmd, args] : {std::pair{pair_cmd, &pair}, std::pair{mv_cmd, &mv}}) {
    cmd->add_option("--q", args->q, "Field order (prime power)")->required();
    cmd->add_option("--deg-f", args->deg_f, "Total degree of f")->required();
    cmd->add_option("--deg-g", args->deg_g, "Total degree of g")->required();
    cmd->add_option("--mode", args->mode, "Census mode")->check(CLI::IsMember({"exhaustive", "montecarlo"}));
    cmd->add_option("--samples", args->samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", args->seed, "Monte Carlo master seed");
    cmd->add_flag("--direct", args->direct, "Recompute every gcd instead of using the coprimality table");
    add_common(cmd, args->c);
  }
  mv_cmd->add_option("--nvars", mv.nvars, "Variable count including x0")->required();

  UnluckyArgs un;
  auto* un_cmd = app.add_subcommand("unlucky", "Simulate unlucky evaluation points for sparse-interpolation gcds");
  un_cmd->add_option("--p", un.p, "Prime field order");
  un_cmd->add_option("--nvars", un.nvars, "Variable count including x0");
  un_cmd->add_option("--ahat", un.ahat, "Fixed cofactor A-hat, e.g. \"x0^2 + x2\"");
  un_cmd->add_option("--bhat", un.bhat, "Fixed cofactor B-hat");
  un_cmd->add_option("--deg-g", un.deg_g, "Total degree of the random common factor G (0 for none)");
  un_cmd->add_option("--deg-ahat", un.deg_ahat, "Degree of random A-hat");
  un_cmd->add_option("--deg-bhat", un.deg_bhat, "Degree of random B-hat");
  un_cmd->add_option("--draws", un.draws, "Polynomial draws")->check(CLI::PositiveNumber);
  un_cmd->add_option("--points", un.points, "Evaluation points per draw")->check(CLI::PositiveNumber);
  un_cmd->add_option("--seed", un.seed, "Master seed");
  un_cmd->add_option("--slice-var", un.slice_var, "Report the slice x_var = value (var >= 1)");
  un_cmd->add_option("--slice-value", un.slice_value, "Slice value");
  add_common(un_cmd, un.c);

  IncExcArgs ie;
  auto* ie_cmd = app.add_subcommand("incexc-check", "Check inclusion-exclusion identities on set systems");
  ie_cmd->add_option("--file", ie.file, "Set-system file: '<universe> <n>' then n lines of members");
  ie_cmd->add_flag("--random", ie.random, "Check random set systems");
  ie_cmd->add_option("--trials", ie.trials, "Random systems to check");
  ie_cmd->add_option("--seed", ie.seed, "Seed for random systems");
  ie_cmd->add_option("--max-sets", ie.max_sets, "Largest random set count")->check(CLI::PositiveNumber);
  ie_cmd->add_option("--max-universe", ie.max_universe, "Largest random universe");
  add_common(ie_cmd, ie.c, false);

  ResultantArgs rc;
  auto* rc_cmd = app.add_subcommand("resultant-check", "Check resultant properties on random shaped pairs");
  rc_cmd->add_option("--q", rc.q, "Field order (prime power)");
  rc_cmd->add_option("--nvars", rc.nvars, "Variable count including x0");
  rc_cmd->add_option("--max-deg", rc.max_deg, "Largest total degree");
  rc_cmd->add_option("--pairs", rc.pairs, "Random pairs");
  rc_cmd->add_option("--seed", rc.seed, "Seed");
  add_common(rc_cmd, rc.c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc_parse = app.exit(e);
    return rc_parse == 0 ? exit_ok : exit_usage;
  }

  std::vector<std::string> args(argv, argv + argc);
  Output out;
  Common* common = nullptr;
  const auto start = std::chrono::steady_clock::now();
  try {
    int code = exit_internal;
    if (zn_cmd->parsed()) {
      out.subcommand = "zn-roots";
      common = &zn.c;
      code = run_zn(zn, out);
    } else if (pair_cmd->parsed()) {
      out.subcommand = "pair-census";
      common = &pair.c;
      code = run_pair(pair, out, false);
    } else if (mv_cmd->parsed()) {
      out.subcommand = "mv-census";
      common = &mv.c;
      code = run_pair(mv, out, true);
    } else if (un_cmd->parsed()) {
      out.subcommand = "unlucky";
      common = &un.c;
      code = run_unlucky(un, out);
    } else if (ie_cmd->parsed()) {
      out.subcommand = "incexc-check";
      common = &ie.c;
      code = run_incexc(ie, out);
    } else if (rc_cmd->parsed()) {
      out.subcommand = "resultant-check";
      common = &rc.c;
      code = run_resultant(rc, out);
    }
    out.workers = common->workers;
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_manifest(*common, out, seconds, args);
    return code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const PolyParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const NotConfirmed& e) {
    std::cerr << e.what() << "\n";
    return exit_not_confirmed;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return exit_budget;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return exit_io;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return exit_domain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}
