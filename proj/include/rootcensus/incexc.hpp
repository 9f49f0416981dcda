#pragma once

/// \file incexc.hpp
/// Generalized inclusion-exclusion on explicit finite set systems.
///
/// For sets A_0..A_{n-1} of a universe U:
///   t_k = sum over k-subsets {i_1 < ... < i_k} of |A_{i_1} ∩ ... ∩ A_{i_k}|,
///   b_k = number of elements of U lying in exactly k of the sets.
/// b can be recovered from t (with t_0 = |U|) either recursively,
///   b_{n-k} = t_{n-k} - sum_{i=1..k} C(n-k+i, i) b_{n-k+i},
/// or in closed form,
///   b_{n-k} = sum_{i=0..k} (-1)^i C(n-k+i, i) t_{n-k+i}.
/// The first two moments of b are t_1 and t_1 + 2 t_2.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rootcensus/numtheory.hpp"
#include "rootcensus/rational.hpp"

namespace rootcensus {

struct SetSystem {
  std::uint64_t universe_size = 0;
  std::vector<std::vector<std::uint64_t>> sets;  // each sorted, duplicate-free

  std::size_t count() const { return sets.size(); }

  void validate() const {
    for (const auto& s : sets) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= universe_size) throw std::invalid_argument("set element outside the universe");
        if (i > 0 && s[i] <= s[i - 1]) throw std::invalid_argument("set indices must be sorted and distinct");
      }
    }
  }
};

struct BTVectors {
  std::size_t n = 0;
  std::vector<std::uint64_t> t;  // t[0] = t_1 ... t[n-1] = t_n
  std::vector<std::uint64_t> b;  // b[0] = b_0 ... b[n] = b_n
};

class InconsistentCounts : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// t_1..t_n by direct enumeration of k-subsets of the sets.
inline std::vector<std::uint64_t> t_vector(const SetSystem& sys) {
  sys.validate();
  const std::size_t n = sys.count();
  if (n > 24) throw std::invalid_argument("t_vector enumerates subsets; at most 24 sets supported");
  std::vector<std::uint64_t> t(n, 0);
  // Intersection for each nonempty subset, built from the subset without its
  // highest member.
  std::vector<std::vector<std::uint64_t>> inter(std::size_t{1} << n);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const int top = 31 - __builtin_clz(mask);
    const std::uint32_t rest = mask & ~(std::uint32_t{1} << top);
    const auto& s = sys.sets[static_cast<std::size_t>(top)];
    if (rest == 0) {
      inter[mask] = s;
    } else {
      const auto& r = inter[rest];
      std::set_intersection(r.begin(), r.end(), s.begin(), s.end(), std::back_inserter(inter[mask]));
    }
    t[static_cast<std::size_t>(__builtin_popcount(mask) - 1)] += inter[mask].size();
  }
  return t;
}

/// b_0..b_n by counting memberships of every universe element.
inline std::vector<std::uint64_t> b_direct(const SetSystem& sys) {
  sys.validate();
  std::vector<std::uint32_t> hits(sys.universe_size, 0);
  for (const auto& s : sys.sets)
    for (auto e : s) ++hits[e];
  std::vector<std::uint64_t> b(sys.count() + 1, 0);
  for (auto h : hits) ++b[h];
  return b;
}

namespace detail {

inline i128 binom_i(std::uint64_t n, std::uint64_t k) { return static_cast<i128>(binomial(n, k)); }

inline std::vector<std::uint64_t> to_counts(const std::vector<i128>& b) {
  std::vector<std::uint64_t> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 0) throw InconsistentCounts("t vector is inconsistent: b_" + std::to_string(i) + " would be negative");
    out[i] = static_cast<std::uint64_t>(b[i]);
  }
  return out;
}

}  // namespace detail

/// Recursive form; t holds t_1..t_n.
inline std::vector<std::uint64_t> b_from_t_recursive(const std::vector<std::uint64_t>& t, std::uint64_t universe_size) {
  const std::size_t n = t.size();
  auto tk = [&](std::size_t k) -> i128 { return static_cast<i128>(k == 0 ? universe_size : t[k - 1]); };
  std::vector<i128> b(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t idx = n - k;
    i128 v = tk(idx);
    for (std::size_t i = 1; i <= k; ++i) v -= detail::binom_i(idx + i, i) * b[idx + i];
    if (v < 0) throw InconsistentCounts("t vector is inconsistent: b_" + std::to_string(idx) + " would be negative");
    b[idx] = v;
  }
  return detail::to_counts(b);
}

/// Closed alternating-sum form; t holds t_1..t_n.
inline std::vector<std::uint64_t> b_from_t_closed(const std::vector<std::uint64_t>& t, std::uint64_t universe_size) {
  const std::size_t n = t.size();
  auto tk = [&](std::size_t k) -> i128 { return static_cast<i128>(k == 0 ? universe_size : t[k - 1]); };
  std::vector<i128> b(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t idx = n - k;
    i128 v = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      i128 term = detail::binom_i(idx + i, i) * tk(idx + i);
      v += (i % 2 == 0) ? term : -term;
    }
    b[idx] = v;
  }
  return detail::to_counts(b);
}

/// b_0..b_n from t_1..t_n; both forms are evaluated and must agree.
inline BTVectors b_from_t(const std::vector<std::uint64_t>& t, std::size_t n, std::uint64_t universe_size) {
  if (t.size() != n) throw std::invalid_argument("t vector length must equal the number of sets");
  auto rec = b_from_t_recursive(t, universe_size);
  auto closed = b_from_t_closed(t, universe_size);
  if (rec != closed) throw std::logic_error("recursive and closed inclusion-exclusion forms disagree");
  return {n, t, std::move(closed)};
}

struct MomentReport {
  i128 first_lhs = 0;   // sum i b_i
  i128 first_rhs = 0;   // t_1
  i128 second_lhs = 0;  // sum i^2 b_i
  i128 second_rhs = 0;  // t_1 + 2 t_2
  bool first_ok() const { return first_lhs == first_rhs; }
  bool second_ok() const { return second_lhs == second_rhs; }
  bool pass() const { return first_ok() && second_ok(); }
};

inline MomentReport moment_check(const std::vector<std::uint64_t>& b, const std::vector<std::uint64_t>& t) {
  if (b.size() != t.size() + 1) throw std::invalid_argument("b must have one more entry than t");
  MomentReport r;
  for (std::size_t i = 0; i < b.size(); ++i) {
    r.first_lhs += static_cast<i128>(i) * b[i];
    r.second_lhs += static_cast<i128>(i * i) * b[i];
  }
  i128 t1 = t.empty() ? 0 : t[0];
  i128 t2 = t.size() < 2 ? 0 : t[1];
  r.first_rhs = t1;
  r.second_rhs = t1 + 2 * t2;
  return r;
}

/// Reads "<universe_size> <n>" followed by n lines of set indices.
inline SetSystem read_set_system(std::istream& in) {
  SetSystem sys;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream hdr(line);
    if (!(hdr >> sys.universe_size >> n)) throw std::invalid_argument("set system header must be '<universe_size> <n>'");
    break;
  }
  sys.sets.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) throw std::invalid_argument("set system file has fewer set lines than declared");
    std::istringstream row(line);
    std::uint64_t v;
    while (row >> v) sys.sets[i].push_back(v);
    if (!row.eof()) throw std::invalid_argument("bad token in set line " + std::to_string(i + 1));
  }
  sys.validate();
  return sys;
}

template <class Rng>
SetSystem random_set_system(Rng& rng, std::size_t max_sets, std::uint64_t max_universe) {
  SetSystem sys;
  sys.universe_size = std::uniform_int_distribution<std::uint64_t>(0, max_universe)(rng);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_sets)(rng);
  sys.sets.resize(n);
  for (auto& s : sys.sets) {
    const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    std::bernoulli_distribution member(density);
    for (std::uint64_t e = 0; e < sys.universe_size; ++e)
      if (member(rng)) s.push_back(e);
  }
  return sys;
}

}  // namespace rootcensus
