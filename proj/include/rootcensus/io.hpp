#pragma once

/// \file io.hpp
/// JSON and CSV encodings of census results.  See docs/census_result.md for
/// the schema.  Counts are decimal strings and rationals are
/// {"num": "...", "den": "..."} so that no consumer has to round-trip them
/// through a 64-bit float.

#include <cstdint>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rootcensus/census.hpp"
#include "rootcensus/rational.hpp"
#include "rootcensus/unlucky.hpp"

namespace rootcensus {

inline constexpr const char* census_schema_id = "rootcensus.census/1";

inline nlohmann::ordered_json rational_json(const Rational& r) {
  return {{"num", to_string(r.num())}, {"den", to_string(r.den())}};
}

inline Rational rational_from_json(const nlohmann::ordered_json& j) {
  return {parse_i128(j.at("num").get<std::string>()), parse_i128(j.at("den").get<std::string>())};
}

inline nlohmann::ordered_json census_json(const CensusResult& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = census_schema_id;
  j["experiment"] = r.experiment;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  j["mode"] = to_string(r.mode);
  j["population"] = std::to_string(r.population);
  ordered_json freq = ordered_json::array();
  for (auto f : r.freq) freq.push_back(std::to_string(f));
  j["freq"] = freq;
  if (r.binomial_ref) {
    ordered_json b = ordered_json::array();
    for (const auto& x : *r.binomial_ref) b.push_back(rational_json(x));
    j["binomial_ref"] = b;
  }
  if (r.mean) j["mean"] = rational_json(*r.mean);
  if (r.variance) j["variance"] = rational_json(*r.variance);
  if (r.mc) {
    j["montecarlo"] = {{"samples", std::to_string(r.samples)},
                       {"seed", std::to_string(r.seed)},
                       {"mean", r.mc->mean},
                       {"variance", r.mc->variance},
                       {"stderr_mean", r.mc->stderr_mean},
                       {"stderr_variance", r.mc->stderr_variance},
                       {"batches", r.mc->batches}};
  }
  j["theory"] = {{"mean", rational_json(r.theory_mean)}, {"variance", rational_json(r.theory_var)}};
  if (r.gap) {
    j["resultant_gap"] = {{"bound", std::to_string(r.gap->bound)},
                          {"weighted_pairs_above", std::to_string(r.gap->weighted_pairs_above)},
                          {"distinct_pairs_checked", std::to_string(r.gap->distinct_pairs_checked)},
                          {"gap_empty", r.gap->gap_empty},
                          {"all_resultants_zero", r.gap->all_resultants_zero}};
  }
  if (r.per_point) {
    ordered_json pp = {{"estimate", r.per_point->estimate},
                       {"stderr", r.per_point->stderr_estimate},
                       {"reference", rational_json(r.per_point->reference)}};
    if (r.per_point->exact) pp["exact"] = rational_json(*r.per_point->exact);
    j["per_point"] = pp;
  }
  j["checks"] = {{"theory_matches", r.theory_matches()}, {"all_pass", r.checks_pass()}};
  return j;
}

/// Columns k,freq,binomial_ref; binomial_ref is a reduced fraction (or an
/// integer) and empty when no reference applies.
inline std::string census_csv(const CensusResult& r) {
  std::ostringstream out;
  out << "k,freq,binomial_ref\n";
  for (std::size_t k = 0; k < r.freq.size(); ++k) {
    out << k << ',' << r.freq[k] << ',';
    if (r.binomial_ref && k < r.binomial_ref->size()) out << (*r.binomial_ref)[k].str();
    out << '\n';
  }
  return out.str();
}

inline nlohmann::ordered_json unlucky_json(const UnluckyReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = "rootcensus.unlucky/1";
  j["draws"] = std::to_string(r.draws);
  j["trials"] = std::to_string(r.trials);
  j["unlucky"] = std::to_string(r.unlucky);
  j["frequency"] = r.frequency;
  j["stderr_frequency"] = r.stderr_frequency;
  j["reference"] = rational_json(r.reference);
  j["bezout_bound"] = rational_json(r.bezout_bound);
  j["coprime"] = {{"draws", std::to_string(r.coprime_draws)},
                  {"trials", std::to_string(r.coprime_trials)},
                  {"unlucky", std::to_string(r.coprime_unlucky)},
                  {"frequency", r.coprime_frequency},
                  {"stderr", r.coprime_stderr}};
  if (r.slice_trials) j["slice"] = {{"trials", std::to_string(*r.slice_trials)}, {"unlucky", std::to_string(*r.slice_unlucky)}};
  if (r.resultant_degree) j["resultant_degree"] = *r.resultant_degree;
  if (r.resultant_bound) j["resultant_bound"] = rational_json(*r.resultant_bound);
  j["image_mismatches"] = std::to_string(r.image_mismatches);
  return j;
}

}  // namespace rootcensus
