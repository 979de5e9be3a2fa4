// Serialisation of sweep data and the machine-readable analysis reports.
//
// Data files carry exact values only: naturals as JSON numbers (strings once
// they leave 64 bits), ratios as "p/q" strings.
#ifndef RATSQ_REPORTS_HPP
#define RATSQ_REPORTS_HPP

#include "ratsq/analysis.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ratsq {

nlohmann::json json_natural(const Natural& x);

/// Header a,sigma,sigma1,upper,on_bound,min_k,t_first; on_bound is 0/1.
std::string sweep_csv(const std::vector<SweepRecord>& records);
/// Array of objects with the SweepRecord field names, two-space indented.
std::string sweep_json(const std::vector<SweepRecord>& records);

/// Sorted k values expected for 100^2 < a < 101^2.
const std::vector<unsigned>& expected_k_set_100();

/// Off-bound peak value predicted for n >= 11: odd numbers from 11 in groups
/// of three and two (11,11,11,13,13,15,15,15,17,17,...).
std::optional<Natural> expected_peak_sigma(const Natural& n);

/// Aggregate near-symmetry band accepted as "about 60%".
inline constexpr double kSymmetryLow = 0.50;
inline constexpr double kSymmetryHigh = 0.70;

nlohmann::json symmetry_report(const Natural& a_min_limit, bool full_range, int jobs);
nlohmann::json kset_report(const Natural& n);
nlohmann::json offbound_report(const Natural& n_from, const Natural& n_to, const Natural& min_from,
                               const Natural& min_to);
nlohmann::json conjecture1_report(const Natural& a_max, const Natural& k_max, const Natural& s_max);
nlohmann::json closure_report(const Natural& a, const Natural& s_max, const Natural& odd_k_max,
                              const Natural& n_max);

}  // namespace ratsq

#endif  // RATSQ_REPORTS_HPP
