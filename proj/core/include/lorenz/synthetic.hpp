#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "lorenz/dataset.hpp"
#include "lorenz/gb2.hpp"

namespace lorenz {

// Summary row of a yearly survey: weighted mean income, sample size, Gini.
struct SurveySummary {
  std::string label;
  double mean = 0.0;
  std::size_t n = 0;
  double gini = 0.0;
};

// Yearly summaries for Spain, 2008 to 2019 (labels "ES-2008" ...).
std::span<const SurveySummary> spain_summaries();

// Gini of a GB2 law with p = 1 (Singh-Maddala):
// 1 - G(q) G(2q - 1/a) / (G(q - 1/a) G(2q)).
double singh_maddala_gini(double a, double q);

// GB2 with p = 1 and the given q whose mean and Gini hit the targets. The
// shape a is found by bisection on the closed-form Gini above, then the scale
// is set from the mean. Requires a*q > 2 at the solution; throws DomainError
// when the target Gini is out of reach for this q.
Gb2Params calibrate_gb2(double mean, double gini, double q = 1.5);

// Survey-like draw: stratified quantile sampling of the calibrated law (one
// uniform per stratum, rows shuffled) with weights uniform on [0.8, 1.2]
// drawn independently of income, standing in for household
// cross-sectional weights.
Dataset synthesize(const SurveySummary& s, std::uint64_t seed, double q = 1.5);

// Writes one CSV per summary into dir as <label>.csv with columns
// income,weight. Returns the paths in input order.
std::vector<std::filesystem::path> write_synthetic_set(std::span<const SurveySummary> rows,
                                                       const std::filesystem::path& dir,
                                                       std::uint64_t seed);

}  // namespace lorenz
