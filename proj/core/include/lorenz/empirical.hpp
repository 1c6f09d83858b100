#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lorenz/curve.hpp"
#include "lorenz/indices.hpp"

namespace lorenz {

// Nonnegative incomes with positive survey weights.
class WeightedSample {
 public:
  // Unit weights. Throws EmptySample, NegativeIncome or ZeroMean.
  explicit WeightedSample(std::vector<double> values);
  // Throws additionally BadParams on a length mismatch or a weight <= 0.
  WeightedSample(std::vector<double> values, std::vector<double> weights);

  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return values_.size(); }
  double total_weight() const noexcept { return total_weight_; }
  double mean() const noexcept { return mean_; }

 private:
  std::vector<double> values_;
  std::vector<double> weights_;
  double total_weight_ = 0.0;
  double mean_ = 0.0;
};

// Integral of the weighted empirical quantile, normalized by the mean. One
// knot per distinct income value.
LorenzCurve empirical_lorenz(const WeightedSample& s);

// Left-continuous weighted quantile inf{x : F(x) >= u} for u in (0, 1]; u = 0
// gives the smallest value.
double weighted_quantile(const WeightedSample& s, double u);

struct PlugInIndices {
  RawIndex raw;
  NormalizedIndex star;
  NormalizedIndex upper;
};

PlugInIndices plug_in_indices(const WeightedSample& s1, const WeightedSample& s2);

// sqrt(n1 n2 / (n1 + n2)) * (est - truth) on (delta_x, distance).
struct ScaledError {
  double delta_x = 0.0;
  double distance = 0.0;

  friend bool operator==(const ScaledError&, const ScaledError&) = default;
};

ScaledError normalized_statistic(const RawIndex& est, const RawIndex& truth, std::size_t n1,
                                 std::size_t n2);

}  // namespace lorenz
