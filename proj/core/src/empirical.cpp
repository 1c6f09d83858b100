#include "lorenz/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lorenz/error.hpp"

namespace lorenz {

namespace {

void check_values(const std::vector<double>& values) {
  if (values.empty()) fail(ErrorCode::EmptySample, "sample has no observations");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      fail(ErrorCode::DomainError, "income " + std::to_string(i) + " is not finite");
    }
    if (values[i] < 0.0) {
      fail(ErrorCode::NegativeIncome,
           "income " + std::to_string(i) + " is negative: " + std::to_string(values[i]));
    }
  }
}

}  // namespace

WeightedSample::WeightedSample(std::vector<double> values)
    : WeightedSample(values, std::vector<double>(values.size(), 1.0)) {}

WeightedSample::WeightedSample(std::vector<double> values, std::vector<double> weights)
    : values_(std::move(values)), weights_(std::move(weights)) {
  check_values(values_);
  if (weights_.size() != values_.size()) {
    fail(ErrorCode::BadParams, "got " + std::to_string(weights_.size()) + " weights for " +
                                   std::to_string(values_.size()) + " incomes");
  }
  double wv = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
      fail(ErrorCode::BadParams, "weight " + std::to_string(i) + " must be positive and finite");
    }
    total_weight_ += weights_[i];
    wv += weights_[i] * values_[i];
  }
  mean_ = wv / total_weight_;
  if (!(mean_ > 0.0)) fail(ErrorCode::ZeroMean, "weighted mean income is zero");
}

LorenzCurve empirical_lorenz(const WeightedSample& s) {
  const auto v = s.values();
  const auto w = s.weights();
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return v[i] < v[j]; });

  double total_w = 0.0;
  double total_wv = 0.0;
  for (std::size_t i : order) {
    total_w += w[i];
    total_wv += w[i] * v[i];
  }

  std::vector<Knot> knots;
  knots.reserve(v.size() + 1);
  knots.push_back({0.0, 0.0});
  double cum_w = 0.0;
  double cum_wv = 0.0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t i = order[k];
    cum_w += w[i];
    cum_wv += w[i] * v[i];
    const bool last_of_value = k + 1 == order.size() || v[order[k + 1]] != v[i];
    if (!last_of_value) continue;
    const double t = cum_w / total_w;
    if (t <= knots.back().t || t >= 1.0) continue;
    knots.push_back({t, std::min(1.0, cum_wv / total_wv)});
  }
  knots.push_back({1.0, 1.0});
  return LorenzCurve::from_convex_knots(std::move(knots));
}

double weighted_quantile(const WeightedSample& s, double u) {
  if (!(u >= 0.0 && u <= 1.0)) fail(ErrorCode::DomainError, "quantile level must lie in [0,1]");
  const auto v = s.values();
  const auto w = s.weights();
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return v[i] < v[j]; });
  const double target = u * s.total_weight();
  double cum = 0.0;
  for (std::size_t i : order) {
    cum += w[i];
    if (cum >= target) return v[i];
  }
  return v[order.back()];
}

PlugInIndices plug_in_indices(const WeightedSample& s1, const WeightedSample& s2) {
  const LorenzCurve c1 = empirical_lorenz(s1);
  const LorenzCurve c2 = empirical_lorenz(s2);
  PlugInIndices out;
  out.raw = index_raw(c1, c2);
  out.star = index_star(out.raw);
  out.upper = index_upper(out.raw);
  return out;
}

ScaledError normalized_statistic(const RawIndex& est, const RawIndex& truth, std::size_t n1,
                                 std::size_t n2) {
  if (n1 == 0 || n2 == 0) fail(ErrorCode::DomainError, "sample sizes must be at least 1");
  const double f1 = static_cast<double>(n1);
  const double f2 = static_cast<double>(n2);
  const double scale = std::sqrt(f1 * f2 / (f1 + f2));
  return {scale * (est.delta_x - truth.delta_x), scale * (est.distance - truth.distance)};
}

}  // namespace lorenz
