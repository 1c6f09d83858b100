#include <cmath>

#include "helpers.hpp"

namespace lorenz {
namespace {

using testing::error_code_of;

double pairwise_gini(const std::vector<double>& v) {
  double s = 0.0;
  double total = 0.0;
  for (double a : v) {
    total += a;
    for (double b : v) s += std::abs(a - b);
  }
  const double n = static_cast<double>(v.size());
  return s / (2.0 * n * n * (total / n));
}

TEST(WeightedSample, Validation) {
  EXPECT_EQ(error_code_of([] { WeightedSample({}); }), ErrorCode::EmptySample);
  EXPECT_EQ(error_code_of([] { WeightedSample({1.0, -2.0}); }), ErrorCode::NegativeIncome);
  EXPECT_EQ(error_code_of([] { WeightedSample({0.0, 0.0}); }), ErrorCode::ZeroMean);
  EXPECT_EQ(error_code_of([] { WeightedSample({1.0, 2.0}, {1.0}); }), ErrorCode::BadParams);
  EXPECT_EQ(error_code_of([] { WeightedSample({1.0, 2.0}, {1.0, 0.0}); }), ErrorCode::BadParams);
  const WeightedSample s({1.0, 3.0}, {3.0, 1.0});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_DOUBLE_EQ(s.total_weight(), 4.0);
  EXPECT_DOUBLE_EQ(s.mean(), 1.5);
}

TEST(EmpiricalLorenz, SmallExample) {
  const LorenzCurve c = empirical_lorenz(WeightedSample({1, 1, 2}));
  // Equal values collapse into one segment: (1/3, 0.25) lies on it.
  EXPECT_NEAR(eval(c, 1.0 / 3), 0.25, 1e-15);
  EXPECT_NEAR(eval(c, 2.0 / 3), 0.5, 1e-15);
  EXPECT_NEAR(c.left_limit_at_one(), 1.0, 1e-15);
  EXPECT_NEAR(gini(c), 1.0 / 6.0, 1e-15);
}

TEST(EmpiricalLorenz, ConstantIncomeIsPerfectEquality) {
  EXPECT_EQ(empirical_lorenz(WeightedSample({5, 5, 5})), perfect_equality());
}

TEST(EmpiricalLorenz, IntegerWeightsMatchReplication) {
  const LorenzCurve w = empirical_lorenz(WeightedSample({1, 2}, {2, 1}));
  const LorenzCurve r = empirical_lorenz(WeightedSample({1, 1, 2}));
  EXPECT_LT(sup_distance(w, r), 1e-15);
  EXPECT_EQ(lorenz_distance(w, r), 0.0);
}

TEST(EmpiricalLorenz, OrderDoesNotMatter) {
  const LorenzCurve a = empirical_lorenz(WeightedSample({3, 1, 4, 1, 5, 9, 2, 6}));
  const LorenzCurve b = empirical_lorenz(WeightedSample({9, 6, 5, 4, 3, 2, 1, 1}));
  EXPECT_EQ(a, b);
}

TEST(EmpiricalLorenz, ScaleInvariance) {
  std::mt19937_64 rng(51);
  std::lognormal_distribution<double> ln(0.0, 1.0);
  std::vector<double> v(400);
  for (double& x : v) x = ln(rng);
  const LorenzCurve base = empirical_lorenz(WeightedSample(v));
  for (double c : {0.5, 1024.0}) {
    std::vector<double> s = v;
    for (double& x : s) x *= c;
    EXPECT_EQ(empirical_lorenz(WeightedSample(s)), base) << c;
  }
  for (double c : {3.0, 1000.0}) {
    // Non-power-of-two factors change the rounding of the partial sums.
    std::vector<double> s = v;
    for (double& x : s) x *= c;
    EXPECT_LT(sup_distance(empirical_lorenz(WeightedSample(s)), base), 1e-13) << c;
  }
}

TEST(EmpiricalLorenz, WeightInvariance) {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  std::vector<double> v(300);
  std::vector<double> w(300);
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = u(rng);
    w[i] = u(rng);
  }
  const LorenzCurve base = empirical_lorenz(WeightedSample(v, w));
  std::vector<double> w2 = w;
  for (double& x : w2) x *= 4.0;
  EXPECT_EQ(empirical_lorenz(WeightedSample(v, w2)), base);
  for (double& x : w2) x *= 0.75;
  EXPECT_LT(sup_distance(empirical_lorenz(WeightedSample(v, w2)), base), 1e-13);
}

TEST(EmpiricalLorenz, GiniEqualsPairwiseFormula) {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> size(1, 500);
  std::lognormal_distribution<double> ln(0.0, 0.8);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> v(size(rng));
    for (double& x : v) x = ln(rng);
    if (i % 7 == 0) v[0] = 0.0;
    EXPECT_NEAR(gini(empirical_lorenz(WeightedSample(v))), pairwise_gini(v), 1e-10);
  }
}

TEST(EmpiricalLorenz, BernoulliSampleIsLowerExtreme) {
  for (int zeros : {1, 3, 7}) {
    std::vector<double> v(10, 1.0);
    for (int i = 0; i < zeros; ++i) v[i] = 0.0;
    const double a = zeros / 10.0;
    const LorenzCurve c = empirical_lorenz(WeightedSample(v));
    EXPECT_LT(sup_distance(c, lorenz_minus(a)), 1e-15);
    EXPECT_NEAR(gini(c), a, 1e-15);
  }
}

TEST(WeightedQuantile, LeftContinuousStep) {
  const WeightedSample s({1, 2, 3}, {1, 1, 2});
  EXPECT_EQ(weighted_quantile(s, 0.0), 1.0);
  EXPECT_EQ(weighted_quantile(s, 0.25), 1.0);
  EXPECT_EQ(weighted_quantile(s, 0.26), 2.0);
  EXPECT_EQ(weighted_quantile(s, 0.5), 2.0);
  EXPECT_EQ(weighted_quantile(s, 0.51), 3.0);
  EXPECT_EQ(weighted_quantile(s, 1.0), 3.0);
  EXPECT_EQ(error_code_of([&] { weighted_quantile(s, 1.2); }), ErrorCode::DomainError);
}

TEST(PlugIn, IdenticalSamplesGiveOrigin) {
  const WeightedSample s({1, 4, 2, 8});
  const PlugInIndices p = plug_in_indices(s, s);
  EXPECT_EQ(p.raw.delta_x, 0.0);
  EXPECT_EQ(p.raw.distance, 0.0);
  EXPECT_EQ(p.star.x, 0.0);
  EXPECT_EQ(p.star.y, 0.0);
  EXPECT_EQ(p.upper.y, 0.0);
}

TEST(PlugIn, LargeModelTwoSamplesRecoverTheDistance) {
  const ModelPreset m = model_preset(2);
  const PlugInIndices p = plug_in_indices(sample(m.first, 50'000, 1), sample(m.second, 50'000, 2));
  EXPECT_NEAR(p.raw.distance, 0.3510, 0.02);
}

TEST(NormalizedStatistic, Scaling) {
  const RawIndex truth{0.3, 0.4, 0.2, 0.1};
  const ScaledError z = normalized_statistic(truth, truth, 10, 20);
  EXPECT_EQ(z.delta_x, 0.0);
  EXPECT_EQ(z.distance, 0.0);
  const RawIndex est{0.3, 0.5, 0.3, 0.2};
  const ScaledError e = normalized_statistic(est, truth, 200, 200);
  EXPECT_NEAR(e.delta_x, std::sqrt(100.0) * 0.1, 1e-12);
  EXPECT_NEAR(e.distance, std::sqrt(100.0) * 0.1, 1e-12);
  const RawIndex one{0, 0, 1, 0};
  const RawIndex zero{0, 0, 0, 0};
  EXPECT_NEAR(normalized_statistic(one, zero, 12987, 15861).distance, 84.50, 0.005);
}

}  // namespace
}  // namespace lorenz
