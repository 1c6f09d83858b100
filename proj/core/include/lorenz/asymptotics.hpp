#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lorenz/empirical.hpp"
#include "lorenz/gb2.hpp"
#include "lorenz/indices.hpp"

namespace lorenz {

inline constexpr std::size_t kDefaultGridSize = 4096;
inline constexpr double kDefaultZeroTolerance = 1e-9;

// Values at t_i = i/m, i = 0..m, m a power of two.
struct GridPath {
  std::vector<double> values;

  std::size_t m() const noexcept { return values.empty() ? 0 : values.size() - 1; }
  double t(std::size_t i) const noexcept { return static_cast<double>(i) / m(); }
};

// B(t_i) = W(t_i) - t_i W(1) from cumulative N(0, 1/m) increments.
GridPath brownian_bridge(std::size_t m, std::uint64_t seed);

// Discretization of B -> int l'' B for a GB2 law. On each cell the bridge
// splits into its chord between grid values and an independent bridge pinned
// at the cell ends. Against the chord, l'' integrates exactly to second
// differences of l. Against the pinned part it gives a centered Gaussian
// whose variance int_cell (l' - mean l')^2 follows from the incomplete second
// moment, so nothing is truncated at the endpoints where l'' is unbounded.
class LorenzKernel {
 public:
  // Throws IntegrabilityError unless integrability_check(g) is OK.
  LorenzKernel(const Gb2Params& g, std::size_t m = kDefaultGridSize);

  std::size_t m() const noexcept { return m_; }
  const Gb2Params& params() const noexcept { return params_; }
  // l(t_i), i = 0..m.
  std::span<const double> curve() const noexcept { return curve_; }
  // int l'' phi_i for the hat function at node i; zero at both ends.
  std::span<const double> node_weights() const noexcept { return node_weight_; }
  // The part of node_weights()[i] coming from [t_{i-1}, t_i].
  std::span<const double> left_weights() const noexcept { return left_weight_; }
  // Standard deviation of the pinned-bridge term for cell j = [t_j, t_{j+1}].
  std::span<const double> cell_sd() const noexcept { return cell_sd_; }

 private:
  Gb2Params params_;
  std::size_t m_;
  std::vector<double> curve_;
  std::vector<double> node_weight_;
  std::vector<double> left_weight_;
  std::vector<double> cell_sd_;
};

// L(t) = l(t) int_0^1 l'' B - int_0^t l'' B on the bridge's grid, with one
// standard normal per cell for the within-cell part of the bridge. Passing no
// cell noise gives the conditional mean of L given the grid values of B.
GridPath lorenz_limit_process(const LorenzKernel& kernel, const GridPath& bridge,
                              std::span<const double> cell_noise);
GridPath lorenz_limit_process(const LorenzKernel& kernel, const GridPath& bridge);
GridPath lorenz_limit_process(const Gb2Params& g, const GridPath& bridge);

std::vector<double> standard_normals(std::size_t count, std::uint64_t seed);

// sqrt(1 - lambda) L1 - sqrt(lambda) L2. Throws GridMismatch.
GridPath combine(const GridPath& l1, const GridPath& l2, double lambda);

// int_{|f| <= tol} |g| + int_{|f| > tol} g sgn(f), trapezoid rule.
double hadamard_delta(const GridPath& f, const GridPath& g,
                      double zero_tol = kDefaultZeroTolerance);

// Trapezoid integral over [0, 1].
double integrate(const GridPath& path);

struct LimitDraw {
  double comp1 = 0.0;  // Gini-difference component, 2 int L
  double comp2 = 0.0;  // distance component, 2 delta'(L)
  // Limits of the two Gini estimators on the same normalized scale.
  double gini1 = 0.0;
  double gini2 = 0.0;

  friend bool operator==(const LimitDraw&, const LimitDraw&) = default;
};

// Draws from the limit law of the normalized raw index for a pair of GB2
// laws, with lambda the limiting share n1/(n1+n2) of the first sample.
class LimitSimulator {
 public:
  LimitSimulator(const Gb2Params& g1, const Gb2Params& g2, double lambda = 0.5,
                 std::size_t m = kDefaultGridSize, double zero_tol = kDefaultZeroTolerance);

  LimitDraw draw(std::uint64_t seed) const;
  std::vector<LimitDraw> draws(std::size_t count, std::uint64_t master_seed) const;

  // Share of interior grid points where |l1 - l2| <= zero_tol.
  double zero_set_measure() const noexcept { return zero_measure_; }
  const GridPath& difference() const noexcept { return difference_; }
  std::size_t m() const noexcept { return kernel1_.m(); }

 private:
  LorenzKernel kernel1_;
  LorenzKernel kernel2_;
  double lambda_;
  double zero_tol_;
  GridPath difference_;
  double zero_measure_ = 0.0;
};

LimitDraw limit_draw(const Gb2Params& g1, const Gb2Params& g2, double lambda, std::uint64_t seed,
                     std::size_t m = kDefaultGridSize);

// Limit of the normalized star and upper-star indices obtained by pushing a
// raw-index limit draw through the directional derivative of the normalizing
// maps at the true point.
struct NormalizedLimit {
  Point2 star;
  Point2 upper;
};

NormalizedLimit push_forward(const RawIndex& truth, const LimitDraw& draw);

// Replications of the plug-in estimator for two GB2 samples of size n each,
// normalized against the closed-form truth. Replication i depends only on
// (seed, i).
std::vector<ScaledError> monte_carlo_estimator(const Gb2Params& g1, const Gb2Params& g2,
                                               std::size_t n, std::size_t reps,
                                               std::uint64_t seed);

struct MarginStats {
  double mean = 0.0;
  double sd = 0.0;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  bool normal_compatible = false;
};

struct NormalityReport {
  std::size_t draws = 0;
  MarginStats first;
  MarginStats second;
  bool normal_compatible = false;  // both margins
};

inline constexpr double kMaxAbsSkewness = 0.3;
inline constexpr double kMaxAbsExcessKurtosis = 0.5;
inline constexpr std::size_t kMinDiagnosticDraws = 100;

MarginStats margin_stats(std::span<const double> values);
NormalityReport normality_diagnostics(std::span<const double> first,
                                      std::span<const double> second);
NormalityReport normality_diagnostics(std::span<const LimitDraw> draws);
NormalityReport normality_diagnostics(std::span<const ScaledError> stats);

std::string to_json(const NormalityReport& r, int indent = 2);

}  // namespace lorenz
