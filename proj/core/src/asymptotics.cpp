#include "lorenz/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "lorenz/beta.hpp"
#include "lorenz/error.hpp"
#include "lorenz/random.hpp"

namespace lorenz {

namespace {

void require_grid(std::size_t m) {
  if (m < 2 || (m & (m - 1)) != 0) {
    fail(ErrorCode::DomainError, "grid size must be a power of two >= 2, got " + std::to_string(m));
  }
}

void require_same_grid(const GridPath& a, const GridPath& b) {
  if (a.values.size() != b.values.size()) {
    fail(ErrorCode::GridMismatch, "paths have " + std::to_string(a.values.size()) + " and " +
                                      std::to_string(b.values.size()) + " grid points");
  }
}

}  // namespace

GridPath brownian_bridge(std::size_t m, std::uint64_t seed) {
  require_grid(m);
  Rng rng = make_rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(static_cast<double>(m)));
  GridPath path;
  path.values.resize(m + 1);
  path.values[0] = 0.0;
  double w = 0.0;
  for (std::size_t i = 1; i <= m; ++i) {
    w += normal(rng);
    path.values[i] = w;
  }
  const double end = path.values[m];
  for (std::size_t i = 1; i < m; ++i) path.values[i] -= path.t(i) * end;
  path.values[m] = 0.0;
  return path;
}

LorenzKernel::LorenzKernel(const Gb2Params& g, std::size_t m) : params_(g), m_(m) {
  require_grid(m);
  if (integrability_check(g) != Integrability::OK) {
    fail(ErrorCode::IntegrabilityError,
         "the Lorenz limit process needs a*q > 2, got a*q = " + std::to_string(g.a * g.q));
  }
  const double md = static_cast<double>(m);
  const double h = 1.0 / md;
  const double p1 = g.p + 1.0 / g.a;
  const double q1 = g.q - 1.0 / g.a;
  const double p2 = g.p + 2.0 / g.a;
  const double q2 = g.q - 2.0 / g.a;
  // int_0^1 l'(u)^2 du = E X^2 / (E X)^2.
  const double second_moment = std::exp(special::log_beta(p2, q2) + special::log_beta(g.p, g.q) -
                                        2.0 * special::log_beta(p1, q1));
  const double mu = mean(g);

  // Both tails of the first and second incomplete moments at every node, so
  // that increments near either end are differences of small numbers.
  std::vector<special::BetaTail> first(m + 1);
  std::vector<special::BetaTail> second(m + 1);
  std::vector<double> slope(m + 1, 0.0);  // l'(t_i); l'(0) = 0 and l'(1) is never used
  first[0] = second[0] = {0.0, 1.0};
  first[m] = second[m] = {1.0, 0.0};
  for (std::size_t i = 1; i < m; ++i) {
    const special::BetaQuantile bq = special::ibeta_inv(static_cast<double>(i) * h, g.p, g.q);
    first[i] = special::ibeta_tails(bq.x, bq.y, p1, q1);
    second[i] = special::ibeta_tails(bq.x, bq.y, p2, q2);
    slope[i] = g.b * std::exp((std::log(bq.x) - std::log(bq.y)) / g.a) / mu;
  }
  auto increment = [&](const std::vector<special::BetaTail>& v, std::size_t j) {
    return static_cast<double>(j) * h < 0.5 ? v[j + 1].lower - v[j].lower
                                            : v[j].upper - v[j + 1].upper;
  };

  curve_.resize(m + 1);
  for (std::size_t i = 0; i <= m; ++i) curve_[i] = first[i].lower;
  curve_[0] = 0.0;
  curve_[m] = 1.0;

  std::vector<double> chord(m);  // mean of l' over cell j
  cell_sd_.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    chord[j] = increment(first, j) / h;
    const double total = second_moment * increment(second, j);
    const double exact = total - h * chord[j] * chord[j];
    double var = exact;
    if (j + 1 < m && !(exact > 1e-7 * total)) {
      // Cancellation: l' is close to linear on the cell.
      const double rise = slope[j + 1] - slope[j];
      var = rise * rise * h / 12.0;
    }
    cell_sd_[j] = std::sqrt(std::max(var, 0.0));
  }

  node_weight_.assign(m + 1, 0.0);
  left_weight_.assign(m + 1, 0.0);
  for (std::size_t i = 1; i < m; ++i) {
    node_weight_[i] = chord[i] - chord[i - 1];
    left_weight_[i] = slope[i] - chord[i - 1];
  }
}

GridPath lorenz_limit_process(const LorenzKernel& kernel, const GridPath& bridge,
                              std::span<const double> cell_noise) {
  const std::size_t m = kernel.m();
  if (bridge.values.size() != m + 1) {
    fail(ErrorCode::GridMismatch, "bridge grid does not match the kernel grid");
  }
  if (!cell_noise.empty() && cell_noise.size() != m) {
    fail(ErrorCode::GridMismatch, "cell noise needs one value per grid cell");
  }
  const auto l = kernel.curve();
  const auto w = kernel.node_weights();
  const auto left = kernel.left_weights();
  const auto sd = kernel.cell_sd();
  const auto& b = bridge.values;

  // running[i] = int_0^{t_i} l'' B minus the share of node i's hat to the
  // left of t_i, which is added back below.
  std::vector<double> running(m + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    double step = w[i] * b[i];
    if (!cell_noise.empty()) step += sd[i] * cell_noise[i];
    running[i + 1] = running[i] + step;
  }
  const double total = running[m];
  GridPath out;
  out.values.resize(m + 1);
  for (std::size_t i = 1; i < m; ++i) {
    out.values[i] = l[i] * total - (running[i] + left[i] * b[i]);
  }
  out.values[0] = 0.0;
  out.values[m] = 0.0;
  return out;
}

GridPath lorenz_limit_process(const LorenzKernel& kernel, const GridPath& bridge) {
  return lorenz_limit_process(kernel, bridge, {});
}

std::vector<double> standard_normals(std::size_t count, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> out(count);
  for (double& v : out) v = normal(rng);
  return out;
}

GridPath lorenz_limit_process(const Gb2Params& g, const GridPath& bridge) {
  return lorenz_limit_process(LorenzKernel(g, bridge.m()), bridge);
}

GridPath combine(const GridPath& l1, const GridPath& l2, double lambda) {
  require_same_grid(l1, l2);
  if (!(lambda >= 0.0 && lambda <= 1.0)) fail(ErrorCode::DomainError, "lambda must lie in [0,1]");
  const double c1 = std::sqrt(1.0 - lambda);
  const double c2 = std::sqrt(lambda);
  GridPath out;
  out.values.resize(l1.values.size());
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] = c1 * l1.values[i] - c2 * l2.values[i];
  }
  return out;
}

double integrate(const GridPath& path) {
  const std::size_t m = path.m();
  if (m == 0) return 0.0;
  double sum = 0.5 * (path.values.front() + path.values.back());
  for (std::size_t i = 1; i < m; ++i) sum += path.values[i];
  return sum / static_cast<double>(m);
}

double hadamard_delta(const GridPath& f, const GridPath& g, double zero_tol) {
  require_same_grid(f, g);
  if (!(zero_tol >= 0.0)) fail(ErrorCode::DomainError, "zero tolerance must be >= 0");
  GridPath integrand;
  integrand.values.resize(g.values.size());
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    const double fi = f.values[i];
    const double gi = g.values[i];
    integrand.values[i] = std::abs(fi) <= zero_tol ? std::abs(gi) : (fi > 0.0 ? gi : -gi);
  }
  return integrate(integrand);
}

LimitSimulator::LimitSimulator(const Gb2Params& g1, const Gb2Params& g2, double lambda,
                               std::size_t m, double zero_tol)
    : kernel1_(g1, m), kernel2_(g2, m), lambda_(lambda), zero_tol_(zero_tol) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) fail(ErrorCode::DomainError, "lambda must lie in [0,1]");
  if (!(zero_tol >= 0.0)) fail(ErrorCode::DomainError, "zero tolerance must be >= 0");
  difference_.values.resize(m + 1);
  std::size_t zeros = 0;
  for (std::size_t i = 0; i <= m; ++i) {
    difference_.values[i] = kernel1_.curve()[i] - kernel2_.curve()[i];
    if (i > 0 && i < m && std::abs(difference_.values[i]) <= zero_tol) ++zeros;
  }
  zero_measure_ = static_cast<double>(zeros) / static_cast<double>(m - 1);
}

LimitDraw LimitSimulator::draw(std::uint64_t seed) const {
  const std::size_t m = kernel1_.m();
  const GridPath l1 = lorenz_limit_process(kernel1_, brownian_bridge(m, split_seed(seed, 1)),
                                           standard_normals(m, split_seed(seed, 3)));
  const GridPath l2 = lorenz_limit_process(kernel2_, brownian_bridge(m, split_seed(seed, 2)),
                                           standard_normals(m, split_seed(seed, 4)));
  const GridPath l = combine(l1, l2, lambda_);
  LimitDraw d;
  d.comp1 = 2.0 * integrate(l);
  d.comp2 = 2.0 * hadamard_delta(difference_, l, zero_tol_);
  d.gini1 = -2.0 * std::sqrt(1.0 - lambda_) * integrate(l1);
  d.gini2 = -2.0 * std::sqrt(lambda_) * integrate(l2);
  return d;
}

std::vector<LimitDraw> LimitSimulator::draws(std::size_t count, std::uint64_t master_seed) const {
  std::vector<LimitDraw> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(draw(split_seed(master_seed, i)));
  return out;
}

LimitDraw limit_draw(const Gb2Params& g1, const Gb2Params& g2, double lambda, std::uint64_t seed,
                     std::size_t m) {
  return LimitSimulator(g1, g2, lambda, m).draw(seed);
}

NormalizedLimit push_forward(const RawIndex& truth, const LimitDraw& draw) {
  const double norm = std::max({1.0, std::abs(draw.comp1), std::abs(draw.comp2),
                                std::abs(draw.gini1), std::abs(draw.gini2)});
  const double h = 1e-7 / norm;
  NormalizedLimit out;
  const Point2 s0 = map_t_star_extended(truth.delta_x, truth.distance);
  const Point2 s1 =
      map_t_star_extended(truth.delta_x + h * draw.comp1, truth.distance + h * draw.comp2);
  out.star = {(s1.x - s0.x) / h, (s1.y - s0.y) / h};
  const Point2 u0 = map_t_upper_extended(truth.gini1, truth.gini2, truth.distance);
  const Point2 u1 = map_t_upper_extended(truth.gini1 + h * draw.gini1, truth.gini2 + h * draw.gini2,
                                         truth.distance + h * draw.comp2);
  out.upper = {(u1.x - u0.x) / h, (u1.y - u0.y) / h};
  return out;
}

std::vector<ScaledError> monte_carlo_estimator(const Gb2Params& g1, const Gb2Params& g2,
                                               std::size_t n, std::size_t reps,
                                               std::uint64_t seed) {
  if (reps == 0) fail(ErrorCode::DomainError, "need at least one replication");
  if (n == 0) fail(ErrorCode::EmptySample, "sample size must be at least 1");
  const RawIndex truth = index_raw(lorenz_curve(g1), lorenz_curve(g2));
  std::vector<ScaledError> out;
  out.reserve(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    const std::uint64_t rep_seed = split_seed(seed, r);
    const LorenzCurve c1 = empirical_lorenz(sample(g1, n, split_seed(rep_seed, 1)));
    const LorenzCurve c2 = empirical_lorenz(sample(g2, n, split_seed(rep_seed, 2)));
    out.push_back(normalized_statistic(index_raw(c1, c2), truth, n, n));
  }
  return out;
}

MarginStats margin_stats(std::span<const double> values) {
  if (values.size() < 2) fail(ErrorCode::TooFewDraws, "need at least two values");
  const double n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
  for (double v : values) {
    const double d = v - mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  MarginStats s;
  s.mean = mean;
  s.sd = std::sqrt(m2 / (n - 1.0));
  m2 /= n;
  m3 /= n;
  m4 /= n;
  if (m2 > 0.0) {
    s.skewness = m3 / std::pow(m2, 1.5);
    s.excess_kurtosis = m4 / (m2 * m2) - 3.0;
    s.normal_compatible = std::abs(s.skewness) <= kMaxAbsSkewness &&
                          std::abs(s.excess_kurtosis) <= kMaxAbsExcessKurtosis;
  }
  return s;
}

NormalityReport normality_diagnostics(std::span<const double> first,
                                      std::span<const double> second) {
  if (first.size() != second.size()) {
    fail(ErrorCode::DomainError, "margins have different lengths");
  }
  if (first.size() < kMinDiagnosticDraws) {
    fail(ErrorCode::TooFewDraws, "normality diagnostics need at least " +
                                     std::to_string(kMinDiagnosticDraws) + " draws, got " +
                                     std::to_string(first.size()));
  }
  NormalityReport r;
  r.draws = first.size();
  r.first = margin_stats(first);
  r.second = margin_stats(second);
  r.normal_compatible = r.first.normal_compatible && r.second.normal_compatible;
  return r;
}

NormalityReport normality_diagnostics(std::span<const LimitDraw> draws) {
  std::vector<double> a;
  std::vector<double> b;
  a.reserve(draws.size());
  b.reserve(draws.size());
  for (const LimitDraw& d : draws) {
    a.push_back(d.comp1);
    b.push_back(d.comp2);
  }
  return normality_diagnostics(a, b);
}

NormalityReport normality_diagnostics(std::span<const ScaledError> stats) {
  std::vector<double> a;
  std::vector<double> b;
  a.reserve(stats.size());
  b.reserve(stats.size());
  for (const ScaledError& s : stats) {
    a.push_back(s.delta_x);
    b.push_back(s.distance);
  }
  return normality_diagnostics(a, b);
}

}  // namespace lorenz
