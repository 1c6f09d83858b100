#include "lorenz/gb2.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "lorenz/beta.hpp"
#include "lorenz/error.hpp"
#include "lorenz/random.hpp"

namespace lorenz {

namespace {

using special::BetaQuantile;

void require_mean(const Gb2Params& g) {
  if (!(g.a * g.q > 1.0)) {
    fail(ErrorCode::NotIntegrable,
         "GB2 with a*q = " + std::to_string(g.a * g.q) + " <= 1 has no finite mean");
  }
}

void require_open_unit(double t, const char* what) {
  if (!(t > 0.0 && t < 1.0)) {
    fail(ErrorCode::DomainError, std::string(what) + " needs 0 < t < 1, got " + std::to_string(t));
  }
}

// log of the density at the quantile whose beta(p, q) preimage is (x, y).
double log_density_at(const Gb2Params& g, const BetaQuantile& bq) {
  const double l = std::log(bq.x) - std::log(bq.y);
  return std::log(g.a) - std::log(g.b) + (g.p - 1.0 / g.a) * l - special::log_beta(g.p, g.q) +
         (g.p + g.q) * std::log(bq.y);
}

double curve_value(const Gb2Params& g, double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const BetaQuantile bq = special::ibeta_inv(t, g.p, g.q);
  return special::ibeta_tails(bq.x, bq.y, g.p + 1.0 / g.a, g.q - 1.0 / g.a).lower;
}

double chebyshev_node(int i, int n) {
  return 0.5 * (1.0 - std::cos(std::numbers::pi * i / n));
}

// Chebyshev nodes for indices 0..n, merged with 1 - 10^-k for every k whose
// node lies beyond the last interior Chebyshev node.
std::vector<double> grid_nodes(int n) {
  std::vector<double> nodes;
  nodes.reserve(static_cast<std::size_t>(n) + 12);
  for (int i = 0; i < n; ++i) nodes.push_back(chebyshev_node(i, n));
  const double last = nodes.back();
  for (int k = 1; k <= 10; ++k) {
    const double t = 1.0 - std::pow(10.0, -k);
    if (t > last) nodes.push_back(t);
  }
  nodes.push_back(1.0);
  return nodes;
}

LorenzCurve curve_on(const std::vector<double>& nodes, const std::vector<double>& values) {
  std::vector<Knot> knots;
  knots.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) knots.push_back({nodes[i], values[i]});
  knots.front() = {0.0, 0.0};
  knots.back() = {1.0, 1.0};
  return LorenzCurve(canonicalize(knots));
}

}  // namespace

Gb2Params make_gb2(double a, double b, double p, double q) {
  for (double v : {a, b, p, q}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      fail(ErrorCode::BadParams, "GB2 parameters must be positive and finite");
    }
  }
  return {a, b, p, q};
}

std::string_view to_string(Integrability i) noexcept {
  switch (i) {
    case Integrability::OK: return "OK";
    case Integrability::MeanOnly: return "MeanOnly";
    case Integrability::NotIntegrable: return "NotIntegrable";
  }
  return "NotIntegrable";
}

Integrability integrability_check(const Gb2Params& g) {
  const double aq = g.a * g.q;
  if (aq > 2.0) return Integrability::OK;
  if (aq > 1.0) return Integrability::MeanOnly;
  return Integrability::NotIntegrable;
}

double mean(const Gb2Params& g) {
  require_mean(g);
  return g.b * std::exp(special::log_beta(g.p + 1.0 / g.a, g.q - 1.0 / g.a) -
                        special::log_beta(g.p, g.q));
}

Gb2Params normalize_scale(double a, double p, double q) {
  Gb2Params g = make_gb2(a, 1.0, p, q);
  require_mean(g);
  g.b = std::exp(special::log_beta(p, q) - special::log_beta(p + 1.0 / a, q - 1.0 / a));
  return g;
}

double density(const Gb2Params& g, double x) {
  if (!(x > 0.0)) fail(ErrorCode::DomainError, "GB2 density needs x > 0");
  const double z = g.a * (std::log(x) - std::log(g.b));
  const double log1p_exp = z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
  return std::exp(std::log(g.a) + (g.a * g.p - 1.0) * std::log(x) - g.a * g.p * std::log(g.b) -
                  special::log_beta(g.p, g.q) - (g.p + g.q) * log1p_exp);
}

double cdf(const Gb2Params& g, double x) {
  if (x <= 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  const double z = g.a * (std::log(x) - std::log(g.b));
  const double xb = 1.0 / (1.0 + std::exp(-z));
  const double yb = 1.0 / (1.0 + std::exp(z));
  return special::ibeta_tails(xb, yb, g.p, g.q).lower;
}

double quantile(const Gb2Params& g, double t) {
  if (!(t >= 0.0 && t <= 1.0)) fail(ErrorCode::DomainError, "quantile level outside [0,1]");
  if (t == 0.0) return 0.0;
  if (t == 1.0) return std::numeric_limits<double>::infinity();
  const BetaQuantile bq = special::ibeta_inv(t, g.p, g.q);
  return g.b * std::exp((std::log(bq.x) - std::log(bq.y)) / g.a);
}

double lorenz_value(const Gb2Params& g, double t) {
  require_mean(g);
  if (!(t >= 0.0 && t <= 1.0)) fail(ErrorCode::DomainError, "Lorenz curve outside [0,1]");
  return curve_value(g, t);
}

double lorenz_derivative(const Gb2Params& g, double t) {
  require_mean(g);
  require_open_unit(t, "Lorenz derivative");
  return quantile(g, t) / mean(g);
}

double lorenz_second_derivative(const Gb2Params& g, double t) {
  require_mean(g);
  require_open_unit(t, "Lorenz second derivative");
  const BetaQuantile bq = special::ibeta_inv(t, g.p, g.q);
  return std::exp(-std::log(mean(g)) - log_density_at(g, bq));
}

LorenzCurve lorenz_curve(const Gb2Params& g, const Gb2LorenzOptions& options) {
  require_mean(g);
  if (options.initial_nodes < 8 || options.max_nodes < options.initial_nodes) {
    fail(ErrorCode::DomainError, "invalid Lorenz grid options");
  }
  int n = options.initial_nodes;
  std::vector<double> nodes = grid_nodes(n);
  std::vector<double> values(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) values[i] = curve_value(g, nodes[i]);
  LorenzCurve curve = curve_on(nodes, values);
  double previous = gini(curve);

  while (2 * n <= options.max_nodes) {
    // Chebyshev nodes of the doubled grid contain the current ones at even
    // indices; only the odd ones need new evaluations.
    const int n2 = 2 * n;
    std::vector<double> next_nodes = grid_nodes(n2);
    std::vector<double> next_values(next_nodes.size());
    for (int i = 0; i < n2; ++i) {
      next_values[i] = i % 2 == 0 ? values[i / 2] : curve_value(g, next_nodes[i]);
    }
    for (std::size_t i = n2; i < next_nodes.size(); ++i) {
      next_values[i] = curve_value(g, next_nodes[i]);
    }
    LorenzCurve refined = curve_on(next_nodes, next_values);
    const double current = gini(refined);
    curve = std::move(refined);
    nodes = std::move(next_nodes);
    values = std::move(next_values);
    n = n2;
    const bool settled = std::abs(current - previous) < options.gini_tolerance;
    previous = current;
    if (settled) break;
  }
  return curve;
}

WeightedSample sample(const Gb2Params& g, std::size_t n, std::uint64_t seed) {
  if (n == 0) fail(ErrorCode::EmptySample, "sample size must be at least 1");
  Rng rng = make_rng(seed);
  std::gamma_distribution<double> g1(g.p, 1.0);
  std::gamma_distribution<double> g2(g.q, 1.0);
  std::vector<double> values(n);
  // With tiny shape parameters a gamma draw can underflow to zero. A zero
  // numerator is a legitimate zero income; a zero denominator is redrawn.
  for (std::size_t i = 0; i < n; ++i) {
    double v1 = g1(rng);
    double v2 = g2(rng);
    while (!(v2 > 0.0)) v2 = g2(rng);
    values[i] = v1 > 0.0 ? g.b * std::exp((std::log(v1) - std::log(v2)) / g.a) : 0.0;
  }
  return WeightedSample(std::move(values));
}

ModelPreset model_preset(int k) {
  auto target = [](double g1, double g2, double d) {
    return RawIndex{g1, g2, d, g2 - g1};
  };
  switch (k) {
    case 1:
      return {1, {1.45, 1.01, 0.75, 1.45}, {10.0, 4.86, 0.035, 7.0},
              target(0.5886, 0.5923, 0.0858)};
    case 2:
      return {2, {1.0, 1.375, 0.8, 2.1}, {2.6, 0.469, 3.0, 1.0},
              target(0.6828, 0.3318, 0.3510)};
    case 3:
      return {3, {4.0, 0.7, 0.8, 0.6}, {3.0, 1.38, 0.5, 1.3}, target(0.3547, 0.3723, 0.0414)};
    case 4:
      return {4, {2.0, 0.072, 5.0, 0.6}, {2.0, 13.18, 0.1, 5.0},
              target(0.7546, 0.7553, 0.1369)};
    case 5: {
      const Gb2Params g{2.0, 4.0 / std::numbers::pi, 1.0, 2.0};
      // Gini of this Singh-Maddala law is 1 - G(2)G(3.5)/(G(1.5)G(4)) = 3/8.
      return {5, g, g, target(0.375, 0.375, 0.0)};
    }
    default:
      fail(ErrorCode::BadModel, "model preset must be 1..5, got " + std::to_string(k));
  }
}

}  // namespace lorenz
