#pragma once

#include <cstdint>
#include <string_view>

#include "lorenz/curve.hpp"
#include "lorenz/empirical.hpp"
#include "lorenz/indices.hpp"

namespace lorenz {

// Generalized beta distribution of the second kind: shape a, scale b, shapes
// p and q. Density a x^{ap-1} / (b^{ap} B(p,q) (1 + (x/b)^a)^{p+q}).
struct Gb2Params {
  double a = 1.0;
  double b = 1.0;
  double p = 1.0;
  double q = 1.0;

  friend bool operator==(const Gb2Params&, const Gb2Params&) = default;
};

// Throws BadParams unless all four parameters are positive and finite.
Gb2Params make_gb2(double a, double b, double p, double q);

enum class Integrability {
  OK,             // aq > 2: the limit theory applies
  MeanOnly,       // 1 < aq <= 2
  NotIntegrable,  // aq <= 1: no finite mean
};

std::string_view to_string(Integrability i) noexcept;
Integrability integrability_check(const Gb2Params& g);

// E X = b B(p + 1/a, q - 1/a) / B(p, q). Throws NotIntegrable for aq <= 1.
double mean(const Gb2Params& g);

// Scale b that gives mean 1 for the given shapes.
Gb2Params normalize_scale(double a, double p, double q);

double density(const Gb2Params& g, double x);
double cdf(const Gb2Params& g, double x);
double quantile(const Gb2Params& g, double t);

// Pointwise Lorenz curve and its first two derivatives. Values are pinned to
// 0 and 1 at the endpoints; the derivatives require 0 < t < 1.
double lorenz_value(const Gb2Params& g, double t);
double lorenz_derivative(const Gb2Params& g, double t);
double lorenz_second_derivative(const Gb2Params& g, double t);

struct Gb2LorenzOptions {
  int initial_nodes = 2048;
  int max_nodes = 1 << 18;
  double gini_tolerance = 1e-6;
};

// Closed-form Lorenz curve sampled on a Chebyshev grid with extra nodes
// towards t = 1, refined by doubling until the Gini settles.
LorenzCurve lorenz_curve(const Gb2Params& g, const Gb2LorenzOptions& options = {});

// X = b (G1/G2)^{1/a} with G1 ~ Gamma(p), G2 ~ Gamma(q). Unit weights.
WeightedSample sample(const Gb2Params& g, std::size_t n, std::uint64_t seed);

struct ModelPreset {
  int id = 0;
  Gb2Params first;
  Gb2Params second;
  // Reference values to the printed precision.
  RawIndex target;
};

// Presets 1 to 5; throws BadModel otherwise.
ModelPreset model_preset(int k);

}  // namespace lorenz
