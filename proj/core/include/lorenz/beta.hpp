#pragma once

namespace lorenz::special {

// log B(p, q).
double log_beta(double p, double q);

// Regularized incomplete beta I_x(p, q) together with its complement, each
// computed directly where it is small so both keep full relative accuracy.
struct BetaTail {
  double lower = 0.0;  // I_x(p, q)
  double upper = 0.0;  // 1 - I_x(p, q)
};

// x and y = 1 - x are passed separately so callers holding an accurate 1 - x
// (for x near 1) do not lose it.
BetaTail ibeta_tails(double x, double y, double p, double q);
BetaTail ibeta_tails(double x, double p, double q);

double ibeta(double x, double p, double q);

// Inverse of t -> I_x(p, q). Returns both x and 1 - x.
struct BetaQuantile {
  double x = 0.0;
  double y = 1.0;  // 1 - x
};

BetaQuantile ibeta_inv(double t, double p, double q);

// log of the beta(p, q) density at x, with y = 1 - x.
double log_beta_density(double x, double y, double p, double q);

}  // namespace lorenz::special
