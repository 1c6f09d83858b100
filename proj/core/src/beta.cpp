#include "lorenz/beta.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "lorenz/error.hpp"

namespace lorenz::special {

namespace {

constexpr int kMaxIterations = 20000;
constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;

void check_shapes(double p, double q) {
  if (!(p > 0.0 && q > 0.0) || !std::isfinite(p) || !std::isfinite(q)) {
    fail(ErrorCode::BadParams, "beta shapes must be positive, got p = " + std::to_string(p) +
                                   ", q = " + std::to_string(q));
  }
}

// Modified Lentz evaluation of the continued fraction for I_x(p, q).
double continued_fraction(double x, double p, double q) {
  const double qab = p + q;
  const double qap = p + 1.0;
  const double qam = p - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (q - m) * x / ((qam + m2) * (p + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(p + m) * (qab + m) * x / ((p + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  fail(ErrorCode::DomainError, "incomplete beta continued fraction did not converge");
}

// log I_x(p, q) through the continued fraction; used for x <= p / (p + q).
double log_lower(double x, double y, double p, double q, double lbeta) {
  return p * std::log(x) + q * std::log(y) - lbeta - std::log(p) +
         std::log(continued_fraction(x, p, q));
}

// Solves log I_x(p, q) = lt for x in (0, xmax] with xmax <= p / (p + q).
BetaQuantile solve_lower(double lt, double p, double q, double xmax) {
  const double lbeta = log_beta(p, q);
  auto F = [&](double u) {
    const double x = std::exp(u);
    if (x <= 0.0) return -std::numeric_limits<double>::infinity();
    return log_lower(x, -std::expm1(u), p, q, lbeta) - lt;
  };
  double hi = std::log(xmax);
  double u = std::min(hi, (lt + std::log(p) + lbeta) / p);
  double lo = u;
  double step = 1.0;
  double f_lo = F(lo);
  while (f_lo > 0.0) {
    hi = lo;
    lo -= step;
    step *= 2.0;
    f_lo = F(lo);
    if (lo < -746.0) return {0.0, 1.0};
  }
  u = std::clamp(u, lo, hi);
  for (int it = 0; it < 200; ++it) {
    const double f = F(u);
    if (f == 0.0) break;
    if (f > 0.0) {
      hi = u;
    } else {
      lo = u;
    }
    const double x = std::exp(u);
    const double y = -std::expm1(u);
    // d/du log I = x * density(x) / I.
    const double slope = std::exp(u + log_beta_density(x, y, p, q) - (f + lt));
    double next = u - f / slope;
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    const bool done = std::abs(next - u) <= 1e-15 * std::max(1.0, std::abs(u));
    u = next;
    if (done || hi - lo <= 1e-15 * std::max(1.0, std::abs(u))) break;
  }
  return {std::exp(u), -std::expm1(u)};
}

}  // namespace

double log_beta(double p, double q) {
  return std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q);
}

double log_beta_density(double x, double y, double p, double q) {
  return (p - 1.0) * std::log(x) + (q - 1.0) * std::log(y) - log_beta(p, q);
}

BetaTail ibeta_tails(double x, double y, double p, double q) {
  check_shapes(p, q);
  if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0)) {
    fail(ErrorCode::DomainError, "incomplete beta argument outside [0,1]: x = " +
                                     std::to_string(x));
  }
  if (x == 0.0) return {0.0, 1.0};
  if (y == 0.0) return {1.0, 0.0};
  if (x <= p / (p + q)) {
    const double lower = std::exp(log_lower(x, y, p, q, log_beta(p, q)));
    return {lower, 1.0 - lower};
  }
  const double upper = std::exp(log_lower(y, x, q, p, log_beta(q, p)));
  return {1.0 - upper, upper};
}

BetaTail ibeta_tails(double x, double p, double q) { return ibeta_tails(x, 1.0 - x, p, q); }

double ibeta(double x, double p, double q) { return ibeta_tails(x, p, q).lower; }

BetaQuantile ibeta_inv(double t, double p, double q) {
  check_shapes(p, q);
  if (!(t >= 0.0 && t <= 1.0)) {
    fail(ErrorCode::DomainError, "beta quantile level outside [0,1]: " + std::to_string(t));
  }
  if (t == 0.0) return {0.0, 1.0};
  if (t == 1.0) return {1.0, 0.0};
  const double xm = p / (p + q);
  const double ym = q / (p + q);
  const BetaTail at_split = ibeta_tails(xm, ym, p, q);
  if (t <= at_split.lower) return solve_lower(std::log(t), p, q, xm);
  const BetaQuantile r = solve_lower(std::log1p(-t), q, p, ym);
  return {r.y, r.x};
}

}  // namespace lorenz::special
