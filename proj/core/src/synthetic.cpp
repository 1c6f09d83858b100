#include "lorenz/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "lorenz/error.hpp"
#include "lorenz/random.hpp"

namespace lorenz {

namespace {

const std::array<SurveySummary, 12> kSpain{{
    {"ES-2008", 16414.18, 12987, 0.329},
    {"ES-2009", 17382.66, 13310, 0.329},
    {"ES-2010", 17167.77, 13544, 0.331},
    {"ES-2011", 16436.31, 13052, 0.337},
    {"ES-2012", 16398.07, 12661, 0.338},
    {"ES-2013", 15992.40, 12091, 0.334},
    {"ES-2014", 15696.13, 11912, 0.341},
    {"ES-2015", 15752.62, 12332, 0.340},
    {"ES-2016", 16078.59, 14212, 0.343},
    {"ES-2017", 16570.21, 13716, 0.341},
    {"ES-2018", 17006.14, 13344, 0.332},
    {"ES-2019", 17419.96, 15861, 0.329},
}};

}  // namespace

std::span<const SurveySummary> spain_summaries() { return kSpain; }

double singh_maddala_gini(double a, double q) {
  if (!(a > 0.0 && q > 0.0 && a * q > 1.0)) {
    fail(ErrorCode::NotIntegrable, "Singh-Maddala Gini needs a*q > 1");
  }
  return 1.0 - std::exp(std::lgamma(q) + std::lgamma(2.0 * q - 1.0 / a) -
                        std::lgamma(q - 1.0 / a) - std::lgamma(2.0 * q));
}

Gb2Params calibrate_gb2(double mean_income, double target_gini, double q) {
  if (!(mean_income > 0.0)) fail(ErrorCode::DomainError, "target mean must be positive");
  if (!(target_gini > 0.0 && target_gini < 1.0)) {
    fail(ErrorCode::DomainError, "target Gini must lie in (0,1)");
  }
  if (!(q > 0.0)) fail(ErrorCode::DomainError, "q must be positive");
  // The Gini decreases in a; keep a*q > 2 so the limit theory applies.
  double lo = 2.0 / q * (1.0 + 1e-9);
  double hi = 200.0;
  if (!(singh_maddala_gini(lo, q) > target_gini && singh_maddala_gini(hi, q) < target_gini)) {
    fail(ErrorCode::DomainError, "target Gini " + std::to_string(target_gini) +
                                     " is out of reach with q = " + std::to_string(q));
  }
  for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (singh_maddala_gini(mid, q) > target_gini) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double a = 0.5 * (lo + hi);
  Gb2Params g = make_gb2(a, 1.0, 1.0, q);
  g.b = mean_income / mean(g);
  return g;
}

Dataset synthesize(const SurveySummary& s, std::uint64_t seed, double q) {
  if (s.n == 0) fail(ErrorCode::EmptySample, "summary " + s.label + " has n = 0");
  const Gb2Params g = calibrate_gb2(s.mean, s.gini, q);
  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> weight(0.8, 1.2);
  std::vector<double> values(s.n);
  const double n = static_cast<double>(s.n);
  for (std::size_t i = 0; i < s.n; ++i) {
    double u = (static_cast<double>(i) + unit(rng)) / n;
    u = std::clamp(u, 1e-12, 1.0 - 1e-12);
    values[i] = quantile(g, u);
  }
  std::shuffle(values.begin(), values.end(), rng);
  std::vector<double> weights(s.n);
  for (double& w : weights) w = weight(rng);
  return Dataset{s.label, WeightedSample(std::move(values), std::move(weights)), "", 0, 0};
}

std::vector<std::filesystem::path> write_synthetic_set(std::span<const SurveySummary> rows,
                                                       const std::filesystem::path& dir,
                                                       std::uint64_t seed) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> paths;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Dataset d = synthesize(rows[i], split_seed(seed, i));
    const std::filesystem::path p = dir / (rows[i].label + ".csv");
    write_csv(d, p);
    paths.push_back(p);
  }
  return paths;
}

}  // namespace lorenz
