#pragma once

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "lorenz/lorenz.hpp"

namespace lorenz::testing {

// Runs f and returns the code of the lorenz::Error it throws. Fails the
// current test when nothing is thrown.
template <class F>
ErrorCode error_code_of(F&& f) {
  try {
    std::invoke(std::forward<F>(f));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a lorenz::Error";
  return ErrorCode::DomainError;
}

// Random convex curve with up to max_segments pieces and a random jump at 1
// (a jump happens with probability about one half).
inline LorenzCurve random_curve(std::mt19937_64& rng, int max_segments = 8) {
  std::uniform_int_distribution<int> count(1, max_segments);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int k = count(rng);
  std::vector<double> cuts{0.0, 1.0};
  for (int i = 1; i < k; ++i) cuts.push_back(u(rng));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<double> slopes;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) slopes.push_back(u(rng) * u(rng) * 4.0);
  std::sort(slopes.begin(), slopes.end());
  std::vector<Knot> knots{{0.0, 0.0}};
  double y = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    y += slopes[i] * (cuts[i + 1] - cuts[i]);
    knots.push_back({cuts[i + 1], y});
  }
  if (y <= 0.0) return perfect_inequality();
  // Scale so the left limit at 1 is either 1 or something smaller.
  const double end = u(rng) < 0.5 ? 1.0 : 0.2 + 0.8 * u(rng);
  for (Knot& kn : knots) kn.y = std::min(kn.y * end / y, 1.0);
  knots.back().y = end;
  return make_curve(std::move(knots));
}

// Random extreme curve of a random family.
inline ExtremeSpec random_extreme_spec(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double a = 0.02 + 0.96 * u(rng);
  const int fam = static_cast<int>(u(rng) * 3.0);
  if (fam == 0) return {Family::L, a, a * u(rng), 0.0};
  const double x2 = a + (1.0 - a) * (0.01 + 0.98 * u(rng));
  if (fam == 1) return {Family::M, a, 0.0, x2};
  return {Family::N, a, a * (0.01 + 0.98 * u(rng)), x2};
}

// Convex mixture of two random extreme and one random generic curve.
inline LorenzCurve random_mixture(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const LorenzCurve e1 = extreme_curve(random_extreme_spec(rng));
  const LorenzCurve e2 = extreme_curve(random_extreme_spec(rng));
  const LorenzCurve mix = blend(e1, e2, u(rng));
  return u(rng) < 0.3 ? blend(mix, random_curve(rng), u(rng)) : mix;
}

// Oracle that evaluates a piecewise-linear curve by its own walk, independent
// of the library's binary search.
class Walker {
 public:
  explicit Walker(const LorenzCurve& c) : k_(c.knots().begin(), c.knots().end()) {}

  // Calls must use non-decreasing t in [0, 1).
  double operator()(double t) {
    while (i_ + 2 < k_.size() && k_[i_ + 1].t <= t) ++i_;
    const Knot& a = k_[i_];
    const Knot& b = k_[i_ + 1];
    return a.y + (b.y - a.y) * (t - a.t) / (b.t - a.t);
  }

 private:
  std::vector<Knot> k_;
  std::size_t i_ = 0;
};

// Midpoint-rule value of 2 int |c1 - c2| on n cells.
inline double riemann_distance(const LorenzCurve& c1, const LorenzCurve& c2, int n) {
  Walker w1(c1);
  Walker w2(c2);
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = (i + 0.5) / n;
    s += std::abs(w1(t) - w2(t));
  }
  return 2.0 * s / n;
}

}  // namespace lorenz::testing
