#include "lorenz/curve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "curve_sweep.hpp"
#include "lorenz/error.hpp"

namespace lorenz {

namespace {

constexpr double kRangeSlack = 1e-12;

std::string knot_str(std::size_t i, const Knot& k) {
  std::ostringstream os;
  os.precision(17);
  os << "knot " << i << " = (" << k.t << ", " << k.y << ")";
  return os.str();
}

void check_shape(const std::vector<Knot>& knots) {
  if (knots.size() < 2) {
    fail(ErrorCode::BadEndpoints, "a curve needs at least the knots (0,0) and (1,y)");
  }
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const Knot& k = knots[i];
    if (!std::isfinite(k.t) || !std::isfinite(k.y)) {
      fail(ErrorCode::OutOfRange, knot_str(i, k) + " is not finite");
    }
  }
  if (knots.front().t != 0.0 || knots.front().y != 0.0) {
    fail(ErrorCode::BadEndpoints, "first knot must be (0,0), got " + knot_str(0, knots.front()));
  }
  if (knots.back().t != 1.0) {
    fail(ErrorCode::BadEndpoints,
         "last knot must have t = 1, got " + knot_str(knots.size() - 1, knots.back()));
  }
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const Knot& k = knots[i];
    if (k.t < 0.0 || k.t > 1.0 || k.y < 0.0 || k.y > 1.0 + kRangeSlack) {
      fail(ErrorCode::OutOfRange, knot_str(i, k) + " lies outside [0,1]x[0,1]");
    }
    if (i > 0 && !(k.t > knots[i - 1].t)) {
      fail(ErrorCode::NotMonotone, "t must be strictly increasing at " + knot_str(i, k));
    }
  }
}

void check_values(const std::vector<Knot>& knots) {
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (knots[i].y < knots[i - 1].y) {
      fail(ErrorCode::NotMonotone, "y decreases at " + knot_str(i, knots[i]));
    }
  }
  double prev_slope = 0.0;
  for (std::size_t i = 1; i < knots.size(); ++i) {
    const double slope =
        (knots[i].y - knots[i - 1].y) / (knots[i].t - knots[i - 1].t);
    if (i > 1) {
      const double scale = std::max(std::abs(prev_slope), std::abs(slope));
      if (slope < prev_slope - kConvexityTolerance * scale) {
        std::ostringstream os;
        os.precision(17);
        os << "slope drops from " << prev_slope << " to " << slope << " at "
           << knot_str(i - 1, knots[i - 1]);
        fail(ErrorCode::NonConvex, os.str());
      }
    }
    prev_slope = slope;
  }
}

}  // namespace

LorenzCurve::LorenzCurve(std::vector<Knot> knots) : knots_(std::move(knots)) {
  check_shape(knots_);
  check_values(knots_);
}

LorenzCurve::LorenzCurve(std::vector<Knot> knots, Trusted) : knots_(std::move(knots)) {
  check_shape(knots_);
}

LorenzCurve LorenzCurve::from_convex_knots(std::vector<Knot> knots) {
  return LorenzCurve(std::move(knots), Trusted{});
}

double LorenzCurve::operator()(double t) const { return eval(*this, t); }

LorenzCurve make_curve(std::vector<Knot> knots) { return LorenzCurve(std::move(knots)); }

LorenzCurve perfect_equality() { return LorenzCurve({{0.0, 0.0}, {1.0, 1.0}}); }

LorenzCurve perfect_inequality() { return LorenzCurve({{0.0, 0.0}, {1.0, 0.0}}); }

double eval(const LorenzCurve& c, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    fail(ErrorCode::DomainError, "eval outside [0,1]: t = " + std::to_string(t));
  }
  if (t == 1.0) return 1.0;
  const auto k = c.knots();
  auto it = std::upper_bound(k.begin(), k.end(), t,
                             [](double v, const Knot& knot) { return v < knot.t; });
  const std::size_t hi = static_cast<std::size_t>(it - k.begin());
  return detail::interpolate(k[hi - 1], k[hi], t);
}

double l1_norm(const LorenzCurve& c) {
  const auto k = c.knots();
  double sum = 0.0;
  for (std::size_t i = 1; i < k.size(); ++i) {
    sum += (k[i].t - k[i - 1].t) * (k[i].y + k[i - 1].y);
  }
  return 0.5 * sum;
}

double gini(const LorenzCurve& c) { return 1.0 - 2.0 * l1_norm(c); }

double lorenz_distance(const LorenzCurve& c1, const LorenzCurve& c2) {
  double sum = 0.0;
  detail::sweep(c1.knots(), c2.knots(),
                [&](double t0, double t1, double a1, double a2, double b1, double b2) {
                  sum += detail::abs_linear_integral(t1 - t0, a1 - a2, b1 - b2);
                });
  return 2.0 * sum;
}

double sup_distance(const LorenzCurve& c1, const LorenzCurve& c2) {
  double best = 0.0;
  detail::sweep(c1.knots(), c2.knots(),
                [&](double, double, double, double, double b1, double b2) {
                  best = std::max(best, std::abs(b1 - b2));
                });
  return best;
}

std::string_view to_string(Dominance d) noexcept {
  switch (d) {
    case Dominance::LorenzLE: return "LorenzLE";
    case Dominance::LorenzGE: return "LorenzGE";
    case Dominance::Crossing: return "Crossing";
    case Dominance::Equal: return "Equal";
  }
  return "Unknown";
}

Dominance dominates(const LorenzCurve& c1, const LorenzCurve& c2, double tol) {
  if (!(tol >= 0.0)) fail(ErrorCode::DomainError, "dominance tolerance must be >= 0");
  double lo = 0.0;
  double hi = 0.0;
  detail::sweep(c1.knots(), c2.knots(),
                [&](double, double, double, double, double b1, double b2) {
                  const double d = b1 - b2;
                  lo = std::min(lo, d);
                  hi = std::max(hi, d);
                });
  if (hi <= tol && lo >= -tol) return Dominance::Equal;
  if (lo >= -tol) return Dominance::LorenzLE;
  if (hi <= tol) return Dominance::LorenzGE;
  return Dominance::Crossing;
}

std::vector<Knot> canonicalize(std::span<const Knot> knots) {
  std::vector<Knot> out;
  out.reserve(knots.size());
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const bool interior = i > 0 && i + 1 < knots.size();
    if (interior) {
      const Knot& prev = out.back();
      const Knot& cur = knots[i];
      const Knot& next = knots[i + 1];
      const double s_left = (cur.y - prev.y) / (cur.t - prev.t);
      const double s_right = (next.y - cur.y) / (next.t - cur.t);
      const double scale = std::max(std::abs(s_left), std::abs(s_right));
      if (std::abs(s_right - s_left) <= kConvexityTolerance * scale) continue;
    }
    out.push_back(knots[i]);
  }
  return out;
}

LorenzCurve tilde(const LorenzCurve& c) {
  // Reflect the completed graph (knots plus the point (1,1), which closes the
  // jump at 1 with a vertical piece) through the line y = 1 - x.
  std::vector<Knot> graph(c.knots().begin(), c.knots().end());
  if (graph.back().y < 1.0) graph.push_back({1.0, 1.0});

  std::vector<Knot> reflected;
  reflected.reserve(graph.size());
  for (auto it = graph.rbegin(); it != graph.rend(); ++it) {
    const Knot k{1.0 - it->y, 1.0 - it->t};
    if (!reflected.empty() && reflected.back() == k) continue;
    reflected.push_back(k);
  }

  // A flat start of c turns into a vertical piece at x = 1; only its lower end
  // is a knot, the upper end is the implied terminal value.
  std::vector<Knot> knots;
  knots.reserve(reflected.size());
  for (const Knot& k : reflected) {
    knots.push_back(k);
    if (k.t >= 1.0) break;
  }
  return LorenzCurve(canonicalize(knots));
}

double cumulative_integral(const LorenzCurve& c, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    fail(ErrorCode::DomainError,
         "cumulative_integral outside [0,1]: t = " + std::to_string(t));
  }
  const auto k = c.knots();
  double sum = 0.0;
  for (std::size_t i = 1; i < k.size(); ++i) {
    if (k[i].t <= t) {
      sum += (k[i].t - k[i - 1].t) * (k[i].y + k[i - 1].y);
      continue;
    }
    if (k[i - 1].t < t) {
      const double yt = detail::interpolate(k[i - 1], k[i], t);
      sum += (t - k[i - 1].t) * (yt + k[i - 1].y);
    }
    break;
  }
  return 0.5 * sum;
}

LorenzCurve blend(const LorenzCurve& c1, const LorenzCurve& c2, double w) {
  if (!(w >= 0.0 && w <= 1.0)) fail(ErrorCode::DomainError, "blend weight must lie in [0,1]");
  // Breakpoints closer than this are merged so that near-coincident knots of
  // the two inputs do not produce slivers with meaningless slopes.
  constexpr double kMinGap = 1e-12;
  std::vector<Knot> knots{{0.0, 0.0}};
  detail::sweep(c1.knots(), c2.knots(),
                [&](double, double t1, double, double, double b1, double b2) {
                  const double y = std::min(1.0, (1.0 - w) * b1 + w * b2);
                  if (t1 < 1.0 && t1 - knots.back().t < kMinGap) return;
                  if (t1 == 1.0 && knots.size() > 1 && t1 - knots.back().t < kMinGap) {
                    knots.back() = {t1, y};
                    return;
                  }
                  knots.push_back({t1, y});
                });
  return LorenzCurve(canonicalize(knots));
}

}  // namespace lorenz
