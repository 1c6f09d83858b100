#include "lorenz/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "lorenz/error.hpp"

namespace lorenz {

namespace {

bool is_unit(double v) { return v >= 0.0 && v <= 1.0; }

void require_gini(double a, const char* name) {
  if (!is_unit(a)) {
    fail(ErrorCode::DomainError,
         std::string(name) + " must lie in [0,1], got " + std::to_string(a));
  }
}

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

struct Candidate {
  ExtremeSpec spec;
  LorenzCurve curve;
};

std::vector<Candidate> candidates(double a, const BruteForceOptions& o) {
  std::vector<Candidate> out;
  const int g = o.grid;
  if (a == 0.0) {
    out.push_back({{Family::L, 0.0, 0.0, 0.0}, perfect_equality()});
    return out;
  }
  if (a == 1.0) {
    out.push_back({{Family::L, 1.0, 1.0, 0.0}, perfect_inequality()});
    return out;
  }
  for (int i = 0; i < g; ++i) {
    ExtremeSpec s{Family::L, a, i + 1 == g ? a : a * i / (g - 1), 0.0};
    out.push_back({s, extreme_curve(s)});
  }
  for (int i = 0; i < g; ++i) {
    ExtremeSpec s{Family::M, a, 0.0, a + (1.0 - a) * (i + 1) / (g + 1)};
    out.push_back({s, extreme_curve(s)});
  }
  if (o.include_n_family) {
    const int ng = o.n_family_grid > 0 ? o.n_family_grid : std::min(g, 40);
    for (int i = 0; i < ng; ++i) {
      for (int j = 0; j < ng; ++j) {
        ExtremeSpec s{Family::N, a, a * (i + 1) / (ng + 1), a + (1.0 - a) * (j + 1) / (ng + 1)};
        out.push_back({s, extreme_curve(s)});
      }
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::L: return "L";
    case Family::M: return "M";
    case Family::N: return "N";
  }
  return "?";
}

std::string describe(const ExtremeSpec& s) {
  std::ostringstream os;
  os.precision(12);
  os << to_string(s.family) << "(a=" << s.a;
  if (s.family != Family::M) os << ", x1=" << s.x1;
  if (s.family != Family::L) os << ", x2=" << s.x2;
  os << ")";
  return os.str();
}

void validate(const ExtremeSpec& s) {
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::BadParams, describe(s) + ": " + why);
  };
  if (!is_unit(s.a)) bad("a must lie in [0,1]");
  switch (s.family) {
    case Family::L:
      if (s.a == 1.0) {
        if (!is_unit(s.x1)) bad("x1 must lie in [0,1]");
      } else if (!(s.x1 >= 0.0 && s.x1 <= s.a)) {
        bad("x1 must lie in [0,a]");
      }
      break;
    case Family::M:
      if (!(s.x2 > s.a && s.x2 < 1.0)) bad("x2 must lie in (a,1)");
      break;
    case Family::N:
      if (!(s.x1 > 0.0 && s.x1 < s.a)) bad("x1 must lie in (0,a)");
      if (!(s.x2 > s.a && s.x2 < 1.0)) bad("x2 must lie in (a,1)");
      break;
  }
}

LorenzCurve extreme_curve(const ExtremeSpec& s) {
  validate(s);
  const double a = s.a;
  std::vector<Knot> knots{{0.0, 0.0}};
  switch (s.family) {
    case Family::L:
      if (s.x1 == 1.0) {
        knots.push_back({1.0, 0.0});
        break;
      }
      if (s.x1 > 0.0) knots.push_back({s.x1, 0.0});
      knots.push_back({1.0, std::min(1.0, (1.0 - a) / (1.0 - s.x1))});
      break;
    case Family::M:
      knots.push_back({s.x2, s.x2 - a});
      knots.push_back({1.0, 1.0});
      break;
    case Family::N:
      knots.push_back({s.x1, 0.0});
      knots.push_back({s.x2, (s.x2 - a) / (1.0 - s.x1)});
      knots.push_back({1.0, 1.0});
      break;
  }
  return LorenzCurve(canonicalize(knots));
}

LorenzCurve lorenz_minus(double a) {
  require_gini(a, "a");
  return extreme_curve({Family::L, a, a, 0.0});
}

LorenzCurve lorenz_plus(double a) {
  require_gini(a, "a");
  return extreme_curve({Family::L, a, 0.0, 0.0});
}

double max_distance(double a, double b) {
  require_gini(a, "a");
  require_gini(b, "b");
  const double den = (a + b) - a * b;
  if (den == 0.0) return 0.0;
  return ((1.0 - a) * b * b + (1.0 - b) * a * a) / den;
}

SuperMax super_max(double c) {
  if (!(std::abs(c) <= 1.0)) {
    fail(ErrorCode::DomainError, "c must lie in [-1,1], got " + std::to_string(c));
  }
  const double root = std::sqrt(8.0 + c * c);
  SuperMax r;
  r.a_c = std::max(0.0, (4.0 - std::abs(c) - root) / 2.0);
  r.value = 8.0 - (8.0 + std::pow(c * c + 8.0, 1.5)) / (c * c + 4.0);
  r.gini1 = clamp_unit((4.0 - c - root) / 2.0);
  r.gini2 = clamp_unit(r.gini1 + c);
  return r;
}

double diameter_equal_gini(double a) {
  require_gini(a, "a");
  return 2.0 * a * (1.0 - a) / (2.0 - a);
}

double crossing_point(double a, double b) {
  require_gini(a, "a");
  require_gini(b, "b");
  const double den = (a + b) - a * b;
  if (den <= 0.0) fail(ErrorCode::Degenerate, "crossing point undefined for a = b = 0");
  return a / den;
}

BruteForceResult brute_force_max(double a, double b, const BruteForceOptions& options) {
  require_gini(a, "a");
  require_gini(b, "b");
  if (options.grid < 2) fail(ErrorCode::DomainError, "grid must be at least 2");
  const auto first = candidates(a, options);
  const auto second = candidates(b, options);

  // Strict improvement with a small slack keeps the lexicographically first
  // maximizer when several pairs tie up to rounding.
  constexpr double kSlack = 1e-14;
  BruteForceResult best;
  best.value = -1.0;
  for (const Candidate& c1 : first) {
    for (const Candidate& c2 : second) {
      const double d = lorenz_distance(c1.curve, c2.curve);
      if (d > best.value + kSlack) {
        best.value = d;
        best.first = c1.spec;
        best.second = c2.spec;
      }
    }
  }
  best.pairs_evaluated = first.size() * second.size();
  return best;
}

BruteForceResult brute_force_max(double a, double b, int grid) {
  BruteForceOptions o;
  o.grid = grid;
  return brute_force_max(a, b, o);
}

bool in_region_delta(double x, double y) {
  constexpr double tol = kRegionTolerance;
  if (!(x >= -1.0 - tol && x <= 1.0 + tol && y >= -tol && y <= 1.0 + tol)) return false;
  const double ax = std::min(1.0, std::abs(x));
  return y >= ax - tol && y <= super_max(ax).value + tol;
}

bool in_region_delta_star(double x, double y, double z) {
  constexpr double tol = kRegionTolerance;
  if (!(x >= -tol && x <= 1.0 + tol && y >= -tol && y <= 1.0 + tol)) return false;
  const double cx = clamp_unit(x);
  const double cy = clamp_unit(y);
  return z >= std::abs(cx - cy) - tol && z <= max_distance(cx, cy) + tol;
}

}  // namespace lorenz
