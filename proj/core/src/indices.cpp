#include "lorenz/indices.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lorenz/error.hpp"
#include "lorenz/extremal.hpp"

namespace lorenz {

namespace {

// Denominators at or below this are treated as the degenerate stretch.
constexpr double kDegenerate = 1e-15;

std::string point_str(double x, double y) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << x << ", " << y << ")";
  return os.str();
}

double super_max_extended(double x) {
  const double c2 = x * x;
  return 8.0 - (8.0 + std::pow(c2 + 8.0, 1.5)) / (c2 + 4.0);
}

double max_distance_extended(double a, double b) {
  const double den = (a + b) - a * b;
  if (den == 0.0) return 0.0;
  return ((1.0 - a) * b * b + (1.0 - b) * a * a) / den;
}

Point2 stretch(double x, double y, double lower, double upper, bool clamp) {
  const double den = upper - lower;
  if (den <= kDegenerate) return {x, lower};
  double ratio = (y - lower) / den;
  if (clamp) ratio = std::clamp(ratio, 0.0, 1.0);
  return {x, lower + (1.0 - lower) * ratio};
}

}  // namespace

std::string_view to_string(Variant v) noexcept {
  return v == Variant::Star ? "Star" : "UpperStar";
}

std::string_view to_string(FrontierClass c) noexcept {
  switch (c) {
    case FrontierClass::Interior: return "Interior";
    case FrontierClass::Leg1: return "Leg1";
    case FrontierClass::Leg2: return "Leg2";
    case FrontierClass::Hypotenuse: return "Hypotenuse";
    case FrontierClass::Origin: return "Origin";
    case FrontierClass::VertexPos: return "VertexPos";
    case FrontierClass::VertexNeg: return "VertexNeg";
  }
  return "Interior";
}

FrontierClass frontier_class_from_string(std::string_view s) {
  for (FrontierClass c : {FrontierClass::Interior, FrontierClass::Leg1, FrontierClass::Leg2,
                          FrontierClass::Hypotenuse, FrontierClass::Origin,
                          FrontierClass::VertexPos, FrontierClass::VertexNeg}) {
    if (to_string(c) == s) return c;
  }
  fail(ErrorCode::ParseError, "unknown frontier class '" + std::string(s) + "'");
}

RawIndex index_raw(const LorenzCurve& c1, const LorenzCurve& c2) {
  RawIndex r;
  r.gini1 = gini(c1);
  r.gini2 = gini(c2);
  r.distance = lorenz_distance(c1, c2);
  r.delta_x = r.gini2 - r.gini1;
  return r;
}

Point2 map_t_star(double x, double y) {
  if (!in_region_delta(x, y)) {
    fail(ErrorCode::OutsideRegion, point_str(x, y) + " is outside the region |x| <= y <= M*(x)");
  }
  const double ax = std::min(1.0, std::abs(x));
  return stretch(x, y, ax, super_max(ax).value, true);
}

Point2 map_t_star_extended(double x, double y) {
  return stretch(x, y, std::abs(x), super_max_extended(x), false);
}

Point2 map_t_upper(double gini1, double gini2, double distance) {
  if (!in_region_delta_star(gini1, gini2, distance)) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << gini1 << ", " << gini2 << ", " << distance
       << ") is outside the region |x-y| <= z <= M(x,y)";
    fail(ErrorCode::OutsideRegion, os.str());
  }
  const double g1 = std::clamp(gini1, 0.0, 1.0);
  const double g2 = std::clamp(gini2, 0.0, 1.0);
  return stretch(gini2 - gini1, distance, std::abs(g2 - g1), max_distance(g1, g2), true);
}

Point2 map_t_upper_extended(double gini1, double gini2, double distance) {
  return stretch(gini2 - gini1, distance, std::abs(gini2 - gini1),
                 max_distance_extended(gini1, gini2), false);
}

NormalizedIndex index_star(const RawIndex& raw) {
  const Point2 p = map_t_star(raw.delta_x, raw.distance);
  return {p.x, p.y, Variant::Star};
}

NormalizedIndex index_star(const LorenzCurve& c1, const LorenzCurve& c2) {
  return index_star(index_raw(c1, c2));
}

NormalizedIndex index_upper(const RawIndex& raw) {
  const Point2 p = map_t_upper(raw.gini1, raw.gini2, raw.distance);
  return {p.x, p.y, Variant::UpperStar};
}

NormalizedIndex index_upper(const LorenzCurve& c1, const LorenzCurve& c2) {
  return index_upper(index_raw(c1, c2));
}

FrontierClass classify(const NormalizedIndex& idx, double tol) {
  if (!(tol >= 0.0)) fail(ErrorCode::DomainError, "classification tolerance must be >= 0");
  const double x = idx.x;
  const double y = idx.y;
  if (std::abs(x) <= tol && std::abs(y) <= tol) return FrontierClass::Origin;
  if (std::abs(x - 1.0) <= tol && std::abs(y - 1.0) <= tol) return FrontierClass::VertexPos;
  if (std::abs(x + 1.0) <= tol && std::abs(y - 1.0) <= tol) return FrontierClass::VertexNeg;
  if (std::abs(y - x) <= tol) return FrontierClass::Leg1;
  if (std::abs(y + x) <= tol) return FrontierClass::Leg2;
  if (1.0 - y <= tol) return FrontierClass::Hypotenuse;
  return FrontierClass::Interior;
}

bool in_triangle(double x, double y, double tol) {
  return x >= -1.0 - tol && x <= 1.0 + tol && y >= std::abs(x) - tol && y <= 1.0 + tol;
}

}  // namespace lorenz
