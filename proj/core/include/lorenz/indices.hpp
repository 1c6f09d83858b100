#pragma once

#include <string>
#include <string_view>

#include "lorenz/curve.hpp"

namespace lorenz {

// Raw bidimensional index of a pair of curves: (gini2 - gini1, distance).
struct RawIndex {
  double gini1 = 0.0;
  double gini2 = 0.0;
  double distance = 0.0;
  double delta_x = 0.0;  // gini2 - gini1

  friend bool operator==(const RawIndex&, const RawIndex&) = default;
};

enum class Variant { Star, UpperStar };

std::string_view to_string(Variant v) noexcept;

// A point of the triangle |x| <= y <= 1.
struct NormalizedIndex {
  double x = 0.0;
  double y = 0.0;
  Variant variant = Variant::Star;

  friend bool operator==(const NormalizedIndex&, const NormalizedIndex&) = default;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

enum class FrontierClass {
  Interior,
  Leg1,        // y = x > 0: X1 <=_L X2, the first curve lies above
  Leg2,        // y = -x > 0: X2 <=_L X1
  Hypotenuse,  // y = 1: extremal or super-extremal pair
  Origin,      // equal curves
  VertexPos,   // (1, 1): perfect equality against perfect inequality
  VertexNeg,   // (-1, 1): the reverse
};

std::string_view to_string(FrontierClass c) noexcept;
FrontierClass frontier_class_from_string(std::string_view s);

RawIndex index_raw(const LorenzCurve& c1, const LorenzCurve& c2);

// Stretches the region between y = |x| and y = M*(x) onto the triangle while
// keeping x. Throws OutsideRegion when (x, y) is not in that region. Where
// M*(x) = |x| (only at |x| = 1) the lower-boundary image (x, |x|) is returned.
Point2 map_t_star(double x, double y);

// (gini1, gini2, distance) -> (gini2 - gini1, stretched distance), with the
// stretch running from |gini2 - gini1| up to M(gini1, gini2). Throws
// OutsideRegion for points outside the attainable set. A degenerate stretch
// (M = |gini2 - gini1|) returns the lower-boundary image.
Point2 map_t_upper(double gini1, double gini2, double distance);

// The same formulas without the region check, for finite differencing around
// points that sit on the boundary of the region.
Point2 map_t_star_extended(double x, double y);
Point2 map_t_upper_extended(double gini1, double gini2, double distance);

NormalizedIndex index_star(const RawIndex& raw);
NormalizedIndex index_star(const LorenzCurve& c1, const LorenzCurve& c2);
NormalizedIndex index_upper(const RawIndex& raw);
NormalizedIndex index_upper(const LorenzCurve& c1, const LorenzCurve& c2);

// Vertices take precedence over legs, legs over the hypotenuse.
FrontierClass classify(const NormalizedIndex& idx, double tol);

bool in_triangle(double x, double y, double tol);

std::string to_json(const RawIndex& r);

}  // namespace lorenz
