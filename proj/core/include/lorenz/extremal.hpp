#pragma once

#include <string>
#include <string_view>

#include "lorenz/curve.hpp"

namespace lorenz {

// The three piecewise-affine families that make up the extreme points of the
// set of Lorenz curves with Gini index a.
//   L: (0,0), (x1,0), 1- -> (1-a)/(1-x1)        x1 in [0,a]
//   M: (0,0), (x2,x2-a), (1,1)                  x2 in (a,1)
//   N: (0,0), (x1,0), (x2,(x2-a)/(1-x1)), (1,1) x1 in (0,a), x2 in (a,1)
// L with x1 = 0 is l_a^+ (a line with a jump at 1), L with x1 = a is l_a^-.
// For a = 1 the only member is the perfect inequality curve (x1 = 1).
enum class Family { L, M, N };

std::string_view to_string(Family f) noexcept;

struct ExtremeSpec {
  Family family = Family::L;
  double a = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;

  friend bool operator==(const ExtremeSpec&, const ExtremeSpec&) = default;
};

// Human-readable form, e.g. "L(a=0.5, x1=0)".
std::string describe(const ExtremeSpec& s);

// Throws BadParams when the spec leaves the parameter box of its family.
void validate(const ExtremeSpec& s);

LorenzCurve extreme_curve(const ExtremeSpec& s);

// l_a^-(t) = max(0, (t-a)/(1-a)); l_1^- is the perfect inequality curve.
LorenzCurve lorenz_minus(double a);
// l_a^+(t) = (1-a) t on [0,1), jumping to 1 at t = 1.
LorenzCurve lorenz_plus(double a);

// Largest Lorenz distance between a curve with Gini a and one with Gini b.
double max_distance(double a, double b);

// Largest Lorenz distance over pairs whose Gini indices differ by c.
struct SuperMax {
  // Smaller Gini of the maximizing pair, (4 - |c| - sqrt(8 + c^2)) / 2.
  double a_c = 0.0;
  double value = 0.0;
  // A maximizing pair with gini2 - gini1 = c.
  double gini1 = 0.0;
  double gini2 = 0.0;
};

SuperMax super_max(double c);

// Diameter of the set of curves with Gini a: 2a(1-a)/(2-a).
double diameter_equal_gini(double a);

// a/(a+b-ab): where l_a^- meets l_b^+. Swapping the arguments gives the point
// where l_a^+ meets l_b^-. Throws Degenerate for a = b = 0.
double crossing_point(double a, double b);

struct BruteForceOptions {
  int grid = 400;
  bool include_n_family = true;
  // Points per axis for family N; 0 means min(grid, 40). The full grid is
  // quadratic in size per curve and quartic per pair.
  int n_family_grid = 0;
};

struct BruteForceResult {
  double value = 0.0;
  ExtremeSpec first;
  ExtremeSpec second;
  std::size_t pairs_evaluated = 0;
};

// Exhaustive maximization of the Lorenz distance over pairs of extreme curves
// with the parameters sampled on uniform grids. Ties go to the first pair in
// lexicographic (family, x1, x2) order. Meant as a verification oracle.
BruteForceResult brute_force_max(double a, double b, const BruteForceOptions& options);
BruteForceResult brute_force_max(double a, double b, int grid);

inline constexpr double kRegionTolerance = 1e-12;

// |x| <= y <= M*(x) with x in [-1,1], y in [0,1].
bool in_region_delta(double x, double y);
// |x-y| <= z <= M(x,y) with x, y in [0,1].
bool in_region_delta_star(double x, double y, double z);

}  // namespace lorenz
