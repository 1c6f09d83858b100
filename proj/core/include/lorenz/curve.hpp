#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lorenz {

// A knot of a piecewise-linear Lorenz curve: population share t, income share y.
struct Knot {
  double t = 0.0;
  double y = 0.0;

  friend bool operator==(const Knot&, const Knot&) = default;
};

// Piecewise-linear convex Lorenz curve on [0, 1].
//
// Knots run from (0, 0) to t = 1. The y value stored at t = 1 is the left
// limit l(1-); the value at t = 1 itself is always 1, so a curve may jump at
// the right endpoint (perfect inequality and the l_a^+ family do). The jump
// has zero Lebesgue measure and never enters an L1 computation.
class LorenzCurve {
 public:
  // Validates every invariant and throws lorenz::Error naming the violated
  // one (BadEndpoints, OutOfRange, NotMonotone, NonConvex).
  explicit LorenzCurve(std::vector<Knot> knots);

  // Skips the slope check. For knot lists that are convex by construction
  // (empirical curves built from sorted data) where recomputing slopes from
  // rounded cumulative sums would only add noise. Endpoints and ordering are
  // still checked.
  static LorenzCurve from_convex_knots(std::vector<Knot> knots);

  std::span<const Knot> knots() const noexcept { return knots_; }
  std::size_t size() const noexcept { return knots_.size(); }

  double left_limit_at_one() const noexcept { return knots_.back().y; }
  double jump_at_one() const noexcept { return 1.0 - knots_.back().y; }

  // Same as lorenz::eval.
  double operator()(double t) const;

  friend bool operator==(const LorenzCurve&, const LorenzCurve&) = default;

 private:
  struct Trusted {};
  LorenzCurve(std::vector<Knot> knots, Trusted);

  std::vector<Knot> knots_;
};

// Relative tolerance on slope monotonicity used by validation.
inline constexpr double kConvexityTolerance = 1e-12;

// Default tolerance for comparing analytic curves.
inline constexpr double kDefaultEqualityTolerance = 1e-9;

LorenzCurve make_curve(std::vector<Knot> knots);

// l_pe(t) = t.
LorenzCurve perfect_equality();
// l_pi(t) = 0 on [0, 1), 1 at t = 1.
LorenzCurve perfect_inequality();

// Linear interpolation; eval(c, 1) == 1. Throws DomainError outside [0, 1].
double eval(const LorenzCurve& c, double t);

// Integral of c over [0, 1] (the point mass at 1 is ignored).
double l1_norm(const LorenzCurve& c);

// G = 1 - 2 ||c||.
double gini(const LorenzCurve& c);

// d_L = 2 ||c1 - c2||, computed exactly: the difference is piecewise linear on
// the merged knot grid and each sign change is located analytically.
double lorenz_distance(const LorenzCurve& c1, const LorenzCurve& c2);

// Largest |c1(t) - c2(t)| over [0, 1); attained on the merged knot grid.
double sup_distance(const LorenzCurve& c1, const LorenzCurve& c2);

enum class Dominance {
  LorenzLE,  // c1 >= c2 pointwise: X1 <=_L X2
  LorenzGE,  // c1 <= c2 pointwise: X2 <=_L X1
  Crossing,
  Equal,
};

std::string_view to_string(Dominance d) noexcept;

Dominance dominates(const LorenzCurve& c1, const LorenzCurve& c2,
                    double tol = kDefaultEqualityTolerance);

// The symmetric curve x -> 1 - c^{-1}(1 - x), with c^{-1} the generalized
// (infimum) inverse. Flat pieces become the jump at 1 and vice versa. The
// result is canonicalized.
LorenzCurve tilde(const LorenzCurve& c);

// Integral of c over [0, t]. Throws DomainError outside [0, 1].
double cumulative_integral(const LorenzCurve& c, double t);

// (1 - w) c1 + w c2, a member of the class for any w in [0, 1].
LorenzCurve blend(const LorenzCurve& c1, const LorenzCurve& c2, double w);

// Drops interior knots lying on the segment through their neighbours.
std::vector<Knot> canonicalize(std::span<const Knot> knots);

// {"knots": [[t, y], ...]}; the terminal value 1 is implied.
std::string to_json(const LorenzCurve& c);
LorenzCurve curve_from_json(std::string_view text);

}  // namespace lorenz
