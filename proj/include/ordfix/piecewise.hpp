#pragma once

#include <array>
#include <vector>

#include "ordfix/rational.hpp"

namespace ordfix {

/// c0 + c1 t + c2 t^2 with exact rational coefficients.
struct Quadratic {
  std::array<Rational, 3> c{};

  Rational operator()(const Rational& t) const { return c[0] + t * (c[1] + t * c[2]); }
  Quadratic derivative() const { return {{c[1], 2 * c[2], Rational(0)}}; }
  int degree() const;

  friend Quadratic operator+(const Quadratic& a, const Quadratic& b);
  friend Quadratic operator-(const Quadratic& a, const Quadratic& b);
  friend Quadratic operator*(const Rational& k, const Quadratic& a);
  friend bool operator==(const Quadratic&, const Quadratic&) = default;
};

struct Segment {
  Rational from;
  Rational to;
  Quadratic poly;
};

/// Location and value of an extremum over an interval.
struct ExtremePoint {
  Rational value;
  Rational at;
};

/// Exact piecewise-quadratic function on [a, b]. Segments are closed,
/// strictly increasing, and tile the interval; at an interior breakpoint the
/// function takes the value of the segment on its right (both one-sided
/// values agree for the continuous functions used throughout).
class PiecewisePoly {
 public:
  PiecewisePoly() = default;
  /// Throws BadParams when segments are empty, degenerate, or fail to tile.
  explicit PiecewisePoly(std::vector<Segment> segments);

  static PiecewisePoly constant(const Rational& a, const Rational& b, const Rational& value);

  const Rational& lower() const { return segments_.front().from; }
  const Rational& upper() const { return segments_.back().to; }
  const std::vector<Segment>& segments() const { return segments_; }

  /// Throws BadParams outside [a, b].
  Rational operator()(const Rational& t) const;
  /// One-sided limits at t (left limit at a and right limit at b are the
  /// values there).
  Rational left_limit(const Rational& t) const;
  Rational right_limit(const Rational& t) const;

  /// Piecewise derivative (degree <= 1 per segment).
  PiecewisePoly derivative() const;

  bool is_continuous() const;
  /// Continuity of the function and of its derivative.
  bool is_c1() const;

  ExtremePoint minimum() const;
  ExtremePoint maximum() const;
  /// max |f(t)| over [a, b].
  Rational sup_abs() const;

  /// Pointwise minimum. Crossing points must be rational; throws
  /// Unsupported when a quadratic difference has irrational roots.
  PiecewisePoly pointwise_min(const PiecewisePoly& other) const;

  /// Restriction to [from, to], a subinterval of [a, b] with from < to.
  PiecewisePoly restricted(const Rational& from, const Rational& to) const;

  /// Merges segments with identical polynomials across breakpoints.
  PiecewisePoly simplified() const;

  friend PiecewisePoly operator+(const PiecewisePoly& f, const PiecewisePoly& g);
  friend PiecewisePoly operator-(const PiecewisePoly& f, const PiecewisePoly& g);
  friend PiecewisePoly operator*(const Rational& k, const PiecewisePoly& f);
  friend bool operator==(const PiecewisePoly& f, const PiecewisePoly& g);

 private:
  const Segment& segment_at(const Rational& t) const;

  std::vector<Segment> segments_;
};

}  // namespace ordfix
