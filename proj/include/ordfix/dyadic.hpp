#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ordfix {

/// Exact dyadic rational num / 2^shift, kept in lowest terms (num odd or
/// shift == 0). Grid coordinates live here so that order comparisons on
/// discretized planar domains are exact.
class Dyadic {
 public:
  static constexpr int kMaxShift = 30;

  constexpr Dyadic() = default;
  constexpr Dyadic(std::int64_t integer) : num_(integer) {}  // NOLINT(implicit)

  /// num / 2^shift, normalized. Throws BadGridStep on shifts beyond kMaxShift.
  static Dyadic from_parts(std::int64_t num, int shift);
  /// Exact conversion of a finite double; BadGridStep if it needs more than
  /// kMaxShift binary digits after the point or overflows 32-bit numerators.
  static Dyadic from_double(double value);

  std::int64_t numerator() const { return num_; }
  int shift() const { return shift_; }
  double to_double() const;
  /// Shortest decimal text; dyadics always have a terminating expansion.
  std::string to_string() const;

  /// value / step when that is an integer, otherwise false.
  bool divisible_by(const Dyadic& step) const;
  /// Integer multiple k·step; requires divisible_by.
  std::int64_t quotient(const Dyadic& step) const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  std::int64_t num_ = 0;
  int shift_ = 0;
};

/// A point of the plane with exact dyadic coordinates.
struct GridPoint {
  Dyadic s;
  Dyadic t;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;

  /// Componentwise order of the plane.
  bool leq(const GridPoint& other) const { return s <= other.s && t <= other.t; }
  std::string name() const { return "(" + s.to_string() + "," + t.to_string() + ")"; }
};

inline GridPoint join(const GridPoint& a, const GridPoint& b) {
  return {std::max(a.s, b.s), std::max(a.t, b.t)};
}
inline GridPoint meet(const GridPoint& a, const GridPoint& b) {
  return {std::min(a.s, b.s), std::min(a.t, b.t)};
}

}  // namespace ordfix
