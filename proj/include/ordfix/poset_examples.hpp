#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordfix/fixed_point.hpp"

namespace ordfix {

/// A discretized planar fixed-point example: the componentwise-ordered grid
/// points of a domain D, the set-valued map restricted to them, the
/// expected fixed-point set (computed from the cited geometry, not from the
/// map), the seed (0,0), and the cited pair whose join and meet leave the
/// fixed set.
struct PosetExample {
  std::string name;
  FinitePoset poset;
  SetValuedMap map;
  ElementSet expected_fixed;
  Element seed = 0;
  std::pair<Element, Element> cited_pair;
};

/// remark_3_11: square [0,2]^2, T(s,t) = {(s,s)} for s < 1 and
///   {(s,s), (s,s-1)} for s >= 1.
/// example_3_12_1: D = segment (0,0)-(1,1) ∪ segment (2,2)-(3,3) ∪
///   {(1,2),(2,1)}; F collapses the lower segment to (0,0), the upper one to
///   (3,3), and fixes the two off-diagonal points.
/// example_3_12_2: the closed quadrilateral with vertices (0,0), (2,1),
///   (3,3), (1,2); F sends the part strictly below the segment
///   (1,2)-(2,1) to (0,0), the open segment and everything above it to
///   (3,3), and fixes (1,2) and (2,1).
///
/// Throws UnknownFixture for other names and BadGridStep unless the step
/// is a positive dyadic dividing 1/2, so that every cited point is a grid
/// point.
PosetExample builtin_example(std::string_view name, double grid_step);

const std::vector<std::string>& builtin_example_names();

}  // namespace ordfix
