#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ordfix/claims.hpp"
#include "ordfix/cone.hpp"
#include "ordfix/piecewise.hpp"

namespace ordfix {

struct CounterexampleParams {
  Rational lambda1{9, 10};
  Rational ratio{49, 100};
  std::size_t truncation = 256;
  std::size_t segment_points = 11;
};

using ChainElement = std::variant<PiecewisePoly, ExactVector>;

/// Names accepted by make_counterexample_chain and verify_counterexample.
const std::vector<std::string>& counterexample_names();

/// n-th chain element (n >= 1). For lemma_2_11, indices 1..P walk the left
/// segment from (-1/2, 1/2) to (0, 1) and P+1..2P walk the right segment from
/// (1/2, 1/2) to (0, 1), where P = params.segment_points.
ChainElement make_counterexample_chain(std::string_view name, std::size_t n, const CounterexampleParams& params = {});

// Individual families.
PiecewisePoly ramp_at_zero(std::size_t n);            // 0 at t=0, nt, then 1 on [1/n, 2]
ExactVector indicator_prefix(std::size_t n, std::size_t truncation);  // n leading ones
PiecewisePoly ramp_at_one(std::size_t n);             // 0 on [0,1], nt - n, then 1
PiecewisePoly smoothed_corner(const Rational& lambda);  // C¹ function on [-1, 1]
/// Throws BadParams unless 0 < lambda1 < 1 and 0 < ratio < 1/2.
Rational lambda_at(const CounterexampleParams& params, std::size_t n);
/// Point (1-θ)·a + θ·(0,1) with a = (-1/2,1/2) for side 0, (1/2,1/2) for side 1.
ExactVector segment_point(int side, const Rational& theta);

/// Constant 1 on [0, 2].
PiecewisePoly unit_function();
/// t + 1 on [-1, 0], 1 on [0, 1]: continuous with a derivative jump at 0.
PiecewisePoly corner_function();
/// 0 on [0, 1-δ], linear up to 1 at t = 1, then 1.
PiecewisePoly ramp_upper_bound(const Rational& delta);

ClaimReport verify_counterexample(std::string_view name, std::size_t n_max, const CounterexampleParams& params = {});

struct ImprovedBound {
  PiecewisePoly bound;
  bool strictly_below = false;
  Rational witness_t;  // a point where bound < candidate
};

/// Pointwise minimum of `candidate` and the ramp r_δ. Throws NotAnUpperBound
/// naming n and t when candidate fails to dominate some ramp_at_one(n).
ImprovedBound improve_upper_bound_2_8(const PiecewisePoly& candidate, const Rational& delta);

/// Samples of a function on [-1, 1] and of its derivative.
struct SampledC1 {
  std::vector<double> t;
  std::vector<double> value;
  std::vector<double> derivative;
};

struct Refutation {
  ClaimReport report;
  bool rejected = false;
  std::string reason;
  double jump = 0;      // left derivative minus right difference quotient at 0
  double jump_at = 0;
  double norm = 0;
};

/// Checks that the candidate dominates every smoothed corner (throwing
/// NotDominating with n and t otherwise), then shows it cannot lie in the
/// ball of radius 2 as a C¹ function.
Refutation refute_upper_bound_2_9(const SampledC1& candidate, double tol, const CounterexampleParams& params = {},
                                  std::size_t n_check = 64);

/// Samples of corner_function on a uniform grid of `intervals` cells, with
/// left derivative 1 up to and excluding 0 and derivative 0 from 0 on.
SampledC1 sample_corner_candidate(std::size_t intervals);

}  // namespace ordfix
