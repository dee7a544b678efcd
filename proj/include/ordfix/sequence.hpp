#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ordfix/claims.hpp"
#include "ordfix/cone.hpp"
#include "ordfix/error.hpp"

namespace ordfix {

template <class E>
using ScalarOf = decltype(std::declval<const OrderedSpace<E>&>().norm_of(std::declval<const E&>()));

/// Failure tied to a position in a sequence.
class SequenceError : public Error {
 public:
  SequenceError(ErrorKind kind, std::size_t index, const std::string& what)
      : Error(kind, what + " (index " + std::to_string(index) + ")"), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

namespace detail {

template <class E>
ScalarOf<E> distance(const OrderedSpace<E>& space, const E& x, const E& y) {
  if constexpr (std::is_same_v<E, RealVector>) {
    if (x.size() != y.size()) throw Error(ErrorKind::DimensionMismatch, "vectors of different lengths");
    const auto kind = space.norm.kind;
    if (kind == NormKind::Ell1 || kind == NormKind::SupAbs) {
      double acc = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        double d = std::abs(y[i] - x[i]);
        acc = kind == NormKind::Ell1 ? acc + d : std::max(acc, d);
      }
      return acc;
    }
  }
  return space.distance(x, y);
}

template <class E>
void require_increasing(const OrderedSpace<E>& space, const std::vector<E>& seq) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!space.leq(seq[i], seq[i + 1]))
      throw SequenceError(ErrorKind::NotIncreasing, i + 1, "sequence is not increasing");
}

}  // namespace detail

/// Largest pairwise distance among seq[tail_start..]. Requires at least two
/// tail elements.
template <class E>
ScalarOf<E> cauchy_defect(const OrderedSpace<E>& space, const std::vector<E>& seq, std::size_t tail_start) {
  if (seq.size() < tail_start + 2) throw Error(ErrorKind::BadParams, "tail needs at least two elements");
  ScalarOf<E> worst = 0;
  for (std::size_t i = tail_start; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      ScalarOf<E> d = detail::distance(space, seq[i], seq[j]);
      if (d > worst) worst = d;
    }
  return worst;
}

enum class RegularityMode { Regular, FullyRegular };

template <class E>
struct RegularityBound {
  RegularityMode mode = RegularityMode::FullyRegular;
  std::optional<E> order_bound;
  double norm_bound = 0;
};

template <class E>
struct RegularityProbe {
  ClaimReport report;
  ScalarOf<E> defect{};
  bool consistent_with_convergence = false;
};

/// Checks monotonicity and the bound required by the mode, then measures the
/// tail Cauchy defect against `tolerance`.
template <class E>
RegularityProbe<E> regularity_probe(const OrderedSpace<E>& space, const std::vector<E>& seq,
                                    const RegularityBound<E>& bound, std::size_t tail_start,
                                    double tolerance = 1e-6) {
  if (seq.size() < 3) throw Error(ErrorKind::BadParams, "regularity probe needs at least three elements");
  detail::require_increasing(space, seq);

  RegularityProbe<E> out;
  out.report.add("regularity.increasing", "x_k ≼ x_{k+1} for all k",
                 std::to_string(seq.size() - 1) + " consecutive pairs", true);
  if (bound.mode == RegularityMode::Regular) {
    if (!bound.order_bound) throw Error(ErrorKind::BadParams, "regular mode needs an order upper bound");
    for (std::size_t i = 0; i < seq.size(); ++i)
      if (!space.leq(seq[i], *bound.order_bound))
        throw SequenceError(ErrorKind::BoundViolated, i, "element exceeds the order bound");
    out.report.add("regularity.order_bounded", "x_k ≼ bound for all k", "all elements below bound", true);
  } else {
    double worst = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      double n = as_double(space.norm_of(seq[i]));
      if (n > bound.norm_bound + space.cone.tolerance)
        throw SequenceError(ErrorKind::BoundViolated, i, "norm " + format_number(n) + " exceeds bound");
      worst = std::max(worst, n);
    }
    out.report.add("regularity.norm_bounded", "||x_k|| <= " + format_number(bound.norm_bound),
                   "max norm " + format_number(worst), true);
  }
  out.defect = cauchy_defect(space, seq, tail_start);
  out.consistent_with_convergence = as_double(out.defect) <= tolerance;
  out.report.add("regularity.cauchy_defect", "tail defect <= " + format_number(tolerance),
                 format_number(out.defect), out.consistent_with_convergence);
  return out;
}

template <class E>
struct SupResult {
  E limit;
  ClaimReport report;
};

/// Numerical supremum of an increasing, norm-convergent sequence: its last
/// element, checked to dominate the sequence and to lie below each candidate
/// that bounds the sequence.
template <class E>
SupResult<E> sup_of_increasing_sequence(const OrderedSpace<E>& space, const std::vector<E>& seq,
                                        const std::vector<E>& candidates, std::size_t tail_start,
                                        double tolerance = 1e-9) {
  if (seq.empty()) throw Error(ErrorKind::EmptySample, "empty sequence");
  detail::require_increasing(space, seq);
  if (seq.size() >= tail_start + 2) {
    auto defect = cauchy_defect(space, seq, tail_start);
    if (as_double(defect) > tolerance)
      throw Error(ErrorKind::NotConvergent, "tail Cauchy defect " + format_number(defect) + " above tolerance");
  }
  SupResult<E> out{seq.back(), {}};
  bool dominates = std::all_of(seq.begin(), seq.end(), [&](const E& x) { return space.leq(x, out.limit); });
  out.report.add("sup.dominates_members", "x_k ≼ limit for all k", dominates ? "yes" : "no", dominates);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const std::string id = "sup.candidate_" + std::to_string(c);
    bool bounds = std::all_of(seq.begin(), seq.end(), [&](const E& x) { return space.leq(x, candidates[c]); });
    if (!bounds) {
      out.report.add(id, "skipped unless an upper bound", "not an upper bound", true);
      continue;
    }
    bool below = space.leq(out.limit, candidates[c]);
    out.report.add(id, "limit ≼ candidate", below ? "yes" : "no", below);
  }
  return out;
}

/// Largest sampled ratio ||x|| / ||y|| over pairs with 0 ≼ x ≼ y, y ≠ 0: a
/// lower bound for the normal constant.
template <class E>
ScalarOf<E> normality_constant(const OrderedSpace<E>& space, const std::function<std::pair<E, E>()>& sampler,
                               std::size_t trials) {
  if (trials == 0) throw Error(ErrorKind::EmptySample, "no samples requested");
  ScalarOf<E> best = 0;
  for (std::size_t k = 0; k < trials; ++k) {
    auto [x, y] = sampler();
    if (!cone_member(space.cone, x) || !space.leq(x, y))
      throw Error(ErrorKind::BadParams, "sampler emitted a pair outside 0 ≼ x ≼ y");
    auto ny = space.norm_of(y);
    if (ny == 0) throw Error(ErrorKind::BadParams, "sampler emitted y = 0");
    ScalarOf<E> ratio = space.norm_of(x) / ny;
    if (ratio > best) best = ratio;
  }
  return best;
}

}  // namespace ordfix
