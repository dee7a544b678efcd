#include "ordfix/counterexamples.hpp"

#include <algorithm>
#include <cmath>

#include "ordfix/error.hpp"
#include "ordfix/sequence.hpp"

namespace ordfix {
namespace {

Quadratic linear(const Rational& c0, const Rational& c1) { return {{c0, c1, Rational(0)}}; }

void require_index(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadParams, "chain indices start at 1");
}

std::string yes_no(bool b) { return b ? "holds" : "fails"; }

std::string pair_count(std::size_t checked, std::size_t bad) {
  return std::to_string(checked) + " checked, " + std::to_string(bad) + " mismatched";
}

/// Exact claims shared by the two ramp families on [0, 2]: continuity, unit
/// sup norm, monotonicity, the closed-form distance, and the tail defect.
void ramp_family_claims(ClaimReport& report, const std::string& prefix, const std::vector<PiecewisePoly>& xs) {
  const OrderedSpace<PiecewisePoly> space{ConeSpec::pointwise_function(), NormSpec::sup_abs()};
  const std::size_t n_max = xs.size();

  bool continuous = std::all_of(xs.begin(), xs.end(), [](const PiecewisePoly& x) { return x.is_continuous(); });
  report.add(prefix + ".continuous", "every x_n is continuous on [0,2]", yes_no(continuous), continuous);

  std::size_t bad_norm = 0;
  for (const auto& x : xs) bad_norm += space.norm_of(x) != 1;
  report.add(prefix + ".norm", "||x_n|| = 1 for n <= " + std::to_string(n_max), pair_count(n_max, bad_norm),
             bad_norm == 0);

  std::size_t bad_inc = 0;
  for (std::size_t i = 0; i + 1 < n_max; ++i) bad_inc += !space.leq(xs[i], xs[i + 1]);
  report.add(prefix + ".increasing", "x_n ≼ x_{n+1}", pair_count(n_max - 1, bad_inc), bad_inc == 0);

  std::size_t pairs = 0, bad_dist = 0;
  for (std::size_t n = 2; n <= n_max; ++n)
    for (std::size_t m = 1; m < n; ++m) {
      ++pairs;
      bad_dist += space.distance(xs[m - 1], xs[n - 1]) != 1 - Rational(m, n);
    }
  report.add(prefix + ".distance", "||x_n - x_m|| = 1 - m/n for m < n", pair_count(pairs, bad_dist), bad_dist == 0);

  // Tail from n = floor(n_max / 2): the pair (n, n_max) is at distance >= 1/2.
  const std::size_t tail = n_max / 2 - 1;
  Rational defect = cauchy_defect(space, xs, tail);
  report.add(prefix + ".not_cauchy", "tail defect from n = " + std::to_string(tail + 1) + " is at least 1/2",
             to_string(defect), defect >= Rational(1, 2));

  const PiecewisePoly v = unit_function();
  bool bounded = std::all_of(xs.begin(), xs.end(), [&](const PiecewisePoly& x) { return space.leq(x, v); });
  report.add(prefix + ".upper_bound", "v = 1 dominates every x_n", yes_no(bounded), bounded);
}

void verify_lemma_2_4(ClaimReport& report, std::size_t n_max) {
  std::vector<PiecewisePoly> xs;
  for (std::size_t n = 1; n <= n_max; ++n) xs.push_back(ramp_at_zero(n));
  ramp_family_claims(report, "lemma_2_4", xs);

  const PiecewisePoly& last = xs.back();
  bool limit = last(0) == 0 && last(Rational(1, n_max)) == 1;
  for (std::size_t n = 1; n <= n_max && limit; ++n) limit = xs[n - 1](0) == 0;
  report.add("lemma_2_4.pointwise_limit", "x_n(0) = 0 and x_n = 1 on [1/n, 2]", yes_no(limit), limit);
}

void verify_example_2_7(ClaimReport& report, std::size_t n_max, std::size_t truncation) {
  if (n_max > truncation) throw Error(ErrorKind::BadParams, "n_max exceeds the truncation length");
  const OrderedSpace<ExactVector> space{ConeSpec::componentwise(truncation), NormSpec::sup_abs()};
  std::vector<ExactVector> xs;
  for (std::size_t n = 1; n <= n_max; ++n) xs.push_back(indicator_prefix(n, truncation));

  std::size_t bad_inc = 0, bad_norm = 0;
  for (std::size_t i = 0; i < n_max; ++i) {
    bad_norm += space.norm_of(xs[i]) != 1;
    if (i + 1 < n_max) bad_inc += !space.leq(xs[i], xs[i + 1]);
  }
  report.add("example_2_7.norm", "||x_n|| = 1", pair_count(n_max, bad_norm), bad_norm == 0);
  report.add("example_2_7.increasing", "x_n ≼ x_{n+1}", pair_count(n_max - 1, bad_inc), bad_inc == 0);

  std::size_t pairs = 0, bad = 0;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (std::size_t m = 1; m < n; ++m) {
      ++pairs;
      bad += space.distance(xs[m - 1], xs[n - 1]) != 1;
    }
  report.add("example_2_7.distance", "||x_n - x_m|| = 1 for n != m", pair_count(pairs, bad), bad == 0);

  Rational defect = cauchy_defect(space, xs, n_max / 2);
  report.add("example_2_7.not_cauchy", "tail defect equals 1", to_string(defect), defect == 1);

  // On the first M coordinates the chain is constant from n = M on.
  std::vector<ExactVector> run;
  for (std::size_t n = 1; n <= truncation + 2; ++n) run.push_back(indicator_prefix(n, truncation));
  ExactVector ones(truncation, Rational(1));
  auto sup = sup_of_increasing_sequence(space, run, {ones}, truncation - 1);
  bool is_ones = sup.limit == ones;
  report.add("example_2_7.sup", "componentwise sup on the truncation is all-ones",
             is_ones ? "all-ones" : "differs", is_ones && sup.report.all_pass());
}

void verify_lemma_2_8(ClaimReport& report, std::size_t n_max) {
  std::vector<PiecewisePoly> xs;
  for (std::size_t n = 1; n <= n_max; ++n) xs.push_back(ramp_at_one(n));
  ramp_family_claims(report, "lemma_2_8", xs);

  const OrderedSpace<PiecewisePoly> space{ConeSpec::pointwise_function(), NormSpec::sup_abs()};
  const PiecewisePoly u = PiecewisePoly::constant(0, 2, -1);
  bool between = std::all_of(xs.begin(), xs.end(), [&](const PiecewisePoly& x) { return space.leq(u, x); });
  report.add("lemma_2_8.bi_inductive", "u = -1 ≼ x_n ≼ v = 1 inside B(0,1)", yes_no(between), between);

  bool flat = std::all_of(xs.begin(), xs.end(), [](const PiecewisePoly& x) {
    return x.restricted(0, 1).sup_abs() == 0 && x(2) == 1;
  });
  report.add("lemma_2_8.pointwise_limit", "x_n = 0 on [0,1] and x_n(2) = 1", yes_no(flat), flat);

  PiecewisePoly candidate = unit_function();
  Rational delta(1, 2);
  int rounds = 0;
  bool ok = true;
  for (; rounds < 5 && ok; ++rounds, delta /= 2) {
    auto step = improve_upper_bound_2_8(candidate, delta);
    bool still_bound = std::all_of(xs.begin(), xs.end(), [&](const PiecewisePoly& x) { return space.leq(x, step.bound); });
    ok = step.strictly_below && still_bound && space.leq(step.bound, candidate);
    candidate = step.bound;
  }
  report.add("lemma_2_8.no_least_upper_bound", "5 successive strict improvements of an upper bound",
             std::to_string(ok ? rounds : rounds - 1) + " strict rounds", ok && rounds == 5);
}

void verify_lemma_2_9(ClaimReport& report, std::size_t n_max, const CounterexampleParams& params) {
  const OrderedSpace<PiecewisePoly> space{ConeSpec::c1_pair(), NormSpec::c1_sum()};
  std::vector<PiecewisePoly> ys;
  std::vector<Rational> lambdas;
  for (std::size_t n = 1; n <= n_max; ++n) {
    lambdas.push_back(lambda_at(params, n));
    ys.push_back(smoothed_corner(lambdas.back()));
  }
  report.add("lemma_2_9.params", "0 < lambda_1 < 1 and lambda_{n+1} < lambda_n / 2",
             "lambda_1 = " + to_string(params.lambda1) + ", ratio = " + to_string(params.ratio), true);

  bool c1 = std::all_of(ys.begin(), ys.end(), [](const PiecewisePoly& y) { return y.is_c1(); });
  report.add("lemma_2_9.c1", "every y_n is continuously differentiable", yes_no(c1), c1);

  std::size_t bad_norm = 0;
  bool in_ball = true;
  for (std::size_t i = 0; i < n_max; ++i) {
    Rational nrm = space.norm_of(ys[i]);
    bad_norm += nrm != 2 - lambdas[i] / 2;
    in_ball = in_ball && nrm <= 2;
  }
  report.add("lemma_2_9.norm", "||y_n|| = 2 - lambda_n / 2", pair_count(n_max, bad_norm), bad_norm == 0);
  report.add("lemma_2_9.in_ball", "y_n lies in B(0,2)", yes_no(in_ball), in_ball);

  const PiecewisePoly v = corner_function();
  std::size_t bad_limit = 0;
  for (std::size_t i = 0; i < n_max; ++i) {
    PiecewisePoly gap = v - ys[i];
    bad_limit += !(gap.minimum().value >= 0 && gap.sup_abs() == lambdas[i] / 2);
  }
  report.add("lemma_2_9.pointwise_limit", "y_n <= v with max(v - y_n) = lambda_n / 2",
             pair_count(n_max, bad_limit), bad_limit == 0);

  std::size_t bad_inc = 0, bad_gap = 0;
  Rational smallest_gap = 2;
  for (std::size_t i = 0; i + 1 < n_max; ++i) {
    bad_inc += !space.leq(ys[i], ys[i + 1]);
    Rational gap = space.distance(ys[i], ys[i + 1]);
    Rational floor = 1 - lambdas[i + 1] / lambdas[i];
    smallest_gap = std::min(smallest_gap, gap);
    bad_gap += !(gap >= floor && floor > Rational(1, 2));
  }
  report.add("lemma_2_9.increasing", "y_n ≼ y_{n+1} in value and derivative", pair_count(n_max - 1, bad_inc),
             bad_inc == 0);
  report.add("lemma_2_9.gap", "||y_{n+1} - y_n|| >= 1 - lambda_{n+1}/lambda_n > 1/2",
             "smallest gap " + to_string(smallest_gap) + "; " + pair_count(n_max - 1, bad_gap), bad_gap == 0);

  bool corner = v.is_continuous() && !v.is_c1();
  Rational jump = v.derivative().left_limit(0) - v.derivative().right_limit(0);
  report.add("lemma_2_9.limit_not_c1", "v is continuous with a derivative jump at 0",
             "jump " + to_string(jump), corner && jump == 1);

  auto refutation = refute_upper_bound_2_9(sample_corner_candidate(2000), 1e-9, params);
  report.add("lemma_2_9.no_upper_bound", "the dominating candidate v is rejected",
             refutation.reason + "; jump " + format_number(refutation.jump), refutation.rejected);
}

void verify_lemma_2_11(ClaimReport& report, std::size_t points) {
  if (points < 2) throw Error(ErrorKind::BadParams, "need at least two points per segment");
  const OrderedSpace<ExactVector> space{ConeSpec::ice_cream_2d(), NormSpec::ell1()};
  const ExactVector zero{0, 0}, top{0, 1};

  bool positive = true, strict = true;
  for (int side = 0; side < 2; ++side) {
    ExactVector start = segment_point(side, 0);
    positive = positive && space.leq(zero, start) && space.leq(start, top);
    strict = strict && start != top && space.norm_of(start) == space.norm_of(top);
  }
  report.add("lemma_2_11.positive", "0 ≼ (∓1/2, 1/2) ≼ (0, 1)", yes_no(positive), positive);
  report.add("lemma_2_11.equal_norm_endpoints", "(∓1/2, 1/2) ≠ (0, 1) with equal norm 1", yes_no(strict), strict);

  std::size_t pairs = 0, bad_chain = 0, bad_norm = 0;
  for (int side = 0; side < 2; ++side) {
    std::vector<ExactVector> pts;
    for (std::size_t k = 0; k < points; ++k) pts.push_back(segment_point(side, Rational(k, points - 1)));
    for (std::size_t i = 0; i < points; ++i) {
      bad_norm += space.norm_of(pts[i]) != 1;
      for (std::size_t j = i + 1; j < points; ++j) {
        ++pairs;
        bad_chain += !space.leq(pts[i], pts[j]);
      }
    }
  }
  report.add("lemma_2_11.chain", "segment points are increasing in the cone order", pair_count(pairs, bad_chain),
             bad_chain == 0);
  report.add("lemma_2_11.norm", "every segment point has norm 1", pair_count(2 * points, bad_norm), bad_norm == 0);

  std::vector<ExactVector> run;
  for (int k = 1; k <= 60; ++k) run.push_back(segment_point(0, 1 - Rational(1, BigInt(1) << k)));
  run.push_back(top);
  auto sup = sup_of_increasing_sequence(space, run, {top}, 40);
  bool limit_ok = sup.limit == top && sup.report.all_pass();
  report.add("lemma_2_11.sup", "the chain z(1 - 2^-k) has limit and supremum (0, 1)", yes_no(limit_ok), limit_ok);
}

}  // namespace

const std::vector<std::string>& counterexample_names() {
  static const std::vector<std::string> names{"lemma_2_4", "example_2_7", "lemma_2_8", "lemma_2_9", "lemma_2_11"};
  return names;
}

PiecewisePoly ramp_at_zero(std::size_t n) {
  require_index(n);
  const Rational knot(1, n);
  return PiecewisePoly({{0, knot, linear(0, n)}, {knot, 2, linear(1, 0)}});
}

ExactVector indicator_prefix(std::size_t n, std::size_t truncation) {
  require_index(n);
  if (truncation == 0) throw Error(ErrorKind::BadParams, "truncation must be positive");
  ExactVector x(truncation, Rational(0));
  for (std::size_t m = 0; m < std::min(n, truncation); ++m) x[m] = 1;
  return x;
}

PiecewisePoly ramp_at_one(std::size_t n) {
  require_index(n);
  const Rational knot = 1 + Rational(1, n);
  std::vector<Segment> segs{{0, 1, linear(0, 0)}, {1, knot, linear(-Rational(n), n)}};
  if (knot < 2) segs.push_back({knot, 2, linear(1, 0)});
  return PiecewisePoly(std::move(segs));
}

PiecewisePoly smoothed_corner(const Rational& lambda) {
  if (!(lambda > 0 && lambda < 1)) throw Error(ErrorKind::BadParams, "lambda must lie in (0, 1)");
  const Rational top = 1 - lambda / 2;
  return PiecewisePoly({{-1, -lambda, linear(1, 1)},
                        {-lambda, 0, {{top, 0, -1 / (2 * lambda)}}},
                        {0, 1, linear(top, 0)}});
}

Rational lambda_at(const CounterexampleParams& params, std::size_t n) {
  require_index(n);
  if (!(params.lambda1 > 0 && params.lambda1 < 1))
    throw Error(ErrorKind::BadParams, "lambda_1 = " + to_string(params.lambda1) + " is not in (0, 1)");
  if (!(params.ratio > 0 && params.ratio < Rational(1, 2)))
    throw Error(ErrorKind::BadParams, "ratio = " + to_string(params.ratio) + " does not satisfy 0 < r < 1/2");
  Rational lambda = params.lambda1;
  for (std::size_t k = 1; k < n; ++k) lambda *= params.ratio;
  return lambda;
}

ExactVector segment_point(int side, const Rational& theta) {
  if (side != 0 && side != 1) throw Error(ErrorKind::BadParams, "segment side must be 0 or 1");
  if (theta < 0 || theta > 1) throw Error(ErrorKind::BadParams, "theta must lie in [0, 1]");
  const Rational s0 = side == 0 ? Rational(-1, 2) : Rational(1, 2);
  return {(1 - theta) * s0, (1 - theta) * Rational(1, 2) + theta};
}

PiecewisePoly unit_function() { return PiecewisePoly::constant(0, 2, 1); }

PiecewisePoly corner_function() { return PiecewisePoly({{-1, 0, linear(1, 1)}, {0, 1, linear(1, 0)}}); }

PiecewisePoly ramp_upper_bound(const Rational& delta) {
  if (!(delta > 0 && delta < 1)) throw Error(ErrorKind::BadParams, "delta must lie in (0, 1)");
  const Rational start = 1 - delta;
  return PiecewisePoly({{0, start, linear(0, 0)}, {start, 1, linear(-start / delta, 1 / delta)}, {1, 2, linear(1, 0)}});
}

ChainElement make_counterexample_chain(std::string_view name, std::size_t n, const CounterexampleParams& params) {
  require_index(n);
  if (name == "lemma_2_4") return ramp_at_zero(n);
  if (name == "example_2_7") return indicator_prefix(n, params.truncation);
  if (name == "lemma_2_8") return ramp_at_one(n);
  if (name == "lemma_2_9") return smoothed_corner(lambda_at(params, n));
  if (name == "lemma_2_11") {
    const std::size_t p = params.segment_points;
    if (p < 2) throw Error(ErrorKind::BadParams, "need at least two points per segment");
    if (n > 2 * p) throw Error(ErrorKind::BadParams, "index beyond both segments");
    int side = n > p ? 1 : 0;
    std::size_t k = (n - 1) % p;
    return segment_point(side, Rational(k, p - 1));
  }
  throw Error(ErrorKind::UnknownFixture, "unknown counterexample '" + std::string(name) + "'");
}

ClaimReport verify_counterexample(std::string_view name, std::size_t n_max, const CounterexampleParams& params) {
  if (n_max < 3) throw Error(ErrorKind::BadParams, "n_max must be at least 3");
  ClaimReport report;
  if (name == "lemma_2_4") {
    verify_lemma_2_4(report, n_max);
  } else if (name == "example_2_7") {
    verify_example_2_7(report, n_max, params.truncation);
  } else if (name == "lemma_2_8") {
    verify_lemma_2_8(report, n_max);
  } else if (name == "lemma_2_9") {
    lambda_at(params, 1);
    verify_lemma_2_9(report, n_max, params);
  } else if (name == "lemma_2_11") {
    verify_lemma_2_11(report, params.segment_points);
  } else {
    throw Error(ErrorKind::UnknownFixture, "unknown counterexample '" + std::string(name) + "'");
  }
  return report;
}

ImprovedBound improve_upper_bound_2_8(const PiecewisePoly& candidate, const Rational& delta) {
  if (candidate.lower() != 0 || candidate.upper() != 2)
    throw Error(ErrorKind::DimensionMismatch, "candidate must live on [0, 2]");
  if (!candidate.is_continuous()) throw Error(ErrorKind::BadParams, "candidate must be continuous");
  const PiecewisePoly ramp = ramp_upper_bound(delta);

  auto violation = [](std::size_t n, const Rational& t) {
    return Error(ErrorKind::NotAnUpperBound,
                 "candidate < x_" + std::to_string(n) + " at t = " + to_string(t));
  };
  // Dominating every ramp_at_one(n) means >= 0 on [0,1] and >= 1 on [1,2].
  auto low = candidate.restricted(0, 1).minimum();
  if (low.value < 0) throw violation(1, low.at);
  auto high = candidate.restricted(1, 2).minimum();
  if (high.value < 1) {
    Rational t = high.at;
    Rational c = high.value;
    for (int k = 1; t == 1 && k < 200; ++k) {
      Rational probe = 1 + Rational(1, BigInt(1) << k);
      if (candidate(probe) < 1) {
        t = probe;
        c = candidate(probe);
      }
    }
    if (t == 1) throw violation(1, t);
    // x_n(t) = min(1, n (t - 1)) exceeds c once n (t - 1) > c.
    BigInt n = 1;
    if (c > 0) {
      Rational q = c / (t - 1);
      n = boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q) + 1;
    }
    throw Error(ErrorKind::NotAnUpperBound,
                "candidate < x_" + n.str() + " at t = " + to_string(t));
  }

  ImprovedBound out{candidate.pointwise_min(ramp), false, 0};
  auto gap = (candidate - out.bound).maximum();
  out.strictly_below = gap.value > 0;
  out.witness_t = gap.at;
  return out;
}

SampledC1 sample_corner_candidate(std::size_t intervals) {
  if (intervals < 2 || intervals % 2) throw Error(ErrorKind::BadParams, "need an even number of grid cells");
  SampledC1 s;
  for (std::size_t i = 0; i <= intervals; ++i) {
    double t = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(intervals);
    if (i == intervals / 2) t = 0.0;
    s.t.push_back(t);
    s.value.push_back(t < 0 ? t + 1 : 1.0);
    s.derivative.push_back(t < 0 ? 1.0 : 0.0);
  }
  return s;
}

Refutation refute_upper_bound_2_9(const SampledC1& w, double tol, const CounterexampleParams& params,
                                  std::size_t n_check) {
  const std::size_t m = w.t.size();
  if (m < 3 || w.value.size() != m || w.derivative.size() != m)
    throw Error(ErrorKind::DimensionMismatch, "value, derivative and grid samples must align");
  for (std::size_t i = 0; i < m; ++i) {
    if (w.t[i] < -1 || w.t[i] > 1 || (i && !(w.t[i - 1] < w.t[i])))
      throw Error(ErrorKind::BadParams, "grid must increase strictly inside [-1, 1]");
  }
  auto first_nonneg = std::lower_bound(w.t.begin(), w.t.end(), 0.0) - w.t.begin();
  const std::size_t k0 = static_cast<std::size_t>(first_nonneg);
  if (k0 == 0 || k0 + 1 >= m) throw Error(ErrorKind::BadParams, "grid needs points left of 0 and two points in [0, 1]");

  const double lambda1 = to_double(params.lambda1);
  const double ratio = to_double(params.ratio);
  lambda_at(params, 1);

  auto corner_value = [](double lam, double t) {
    if (lam <= 0) return t < 0 ? t + 1 : 1.0;
    if (t <= -lam) return t + 1;
    if (t <= 0) return -t * t / (2 * lam) + 1 - lam / 2;
    return 1 - lam / 2;
  };
  auto corner_slope = [](double lam, double t) {
    if (lam <= 0) return t < 0 ? 1.0 : 0.0;
    if (t <= -lam) return 1.0;
    if (t <= 0) return -t / lam;
    return 0.0;
  };
  auto not_dominating = [&](std::size_t n, double t, const char* what) {
    return Error(ErrorKind::NotDominating,
                 std::string(what) + " of the candidate falls below y_" + std::to_string(n) + " at t = " + format_number(t));
  };

  double lam = lambda1;
  for (std::size_t n = 1; n <= n_check; ++n, lam *= ratio)
    for (std::size_t i = 0; i < m; ++i) {
      if (w.value[i] < corner_value(lam, w.t[i]) - tol) throw not_dominating(n, w.t[i], "value");
      if (w.derivative[i] < corner_slope(lam, w.t[i]) - tol) throw not_dominating(n, w.t[i], "derivative");
    }
  // Beyond n_check the corners approach v, so shortfalls against v surface
  // at some later index.
  for (std::size_t i = 0; i < m; ++i) {
    const double t = w.t[i];
    const bool value_short = w.value[i] < (t < 0 ? t + 1 : 1.0) - tol;
    const bool slope_short = t < 0 && w.derivative[i] < 1 - tol;
    if (!value_short && !slope_short) continue;
    double l = lam;
    for (std::size_t n = n_check + 1; n < 1'000'000; ++n, l *= ratio) {
      if (value_short && w.value[i] < corner_value(l, t) - tol) throw not_dominating(n, t, "value");
      if (slope_short && w.derivative[i] < corner_slope(l, t) - tol) throw not_dominating(n, t, "derivative");
      if (l == 0) break;
    }
  }

  Refutation out;
  out.report.add("refute.dominates", "candidate ≽ y_n for n <= " + std::to_string(n_check) + " and against v",
                 "holds on " + std::to_string(m) + " grid points", true);

  double min_value = 2, min_slope = 2, max_abs = 0, max_abs_slope = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (w.t[i] >= 0) min_value = std::min(min_value, w.value[i]);
    if (w.t[i] < 0) min_slope = std::min(min_slope, w.derivative[i]);
    max_abs = std::max(max_abs, std::abs(w.value[i]));
    max_abs_slope = std::max(max_abs_slope, std::abs(w.derivative[i]));
  }
  out.report.add("refute.forced_value", "w >= 1 on [0, 1]", format_number(min_value), min_value >= 1 - tol);
  out.report.add("refute.forced_slope", "w' >= 1 on [-1, 0)", format_number(min_slope), min_slope >= 1 - tol);

  out.norm = max_abs + max_abs_slope;
  const bool in_ball = out.norm <= 2 + tol;
  out.report.add("refute.ball", "||w|| <= 2", format_number(out.norm), in_ball);

  const double left_slope = w.derivative[k0 - 1];
  const double right_slope = (w.value[k0 + 1] - w.value[k0]) / (w.t[k0 + 1] - w.t[k0]);
  out.jump = left_slope - right_slope;
  out.jump_at = w.t[k0];
  const bool jump_visible = out.jump > tol;
  out.report.add("refute.derivative_jump", "w' jumps at 0, so w is not C¹",
                 "jump " + format_number(out.jump) + " at t = " + format_number(out.jump_at), jump_visible);

  if (!in_ball) {
    out.rejected = true;
    out.reason = "outside B(0,2): norm " + format_number(out.norm);
  } else if (jump_visible) {
    out.rejected = true;
    out.reason = "derivative jump " + format_number(out.jump) + " at t = " + format_number(out.jump_at);
  }
  return out;
}

}  // namespace ordfix
