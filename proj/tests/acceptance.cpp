// Acceptance checks: one PASS/FAIL line per numbered criterion. Exit status
// is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ordfix/cli.hpp"
#include "ordfix/cone.hpp"
#include "ordfix/counterexamples.hpp"
#include "ordfix/fixed_point.hpp"
#include "ordfix/hammerstein.hpp"
#include "ordfix/poset_examples.hpp"
#include "ordfix/sequence.hpp"
#include "support/oracles.hpp"

using namespace ordfix;

namespace {

class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool passed() const { return failed_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::string s = std::to_string(checks_) + " checks";
    if (failed_) {
      s += ", " + std::to_string(failed_) + " failed:";
      for (const auto& f : failures_) s += " [" + f + "]";
    }
    return s;
  }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

// Piecewise-linear closed forms, evaluated without PiecewisePoly.
Rational ramp0(std::size_t n, const Rational& t) {
  Rational v = n * t;
  return v < 1 ? v : Rational(1);
}
Rational ramp1(std::size_t n, const Rational& t) {
  if (t <= 1) return 0;
  Rational v = n * (t - 1);
  return v < 1 ? v : Rational(1);
}

// The sup distance of two piecewise-linear functions is attained at a
// breakpoint of either one.
Rational breakpoint_distance(const std::function<Rational(const Rational&)>& f,
                             const std::function<Rational(const Rational&)>& g, const std::vector<Rational>& knots) {
  Rational d = 0;
  for (const auto& t : knots) d = std::max(d, abs(f(t) - g(t)));
  return d;
}

void criterion_1(Criterion& c) {
  const OrderedSpace<PiecewisePoly> space{ConeSpec::pointwise_function(), NormSpec::sup_abs()};
  std::vector<PiecewisePoly> xs;
  for (std::size_t n = 1; n <= 65; ++n) xs.push_back(ramp_at_zero(n));
  for (std::size_t n = 1; n <= 64; ++n) {
    c.expect(space.norm_of(xs[n - 1]) == 1, "norm x_" + std::to_string(n));
    c.expect(space.leq(xs[n - 1], xs[n]), "x_n <= x_n+1 at n=" + std::to_string(n));
    c.expect(space.leq(xs[n - 1], unit_function()), "v dominates x_" + std::to_string(n));
    for (std::size_t m = 1; m < n; ++m) {
      Rational oracle = breakpoint_distance([&](const Rational& t) { return ramp0(n, t); },
                                            [&](const Rational& t) { return ramp0(m, t); },
                                            {Rational(0), Rational(1, n), Rational(1, m), Rational(2)});
      Rational d = space.distance(xs[n - 1], xs[m - 1]);
      c.expect(d == oracle && d == 1 - Rational(m, n),
               "distance x_" + std::to_string(n) + ", x_" + std::to_string(m));
    }
  }
}

void criterion_2(Criterion& c) {
  const std::size_t M = 256;
  const OrderedSpace<ExactVector> space{ConeSpec::componentwise(M), NormSpec::sup_abs()};
  for (std::size_t n = 1; n <= 64; ++n)
    for (std::size_t m = 1; m < n; ++m)
      c.expect(space.distance(indicator_prefix(n, M), indicator_prefix(m, M)) == 1,
               "distance " + std::to_string(n) + "," + std::to_string(m));
  std::vector<ExactVector> run;
  for (std::size_t n = 1; n <= M + 2; ++n) run.push_back(indicator_prefix(std::min(n, M), M));
  ExactVector oracle(M, Rational(0));
  for (const auto& x : run)
    for (std::size_t i = 0; i < M; ++i) oracle[i] = std::max(oracle[i], x[i]);
  const ExactVector ones(M, Rational(1));
  c.expect(oracle == ones, "brute-force componentwise max is all ones");
  auto sup = sup_of_increasing_sequence(space, run, {ones}, M - 1);
  c.expect(sup.limit == oracle, "sup equals the componentwise max");
  c.expect(sup.report.all_pass(), "sup report passes");
}

void criterion_3(Criterion& c) {
  const OrderedSpace<PiecewisePoly> space{ConeSpec::pointwise_function(), NormSpec::sup_abs()};
  std::vector<PiecewisePoly> xs;
  for (std::size_t n = 1; n <= 64; ++n) xs.push_back(ramp_at_one(n));
  for (std::size_t n = 1; n <= 64; ++n) {
    c.expect(space.norm_of(xs[n - 1]) == 1, "norm at n=" + std::to_string(n));
    if (n < 64) c.expect(space.leq(xs[n - 1], xs[n]), "monotone at n=" + std::to_string(n));
    for (std::size_t m = 1; m < n; ++m) {
      Rational oracle = breakpoint_distance(
          [&](const Rational& t) { return ramp1(n, t); }, [&](const Rational& t) { return ramp1(m, t); },
          {Rational(0), Rational(1), 1 + Rational(1, n), 1 + Rational(1, m), Rational(2)});
      c.expect(space.distance(xs[n - 1], xs[m - 1]) == oracle && oracle == 1 - Rational(m, n),
               "distance " + std::to_string(n) + "," + std::to_string(m));
    }
  }
  Rational defect = cauchy_defect(space, xs, 31);
  c.expect(defect >= Rational(1, 2), "tail defect " + to_string(defect));

  PiecewisePoly bound = unit_function();
  Rational delta(1, 2);
  for (int round = 1; round <= 5; ++round, delta /= 2) {
    auto step = improve_upper_bound_2_8(bound, delta);
    c.expect(step.strictly_below, "round " + std::to_string(round) + " strictly below");
    c.expect(space.leq(step.bound, bound) && !(step.bound == bound), "round " + std::to_string(round) + " improves");
    c.expect(step.bound(step.witness_t) < bound(step.witness_t), "witness point of round " + std::to_string(round));
    for (std::size_t n = 1; n <= 64; ++n)
      c.expect(space.leq(xs[n - 1], step.bound), "round " + std::to_string(round) + " still bounds x_" +
                                                     std::to_string(n));
    bound = step.bound;
  }
}

void criterion_4(Criterion& c) {
  CounterexampleParams params;
  const OrderedSpace<PiecewisePoly> space{ConeSpec::c1_pair(), NormSpec::c1_sum()};
  std::vector<PiecewisePoly> ys;
  std::vector<Rational> lambdas;
  for (std::size_t n = 1; n <= 17; ++n) {
    lambdas.push_back(lambda_at(params, n));
    ys.push_back(smoothed_corner(lambdas.back()));
  }
  c.expect(lambdas[0] == Rational(9, 10) && lambdas[1] == Rational(441, 1000), "lambda sequence");
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto& y = ys[n - 1];
    c.expect(space.norm_of(y) == 2 - lambdas[n - 1] / 2, "norm y_" + std::to_string(n));
    c.expect(y.is_c1(), "y_" + std::to_string(n) + " is C1");
    c.expect(space.leq(y, ys[n]), "y_n <= y_n+1 at n=" + std::to_string(n));
    Rational gap = space.distance(ys[n], y);
    Rational floor = 1 - lambdas[n] / lambdas[n - 1];
    c.expect(gap >= floor && floor > Rational(1, 2), "gap at n=" + std::to_string(n));
  }

  const SampledC1 v = sample_corner_candidate(20000);
  auto check_refutation = [&](const SampledC1& w, const std::string& label) {
    try {
      Refutation r = refute_upper_bound_2_9(w, 1e-9, params);
      c.expect(r.rejected, label + " rejected");
      c.expect(r.jump >= 1 - 1e-6, label + " jump " + format_number(r.jump));
      c.expect(r.jump_at == 0.0, label + " jump located at 0");
    } catch (const Error& e) {
      c.expect(false, label + ": " + e.what());
    }
  };
  check_refutation(v, "v");

  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0, 1);
  for (int k = 0; k < 100; ++k) {
    // v + a + b(t+1) + c(t+1)^2 + e·exp(t): every added term is nonnegative
    // with nonnegative slope, so the candidate dominates v and each y_n.
    const double a = 0.5 * u(rng), b = 0.5 * u(rng), q = 1e-3 * u(rng), e = 2e-3 * u(rng);
    SampledC1 w = v;
    for (std::size_t i = 0; i < w.t.size(); ++i) {
      const double s = w.t[i] + 1;
      w.value[i] += a + b * s + q * s * s + e * std::exp(w.t[i]);
      w.derivative[i] += b + 2 * q * s + e * std::exp(w.t[i]);
    }
    check_refutation(w, "candidate " + std::to_string(k));
  }
}

void criterion_5(Criterion& c) {
  const OrderedSpace<ExactVector> plane{ConeSpec::ice_cream_2d(), NormSpec::ell1()};
  for (int side = 0; side < 2; ++side) {
    std::vector<ExactVector> pts;
    for (std::size_t i = 1; i <= 11; ++i)
      pts.push_back(std::get<ExactVector>(make_counterexample_chain("lemma_2_11", side * 11 + i)));
    c.expect(pts.front() == ExactVector{side ? Rational(1, 2) : Rational(-1, 2), Rational(1, 2)} &&
                 pts.back() == ExactVector{0, 1},
             "segment endpoints");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      c.expect(abs(pts[i][0]) + abs(pts[i][1]) == 1 && plane.norm_of(pts[i]) == 1, "l1 norm 1");
      for (std::size_t j = 0; j < pts.size(); ++j) {
        // Ice-cream order: y - x = (ds, dt) with |ds| <= dt.
        const Rational ds = pts[j][0] - pts[i][0], dt = pts[j][1] - pts[i][1];
        const bool oracle = abs(ds) <= dt || abs(ds) <= -dt;
        c.expect(oracle, "points comparable by hand");
        c.expect(plane.leq(pts[i], pts[j]) || plane.leq(pts[j], pts[i]), "points comparable");
      }
    }
  }

  const OrderedSpace<RealVector> space{ConeSpec::ice_cream_2d(), NormSpec::ell1()};
  std::mt19937_64 rng(511);
  std::uniform_real_distribution<double> u(0, 1);
  double worst = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const double r = 0.5 + 0.48 * u(rng);
    std::vector<RealVector> seq;
    RealVector x{u(rng) - 0.5, 0.0};
    x[1] = std::abs(x[0]) + u(rng);
    double scale = 1;
    for (int k = 0; k < 2000; ++k) {
      seq.push_back(x);
      const double t = u(rng);
      const double s = (2 * u(rng) - 1) * t;
      x[0] += scale * s;
      x[1] += scale * t;
      scale *= r;
    }
    RegularityBound<RealVector> bound{RegularityMode::FullyRegular, std::nullopt, 200.0};
    auto probe = regularity_probe(space, seq, bound, 1000);
    worst = std::max(worst, probe.defect);
    c.expect(probe.defect < 1e-6, "defect " + format_number(probe.defect) + " at trial " + std::to_string(trial));
    c.expect(probe.consistent_with_convergence, "probe verdict at trial " + std::to_string(trial));
  }
  c.expect(worst < 1e-6, "worst defect " + format_number(worst));
}

void criterion_6(Criterion& c) {
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> u(0, 1);
  for (auto norm : {NormSpec::ell1(), NormSpec::ellp(2), NormSpec::sup_abs()}) {
    const OrderedSpace<RealVector> space{ConeSpec::componentwise(4), norm};
    std::function<std::pair<RealVector, RealVector>()> strict = [&] {
      RealVector x(4), y(4);
      for (int i = 0; i < 4; ++i) {
        x[i] = u(rng);
        y[i] = x[i] + u(rng) + 1e-3;
      }
      return std::make_pair(x, y);
    };
    const double k = normality_constant(space, strict, 10000);
    c.expect(k <= 1.0, "constant " + format_number(k) + " exceeds 1");
    int count = 0;
    std::function<std::pair<RealVector, RealVector>()> with_equal = [&] {
      auto pair = strict();
      if (++count % 10 == 0) pair.second = pair.first;
      return pair;
    };
    const double ke = normality_constant(space, with_equal, 10000);
    c.expect(ke <= 1.0 && ke >= 1 - 1e-12, "constant with x = y pairs " + format_number(ke));
  }
}

GridPoint gp(double s, double t) { return {Dyadic::from_double(s), Dyadic::from_double(t)}; }

void criterion_7(Criterion& c) {
  struct Case {
    std::string name;
    double step;
    std::function<bool(double, double)> in_fixed_set;
    std::pair<GridPoint, GridPoint> witness;
  };
  const std::vector<Case> cases{
      {"remark_3_11", 0.25, [](double s, double t) { return s == t || (s >= 1 && t == s - 1); },
       {gp(1, 1), gp(1.5, 0.5)}},
      {"example_3_12_1", 0.5,
       [](double s, double t) {
         return (s == 0 && t == 0) || (s == 1 && t == 2) || (s == 2 && t == 1) || (s == 3 && t == 3);
       },
       {gp(1, 2), gp(2, 1)}},
      {"example_3_12_2", 0.25,
       [](double s, double t) {
         return (s == 0 && t == 0) || (s == 1 && t == 2) || (s == 2 && t == 1) || (s == 3 && t == 3);
       },
       {gp(1, 2), gp(2, 1)}},
  };
  for (const auto& k : cases) {
    auto ex = builtin_example(k.name, k.step);
    const auto& p = ex.poset;
    ElementSet expected, brute;
    for (Element x = 0; x < p.size(); ++x) {
      if (k.in_fixed_set(p.point(x).s.to_double(), p.point(x).t.to_double())) expected.push_back(x);
      if (ex.map.contains(x, x)) brute.push_back(x);
    }
    const ElementSet fixed = fixed_point_set(ex.map);
    c.expect(fixed == expected, k.name + " fixed set matches the cited set on the grid");
    c.expect(fixed == brute, k.name + " fixed set matches brute force");

    const auto ca = p.find_point(k.witness.first), cb = p.find_point(k.witness.second);
    c.expect(ca && cb, k.name + " cited points lie on the grid");
    if (!ca || !cb) continue;
    const GridPoint hj = join(k.witness.first, k.witness.second), hm = meet(k.witness.first, k.witness.second);
    c.expect(!k.in_fixed_set(hj.s.to_double(), hj.t.to_double()) || !k.in_fixed_set(hm.s.to_double(), hm.t.to_double()),
             k.name + " cited join or meet leaves the fixed set by hand");
    auto sub = is_sublattice(p, fixed, {{*ca, *cb}});
    c.expect(!sub.holds && sub.witness.has_value(), k.name + " fixed set is not a sublattice");
    if (sub.witness) {
      const auto& w = *sub.witness;
      auto a = p.point(w.a), b = p.point(w.b);
      c.expect((a == k.witness.first && b == k.witness.second) || (a == k.witness.second && b == k.witness.first),
               k.name + " witness pair " + a.name() + "," + b.name());
      c.expect(p.point(w.join) == join(a, b) && p.point(w.meet) == meet(a, b), k.name + " join and meet");
      c.expect(!w.join_in_set || !w.meet_in_set, k.name + " join or meet leaves the set");
    }

    try {
      auto report = verify_fixed_point_theorem(p, p.all(), ex.map, ex.seed);
      c.expect(report.hypotheses_pass(), k.name + " hypotheses A1-A3");
      c.expect(report.conclusions_pass(), k.name + " conclusions");
      c.expect(!report.fixed_points.empty() && report.is_inductive, k.name + " nonempty inductive fixed set");
      c.expect(!report.above_seed.empty() && report.above_seed_inductive, k.name + " fixed points above seed");
      c.expect(p.point(ex.seed) == gp(0, 0), k.name + " seed (0,0)");
      bool maximal_ok = !report.maximal_elements.empty();
      for (Element m : report.maximal_elements) {
        maximal_ok = maximal_ok && p.leq(ex.seed, m) && ex.map.contains(m, m);
        for (Element f : fixed) maximal_ok = maximal_ok && !(p.less(m, f));
      }
      c.expect(maximal_ok, k.name + " maximal fixed point above (0,0)");
    } catch (const Error& e) {
      c.expect(false, k.name + ": " + e.what());
    }
  }
}

void criterion_8(Criterion& c) {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 100; ++trial) {
    auto lat = testing::random_lattice(rng, 64);
    const auto& p = lat.poset;
    c.expect(p.size() <= 64, "lattice size");
    auto f = testing::random_increasing_map(rng, p);
    std::optional<Element> bottom;
    for (Element x = 0; x < p.size() && !bottom; ++x) {
      bool below_all = true;
      for (Element y = 0; y < p.size(); ++y) below_all = below_all && p.leq(x, y);
      if (below_all) bottom = x;
    }
    c.expect(bottom.has_value(), "lattice has a bottom at trial " + std::to_string(trial));
    if (!bottom) continue;
    ElementSet fixed;
    for (Element x = 0; x < p.size(); ++x)
      if (f[x] == x) fixed.push_back(x);
    std::optional<Element> least;
    for (Element x : fixed)
      if (std::all_of(fixed.begin(), fixed.end(), [&](Element y) { return p.leq(x, y); })) least = x;
    c.expect(least.has_value(), "least fixed point exists at trial " + std::to_string(trial));

    auto map = SetValuedMap::single_valued(p, p.all(), f);
    auto orbit = iterate_map(map, *bottom, p.size());
    c.expect(orbit.size() <= p.size() + 1, "orbit stabilizes within |D| steps");
    c.expect(least && orbit.back() == *least, "iteration from bottom reaches the least fixed point at trial " +
                                                  std::to_string(trial));
    c.expect(fixed_point_set(map) == fixed, "fixed set matches enumeration at trial " + std::to_string(trial));
  }
}

HammersteinProblem trivial_problem() {
  return HammersteinProblem::make(build_grid(0, 1, 129, QuadratureRule::Trapezoid), Kernel::constant(1),
                                  Nonlinearity::constant(1), 2, 1);
}

HammersteinProblem separable_problem() {
  return HammersteinProblem::make(build_grid(0, 1, 257, QuadratureRule::GaussLegendre),
                                  Kernel::separable(ScalarFunction::affine(1, 1), ScalarFunction::constant(1)),
                                  Nonlinearity::bounded_sigmoid(0.2, 0.3), 2, 1);
}

void criterion_9(Criterion& c) {
  auto pr = trivial_problem();
  c.expect(std::abs(compute_lambda(pr) - 1) <= 1e-12, "lambda = 1");
  auto r = monotone_solve(pr);
  c.expect(r.converged && r.iterates_count <= 2, "converges in " + std::to_string(r.iterates_count));
  bool ones = std::all_of(r.solution.begin(), r.solution.end(), [](double v) { return std::abs(v - 1) <= 1e-15; });
  c.expect(ones, "x* = 1 at every node");
  c.expect(r.residual_p < 1e-12, "residual " + format_number(r.residual_p));
  c.expect(std::abs(r.norm_p - 1) <= 1e-12 && r.norm_p <= pr.gamma + 1e-12, "norm " + format_number(r.norm_p));
}

void criterion_10(Criterion& c) {
  auto pr = separable_problem();
  const double lambda = compute_lambda(pr);
  c.expect(std::abs(lambda - 7.0 / 3) <= 1e-6, "lambda " + format_number(lambda));
  auto audit = audit_conditions(pr);
  c.expect(audit.all_pass(), "audit passes");

  // Independent iteration and monotonicity check.
  std::vector<double> x(pr.grid.size(), 0.0);
  bool monotone = true;
  for (int k = 0; k < 200; ++k) {
    auto next = apply_F(pr, x);
    for (std::size_t i = 0; i < x.size(); ++i) monotone = monotone && next[i] >= x[i] - 1e-12;
    x = std::move(next);
  }
  c.expect(monotone, "hand-rolled iterates never decrease");

  auto r = monotone_solve(pr);
  c.expect(r.converged && r.monotone_ok, "solver reports monotone convergence");
  c.expect(r.residual_p < 1e-10, "residual " + format_number(r.residual_p));
  c.expect(r.norm_p > 0 && r.norm_p <= pr.gamma, "0 < norm <= gamma: " + format_number(r.norm_p));

  auto oracle = separable_oracle(ScalarFunction::affine(1, 1), ScalarFunction::constant(1), pr.f, pr.grid);
  double gap = 0;
  for (std::size_t i = 0; i < x.size(); ++i) gap = std::max(gap, std::abs(r.solution[i] - oracle.solution[i]));
  c.expect(gap < 1e-6, "sup gap to separable_oracle " + format_number(gap));

  // Scalar bisection written out here as a second oracle.
  auto phi = [&](double cc) {
    double acc = 0;
    for (std::size_t j = 0; j < pr.grid.size(); ++j) {
      const double u = (1 + pr.grid.nodes[j]) * cc;
      acc += pr.grid.weights[j] * (0.2 + 0.3 * u / (1 + std::abs(u)));
    }
    return acc - cc;
  };
  double lo = 0, hi = 1;
  for (int it = 0; it < 200; ++it) {
    double mid = (lo + hi) / 2;
    (phi(mid) > 0 ? lo : hi) = mid;
  }
  double gap2 = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    gap2 = std::max(gap2, std::abs(r.solution[i] - (1 + pr.grid.nodes[i]) * lo));
  c.expect(gap2 < 1e-6, "sup gap to hand bisection " + format_number(gap2));
}

void criterion_11(Criterion& c) {
  auto pr = separable_problem();
  const std::size_t n = pr.grid.size();
  std::mt19937_64 rng(1111);
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = 2 * nd(rng);
      y[i] = x[i] + (u(rng) < 0.2 ? 0.0 : std::abs(nd(rng)));
    }
    auto fx = apply_F(pr, x), fy = apply_F(pr, y);
    bool ordered = true;
    for (std::size_t i = 0; i < n; ++i) ordered = ordered && fx[i] <= fy[i];
    c.expect(ordered, "isotone at trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> x(n);
    for (double& v : x) v = nd(rng);
    const double radius = pr.gamma * (trial % 10 == 0 ? 1.0 : u(rng));
    const double norm = weighted_p_norm(pr.grid, x, pr.p);
    for (double& v : x) v *= radius / norm;
    const double image = weighted_p_norm(pr.grid, apply_F(pr, x), pr.p);
    c.expect(image <= pr.gamma + 1e-10, "Holder bound at trial " + std::to_string(trial));
  }
}

void criterion_12(Criterion& c) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "ordfix_acceptance";
  fs::create_directories(dir);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  };
  struct Run {
    std::vector<std::string> args;
    int expected;
  };
  std::vector<Run> matrix;
  for (const auto& n : counterexample_names()) matrix.push_back({{"verify", n}, 0});
  for (const auto& n : builtin_example_names()) {
    matrix.push_back({{"poset", n}, 0});
    matrix.push_back({{"poset", n, "--check", "thm3.9"}, 0});
    matrix.push_back({{"poset", n, "--check", "sublattice"}, 0});
  }
  for (const auto& n : cli::solve_fixture_names()) matrix.push_back({{"solve", n}, n == "reversed" ? 1 : 0});
  matrix.push_back({{"solve", "reversed", "--override"}, 1});
  matrix.push_back({{"solve", "separable", "--max-iter", "3"}, 1});
  matrix.push_back({{"verify", "lemma_9_9"}, 2});
  matrix.push_back({{"verify", "lemma_2_4", "--n-max", "2"}, 2});
  matrix.push_back({{"poset", "remark_3_11", "--grid-step", "0.3"}, 2});
  matrix.push_back({{"solve", "trivial", "--unknown-flag"}, 2});

  int index = 0;
  for (const auto& run : matrix) {
    std::string label;
    for (const auto& a : run.args) label += a + " ";
    std::string first, second;
    int codes[2];
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path out = dir / ("run_" + std::to_string(index) + "_" + std::to_string(rep) + ".json");
      fs::remove(out);
      auto args = run.args;
      args.insert(args.end(), {"--out", out.string()});
      std::ostringstream sout, serr;
      codes[rep] = cli::main_entry(args, sout, serr);
      (rep == 0 ? first : second) = fs::exists(out) ? slurp(out) : sout.str();
    }
    c.expect(codes[0] == run.expected && codes[1] == run.expected,
             label + "exit " + std::to_string(codes[0]) + " expected " + std::to_string(run.expected));
    c.expect(first == second, label + "reports differ between runs");
    if (run.expected != 2) c.expect(!first.empty(), label + "report written");
    ++index;
  }
}

}  // namespace

int main() {
  struct Entry {
    int number;
    const char* title;
    void (*body)(Criterion&);
  };
  const Entry entries[] = {
      {1, "lemma_2_4 suite", criterion_1},
      {2, "example_2_7 suite", criterion_2},
      {3, "lemma_2_8 suite", criterion_3},
      {4, "lemma_2_9 suite", criterion_4},
      {5, "lemma_2_11 suite", criterion_5},
      {6, "normality", criterion_6},
      {7, "poset suite", criterion_7},
      {8, "Knaster-Tarski cross-check", criterion_8},
      {9, "Hammerstein trivial fixture", criterion_9},
      {10, "Hammerstein separable fixture", criterion_10},
      {11, "isotonicity and Holder bound", criterion_11},
      {12, "CLI determinism and exit codes", criterion_12},
  };
  int failed = 0;
  for (const auto& e : entries) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.body(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("unexpected exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < 60, "ran longer than a minute");
    const bool ok = c.passed();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << e.number << ": " << e.title << " (" << c.summary()
              << ", " << format_number(std::round(secs * 100) / 100) << " s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
