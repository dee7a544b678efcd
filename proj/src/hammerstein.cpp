#include "ordfix/hammerstein.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ordfix/claims.hpp"

namespace ordfix {
namespace {

constexpr double kOrderSlack = 1e-12;

bool nodewise_leq(const std::vector<double>& x, const std::vector<double>& y, double slack = kOrderSlack) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i] + slack) return false;
  return true;
}

double sup_distance(const std::vector<double>& x, const std::vector<double>& y) {
  double d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

std::vector<double> minus(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
  return d;
}

double f_power_sum(const HammersteinProblem& pr, const std::vector<double>& x) {
  double acc = 0;
  for (std::size_t j = 0; j < x.size(); ++j)
    acc += pr.grid.weights[j] * std::pow(std::abs(pr.f(pr.grid.nodes[j], x[j])), pr.p);
  return acc;
}

}  // namespace

Kernel Kernel::constant(double c) {
  Kernel k;
  k.family = Family::Constant;
  k.c0 = c;
  return k;
}

Kernel Kernel::affine(double c0, double ct, double cs) {
  Kernel k;
  k.family = Family::Affine;
  k.c0 = c0;
  k.ct = ct;
  k.cs = cs;
  return k;
}

Kernel Kernel::separable(ScalarFunction g, ScalarFunction h) {
  Kernel k;
  k.family = Family::Separable;
  k.g = g;
  k.h = h;
  return k;
}

Kernel Kernel::gaussian(double amplitude, double width) {
  if (!(width > 0)) throw Error(ErrorKind::BadParams, "gaussian kernel width must be positive");
  Kernel k;
  k.family = Family::Gaussian;
  k.amplitude = amplitude;
  k.width = width;
  return k;
}

double Kernel::operator()(double t, double s) const {
  switch (family) {
    case Family::Constant:
      return c0;
    case Family::Affine:
      return c0 + ct * t + cs * s;
    case Family::Separable:
      return g(t) * h(s);
    case Family::Gaussian:
      return amplitude * std::exp(-(t - s) * (t - s) / (2 * width * width));
  }
  return 0;
}

Nonlinearity Nonlinearity::constant(double c) { return {Family::Constant, c, 0, {}, {}}; }

Nonlinearity Nonlinearity::affine_clamped(double a, double b, std::optional<double> lo, std::optional<double> hi) {
  if (lo && hi && *lo > *hi) throw Error(ErrorKind::BadParams, "clamp bounds out of order");
  return {Family::AffineClamped, a, b, lo, hi};
}

Nonlinearity Nonlinearity::bounded_sigmoid(double a, double b) { return {Family::BoundedSigmoid, a, b, {}, {}}; }

Nonlinearity Nonlinearity::arctan(double a, double b) { return {Family::Arctan, a, b, {}, {}}; }

double Nonlinearity::operator()(double, double u) const {
  switch (family) {
    case Family::Constant:
      return a;
    case Family::AffineClamped: {
      double v = a + b * u;
      if (lo) v = std::max(v, *lo);
      if (hi) v = std::min(v, *hi);
      return v;
    }
    case Family::BoundedSigmoid:
      return a + b * u / (1 + std::abs(u));
    case Family::Arctan:
      return a + b * std::atan(u);
  }
  return 0;
}

HammersteinProblem HammersteinProblem::make(QuadratureGrid grid, Kernel kernel, Nonlinearity f, double p,
                                            double gamma) {
  if (!(p > 1) || !std::isfinite(p)) throw Error(ErrorKind::BadParams, "exponent p must exceed 1");
  HammersteinProblem pr{std::move(grid), kernel, f, p, p / (p - 1), gamma};
  pr.validate();
  return pr;
}

void HammersteinProblem::validate() const {
  if (!(p > 1) || !(q > 1) || std::abs(1 / p + 1 / q - 1) > 1e-12)
    throw Error(ErrorKind::BadParams, "p and q must be conjugate exponents above 1");
  if (!(gamma > 0) || !std::isfinite(gamma)) throw Error(ErrorKind::BadParams, "gamma must be positive");
  if (grid.nodes.size() != grid.weights.size() || grid.nodes.empty())
    throw Error(ErrorKind::BadParams, "grid nodes and weights must align");
}

double compute_lambda(const HammersteinProblem& pr) {
  pr.validate();
  const auto& g = pr.grid;
  double lambda = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    double inner = 0;
    for (std::size_t j = 0; j < g.size(); ++j)
      inner += g.weights[j] * std::pow(std::abs(pr.kernel(g.nodes[i], g.nodes[j])), pr.q);
    lambda += g.weights[i] * std::pow(inner, pr.p / pr.q);
  }
  if (!std::isfinite(lambda)) throw Error(ErrorKind::Overflow, "lambda is not finite");
  return lambda;
}

bool ConditionLog::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const ConditionVerdict& v) { return v.pass; });
}

ConditionLog audit_conditions(const HammersteinProblem& pr, std::size_t ball_samples, std::uint64_t seed) {
  pr.validate();
  const auto& g = pr.grid;
  const std::size_t n = g.size();
  ConditionLog log;

  // (i)
  try {
    log.lambda = compute_lambda(pr);
    bool ok = log.lambda > 0;
    log.verdicts.push_back({"i_lambda_finite", ok, "lambda=" + format_number(log.lambda), true});
  } catch (const Error& e) {
    log.lambda = std::numeric_limits<double>::infinity();
    log.verdicts.push_back({"i_lambda_finite", false, e.what(), true});
  }

  // (ii)
  {
    ConditionVerdict v{"ii_kernel_positive", true, "min over node pairs", true};
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n && v.pass; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double k = pr.kernel(g.nodes[i], g.nodes[j]);
        worst = std::min(worst, k);
        if (!(k > 0)) {
          v.pass = false;
          v.witness = "T(" + format_number(g.nodes[i]) + "," + format_number(g.nodes[j]) + ")=" + format_number(k);
          break;
        }
      }
    if (v.pass) v.witness = "min T=" + format_number(worst);
    log.verdicts.push_back(v);
  }

  // (iii): the ladder spans every value a node can take inside the ball.
  const double min_w = *std::min_element(g.weights.begin(), g.weights.end());
  const double reach = pr.gamma / std::pow(min_w, 1 / pr.p);
  {
    ConditionVerdict v{"iii_f_increasing", true, "", true};
    constexpr int kRungs = 200;
    for (std::size_t j = 0; j < n && v.pass; ++j) {
      const double s = g.nodes[j];
      double prev_u = -reach, prev = pr.f(s, prev_u);
      for (int r = 1; r <= kRungs; ++r) {
        double u = -reach + 2 * reach * r / kRungs;
        double val = pr.f(s, u);
        if (val < prev) {
          v.pass = false;
          v.witness = "f(" + format_number(s) + "," + format_number(prev_u) + ")=" + format_number(prev) + " > f(" +
                      format_number(s) + "," + format_number(u) + ")=" + format_number(val);
          break;
        }
        prev = val;
        prev_u = u;
      }
      if (!v.pass) break;
      double f0 = pr.f(s, 0.0);
      if (!(f0 > 0)) {
        v.pass = false;
        v.witness = "f(" + format_number(s) + ",0)=" + format_number(f0);
      }
    }
    if (v.pass) v.witness = "ladder over [-" + format_number(reach) + "," + format_number(reach) + "]";
    log.verdicts.push_back(v);
  }

  // (iv), sampled.
  {
    const double bound = std::pow(pr.gamma, pr.p) / log.lambda;
    std::vector<std::pair<std::string, std::vector<double>>> samples;
    auto scaled = [&](std::vector<double> x, double radius) {
      double nrm = weighted_p_norm(g, x, pr.p);
      if (nrm > 0)
        for (double& v : x) v *= radius / nrm;
      return x;
    };
    samples.emplace_back("constant+", scaled(std::vector<double>(n, 1.0), pr.gamma));
    samples.emplace_back("constant-", scaled(std::vector<double>(n, -1.0), pr.gamma));
    std::vector<double> alt(n);
    for (std::size_t j = 0; j < n; ++j) alt[j] = j % 2 ? -1.0 : 1.0;
    samples.emplace_back("alternating", scaled(alt, pr.gamma));
    const std::size_t argmin_w = static_cast<std::size_t>(std::min_element(g.weights.begin(), g.weights.end()) - g.weights.begin());
    for (std::size_t j : {std::size_t{0}, n / 2, n - 1, argmin_w})
      for (double sign : {1.0, -1.0}) {
        std::vector<double> spike(n, 0.0);
        spike[j] = sign;
        samples.emplace_back("spike@" + std::to_string(j) + (sign > 0 ? "+" : "-"), scaled(spike, pr.gamma));
      }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> unit;
    for (std::size_t k = 0; k < ball_samples; ++k) {
      std::vector<double> x(n);
      for (double& v : x) v = normal(rng);
      samples.emplace_back("random#" + std::to_string(k), scaled(x, pr.gamma * unit(rng)));
    }
    ConditionVerdict v{"iv_ball_bound", true, "", false};
    double worst = -1;
    std::string worst_name;
    for (const auto& [name, x] : samples) {
      double s = f_power_sum(pr, x);
      if (s > worst) {
        worst = s;
        worst_name = name;
      }
    }
    v.pass = std::isfinite(bound) && worst <= bound * (1 + 1e-12);
    v.witness = "max sum w|f|^p=" + format_number(worst) + " at " + worst_name + " vs gamma^p/lambda=" +
                format_number(bound) + " over " + std::to_string(samples.size()) + " samples";
    log.verdicts.push_back(v);
  }
  return log;
}

std::vector<double> apply_F(const HammersteinProblem& pr, const std::vector<double>& x) {
  const auto& g = pr.grid;
  if (x.size() != g.size()) throw Error(ErrorKind::DimensionMismatch, "iterate length differs from grid size");
  std::vector<double> fx(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    fx[j] = g.weights[j] * pr.f(g.nodes[j], x[j]);
    if (!std::isfinite(fx[j])) throw Error(ErrorKind::EvalFailure, "f is not finite at node " + std::to_string(j));
  }
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j) acc += pr.kernel(g.nodes[i], g.nodes[j]) * fx[j];
    if (!std::isfinite(acc)) throw Error(ErrorKind::EvalFailure, "F x is not finite at node " + std::to_string(i));
    out[i] = acc;
  }
  return out;
}

double residual(const HammersteinProblem& pr, const std::vector<double>& x) {
  return weighted_p_norm(pr.grid, minus(x, apply_F(pr, x)), pr.p);
}

SolveReport monotone_solve(const HammersteinProblem& pr, const SolveOptions& opt) {
  SolveReport report;
  report.nodes = pr.grid.nodes;
  report.condition_log = audit_conditions(pr, opt.ball_samples, opt.seed);
  report.lambda = report.condition_log.lambda;
  if (!report.condition_log.all_pass()) {
    if (!opt.override_audit) {
      std::string failed;
      for (const auto& v : report.condition_log.verdicts)
        if (!v.pass) failed += (failed.empty() ? "" : ", ") + v.name + " (" + v.witness + ")";
      throw Error(ErrorKind::HypothesisFailed, "conditions failed: " + failed);
    }
    report.audit_overridden = true;
  }

  std::vector<double> x(pr.grid.size(), 0.0);
  for (std::size_t k = 0; k < opt.max_iter; ++k) {
    std::vector<double> next = apply_F(pr, x);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (next[i] < x[i] - kOrderSlack) {
        report.monotone_ok = false;
        report.iterates_count = k + 1;
        report.solution = next;
        throw SolveFailure(ErrorKind::MonotonicityBroken,
                           "iterate " + std::to_string(k + 1) + " decreases at node " + std::to_string(i), report,
                           k + 1, i);
      }
    if (weighted_p_norm(pr.grid, next, pr.p) > pr.gamma * (1 + 1e-12)) report.ball_ok = false;
    auto step = minus(next, x);
    report.final_step_p = weighted_p_norm(pr.grid, step, pr.p);
    report.final_step_sup = sup_distance(next, x);
    x = std::move(next);
    report.iterates_count = k + 1;
    if (report.final_step_p < opt.eps && report.final_step_sup < opt.eps) {
      report.converged = true;
      break;
    }
  }
  report.solution = x;
  report.norm_p = weighted_p_norm(pr.grid, x, pr.p);
  report.residual_p = residual(pr, x);
  report.nonzero_ok = report.norm_p > 10 * opt.eps;
  if (!report.converged)
    throw SolveFailure(ErrorKind::NoConvergence,
                       "no convergence in " + std::to_string(opt.max_iter) + " iterations; last step " +
                           format_number(report.final_step_p),
                       report, opt.max_iter, 0);
  return report;
}

SeparableSolution separable_oracle(const ScalarFunction& g, const ScalarFunction& h, const Nonlinearity& f,
                                   const QuadratureGrid& grid, double tol) {
  auto phi = [&](double c) {
    double acc = 0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const double s = grid.nodes[j];
      acc += grid.weights[j] * h(s) * f(s, g(s) * c);
    }
    return acc - c;
  };
  for (double t : grid.nodes)
    if (!(g(t) > 0)) throw Error(ErrorKind::BadParams, "g must be positive at every node");

  SeparableSolution out;
  auto finish = [&](double c) {
    out.c = c;
    out.defect = phi(c);
    out.solution.clear();
    for (double t : grid.nodes) out.solution.push_back(g(t) * c);
    return out;
  };
  const double at_zero = phi(0.0);
  if (std::abs(at_zero) <= tol) return finish(0.0);

  const double direction = at_zero > 0 ? 1.0 : -1.0;
  double lo = 0.0, hi = direction;
  int doublings = 0;
  while ((phi(hi) > 0) == (at_zero > 0)) {
    lo = hi;
    hi *= 2;
    if (++doublings > 60)
      throw Error(ErrorKind::NoBracket, "no sign change of the scalar defect on [0, " + format_number(hi) + "]");
  }
  // Invariant: phi(lo) has the sign of phi(0), phi(hi) the opposite sign.
  for (int iter = 0; iter < 400; ++iter) {
    double mid = lo + (hi - lo) / 2;
    if (mid == lo || mid == hi) break;
    double v = phi(mid);
    if (v == 0) return finish(mid);
    if ((v > 0) == (at_zero > 0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double c = std::abs(phi(lo)) <= std::abs(phi(hi)) ? lo : hi;
  finish(c);
  if (std::abs(out.defect) > tol)
    throw Error(ErrorKind::NoBracket, "bisection stalled with defect " + format_number(out.defect));
  return out;
}

Exploration explore_solution_set(const HammersteinProblem& pr, const std::vector<std::vector<double>>& seeds,
                                 const SolveOptions& opt) {
  Exploration out;
  const double distinct_tol = std::max(1e3 * opt.eps, 1e-9);
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    std::vector<double> x = seeds[s];
    if (x.size() != pr.grid.size()) throw Error(ErrorKind::DimensionMismatch, "seed length differs from grid size");
    std::vector<double> fx = apply_F(pr, x);
    const bool up = nodewise_leq(x, fx), down = nodewise_leq(fx, x);
    if (!up && !down)
      throw Error(ErrorKind::BadSeed, "seed " + std::to_string(s) + " is neither below nor above its image");
    std::size_t k = 0;
    for (; k < opt.max_iter; ++k) {
      if (k > 0) fx = apply_F(pr, x);
      if (!(up ? nodewise_leq(x, fx) : nodewise_leq(fx, x)))
        throw Error(ErrorKind::MonotonicityBroken,
                    "iteration from seed " + std::to_string(s) + " lost monotonicity at step " + std::to_string(k + 1));
      const double step_p = weighted_p_norm(pr.grid, minus(fx, x), pr.p);
      const double step_sup = sup_distance(fx, x);
      x = std::move(fx);
      if (step_p < opt.eps && step_sup < opt.eps) break;
    }
    if (k == opt.max_iter)
      throw Error(ErrorKind::NoConvergence, "seed " + std::to_string(s) + " did not converge");
    out.iterations.push_back(k + 1);

    std::size_t match = out.fixed_points.size();
    for (std::size_t i = 0; i < out.fixed_points.size(); ++i)
      if (weighted_p_norm(pr.grid, minus(out.fixed_points[i], x), pr.p) <= distinct_tol) {
        match = i;
        break;
      }
    if (match == out.fixed_points.size()) out.fixed_points.push_back(x);
    out.seed_to_point.push_back(match);
  }

  const std::size_t m = out.fixed_points.size();
  out.comparable.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      out.comparable[i][j] = nodewise_leq(out.fixed_points[i], out.fixed_points[j]) ||
                             nodewise_leq(out.fixed_points[j], out.fixed_points[i]);
  for (std::size_t i = 0; i < m; ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < m && !dominated; ++j)
      dominated = j != i && nodewise_leq(out.fixed_points[i], out.fixed_points[j]);
    if (!dominated) out.maximal.push_back(i);
  }
  return out;
}

}  // namespace ordfix
