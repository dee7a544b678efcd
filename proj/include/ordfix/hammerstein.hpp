#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordfix/error.hpp"
#include "ordfix/quadrature.hpp"

namespace ordfix {

/// c0 + c1 x.
struct ScalarFunction {
  enum class Family { Constant, Affine };
  Family family = Family::Constant;
  double c0 = 0;
  double c1 = 0;

  static ScalarFunction constant(double c) { return {Family::Constant, c, 0}; }
  static ScalarFunction affine(double c0, double c1) { return {Family::Affine, c0, c1}; }
  double operator()(double x) const { return family == Family::Constant ? c0 : c0 + c1 * x; }
};

/// Kernel T(t, s) from a closed family.
struct Kernel {
  enum class Family { Constant, Affine, Separable, Gaussian };
  Family family = Family::Constant;
  double c0 = 0;  // constant value, or affine offset
  double ct = 0;  // affine coefficient of t
  double cs = 0;  // affine coefficient of s
  ScalarFunction g, h;
  double amplitude = 1;
  double width = 1;

  static Kernel constant(double c);
  static Kernel affine(double c0, double ct, double cs);
  static Kernel separable(ScalarFunction g, ScalarFunction h);
  /// amplitude * exp(-(t - s)^2 / (2 width^2)).
  static Kernel gaussian(double amplitude, double width);

  double operator()(double t, double s) const;
};

/// Nonlinearity f(s, u) from a closed family; none of the families depend on s.
struct Nonlinearity {
  enum class Family { Constant, AffineClamped, BoundedSigmoid, Arctan };
  Family family = Family::Constant;
  double a = 0;
  double b = 0;
  std::optional<double> lo, hi;

  static Nonlinearity constant(double c);
  /// clamp(a + b u, lo, hi) with either bound optional.
  static Nonlinearity affine_clamped(double a, double b, std::optional<double> lo = {}, std::optional<double> hi = {});
  /// a + b u / (1 + |u|).
  static Nonlinearity bounded_sigmoid(double a, double b);
  /// a + b atan(u).
  static Nonlinearity arctan(double a, double b);

  double operator()(double s, double u) const;
};

struct HammersteinProblem {
  QuadratureGrid grid;
  Kernel kernel;
  Nonlinearity f;
  double p = 2;
  double q = 2;
  double gamma = 1;

  /// Sets q = p / (p - 1); throws BadParams unless p > 1 and gamma > 0.
  static HammersteinProblem make(QuadratureGrid grid, Kernel kernel, Nonlinearity f, double p, double gamma);
  /// Throws BadParams when the exponents are not conjugate or gamma <= 0.
  void validate() const;
};

/// Σ_i w_i (Σ_j w_j |T(t_i, s_j)|^q)^(p/q). Throws Overflow when not finite.
double compute_lambda(const HammersteinProblem& problem);

struct ConditionVerdict {
  std::string name;
  bool pass = false;
  std::string witness;
  bool exhaustive = true;
};

struct ConditionLog {
  std::vector<ConditionVerdict> verdicts;
  double lambda = 0;
  bool all_pass() const;
};

/// Audits conditions (i)-(iv) at the nodes; the ball condition is sampled.
ConditionLog audit_conditions(const HammersteinProblem& problem, std::size_t ball_samples = 200,
                              std::uint64_t seed = 0);

/// (F x)_i = Σ_j w_j T(t_i, s_j) f(s_j, x_j). Throws EvalFailure on
/// non-finite values and DimensionMismatch on length errors.
std::vector<double> apply_F(const HammersteinProblem& problem, const std::vector<double>& x);

/// ||x - F x||_p in the grid's weighted norm.
double residual(const HammersteinProblem& problem, const std::vector<double>& x);

struct SolveOptions {
  double eps = 1e-12;
  std::size_t max_iter = 1000;
  bool override_audit = false;
  std::size_t ball_samples = 200;
  std::uint64_t seed = 0;
};

struct SolveReport {
  std::size_t iterates_count = 0;
  std::vector<double> nodes;
  std::vector<double> solution;
  double residual_p = 0;
  double norm_p = 0;
  double final_step_p = 0;
  double final_step_sup = 0;
  bool converged = false;
  bool monotone_ok = true;
  bool ball_ok = true;
  bool nonzero_ok = false;
  bool audit_overridden = false;
  double lambda = 0;
  ConditionLog condition_log;
};

/// Failure of the iteration that still carries the partial report.
class SolveFailure : public Error {
 public:
  SolveFailure(ErrorKind kind, const std::string& what, SolveReport report, std::size_t step, std::size_t node)
      : Error(kind, what), report_(std::move(report)), step_(step), node_(node) {}
  const SolveReport& report() const noexcept { return report_; }
  std::size_t step() const noexcept { return step_; }
  std::size_t node() const noexcept { return node_; }

 private:
  SolveReport report_;
  std::size_t step_;
  std::size_t node_;
};

/// Iterates x_0 = 0, x_{k+1} = F x_k until both the p-norm and the sup of the
/// step fall below eps. Throws HypothesisFailed when the audit fails and is
/// not overridden, MonotonicityBroken or NoConvergence as SolveFailure.
SolveReport monotone_solve(const HammersteinProblem& problem, const SolveOptions& options = {});

struct SeparableSolution {
  double c = 0;
  double defect = 0;
  std::vector<double> solution;
};

/// Solves c = Σ_j w_j h(s_j) f(s_j, g(s_j) c) by bracketing and bisection and
/// returns x(t_i) = g(t_i) c. Throws NoBracket when doubling finds no sign
/// change.
SeparableSolution separable_oracle(const ScalarFunction& g, const ScalarFunction& h, const Nonlinearity& f,
                                   const QuadratureGrid& grid, double tol = 1e-14);

struct Exploration {
  std::vector<std::vector<double>> fixed_points;
  std::vector<std::size_t> seed_to_point;
  std::vector<std::size_t> iterations;
  /// comparable[i][j]: fixed points i and j are nodewise ordered.
  std::vector<std::vector<bool>> comparable;
  std::vector<std::size_t> maximal;
};

/// Monotone iteration from every seed; each seed must satisfy seed <= F seed
/// or seed >= F seed nodewise, else BadSeed names its index.
Exploration explore_solution_set(const HammersteinProblem& problem, const std::vector<std::vector<double>>& seeds,
                                 const SolveOptions& options = {});

}  // namespace ordfix
