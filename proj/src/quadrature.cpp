#include "ordfix/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "ordfix/error.hpp"

namespace ordfix {
namespace {

void gauss_legendre_unit(std::size_t n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const double dn = static_cast<double>(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (dn + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = z;
      for (std::size_t k = 2; k <= n; ++k) {
        double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1.0;
      dp = dn * (z * p1 - p0) / (z * z - 1.0);
      double step = p1 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double weight = 2.0 / ((1.0 - z * z) * dp * dp);
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = weight;
    w[n - 1 - i] = weight;
  }
  if (n % 2 == 1) x[n / 2] = 0.0;
}

}  // namespace

QuadratureRule parse_rule(std::string_view name) {
  if (name == "trapezoid") return QuadratureRule::Trapezoid;
  if (name == "gauss_legendre") return QuadratureRule::GaussLegendre;
  throw Error(ErrorKind::BadRule, "unknown quadrature rule '" + std::string(name) + "'");
}

std::string to_string(QuadratureRule rule) {
  return rule == QuadratureRule::Trapezoid ? "trapezoid" : "gauss_legendre";
}

QuadratureGrid build_grid(double a, double b, std::size_t count, QuadratureRule rule) {
  if (!(std::isfinite(a) && std::isfinite(b) && a < b)) throw Error(ErrorKind::BadParams, "domain needs a < b");
  if (count < 2 || count > 100000)
    throw Error(ErrorKind::BadCount, "node count " + std::to_string(count) + " outside [2, 100000]");
  QuadratureGrid g{a, b, rule, {}, {}};
  if (rule == QuadratureRule::Trapezoid) {
    const double h = (b - a) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
      g.nodes.push_back(i + 1 == count ? b : a + h * static_cast<double>(i));
      g.weights.push_back(i == 0 || i + 1 == count ? h / 2 : h);
    }
  } else {
    std::vector<double> x, w;
    gauss_legendre_unit(count, x, w);
    const double mid = (a + b) / 2, half = (b - a) / 2;
    for (std::size_t i = 0; i < count; ++i) {
      g.nodes.push_back(mid + half * x[i]);
      g.weights.push_back(half * w[i]);
    }
  }
  return g;
}

double weighted_p_norm(const QuadratureGrid& grid, const std::vector<double>& x, double p) {
  if (x.size() != grid.size()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from grid size");
  double acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += grid.weights[i] * std::pow(std::abs(x[i]), p);
  return std::pow(acc, 1.0 / p);
}

}  // namespace ordfix
