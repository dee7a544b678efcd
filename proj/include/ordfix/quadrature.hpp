#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ordfix {

enum class QuadratureRule { Trapezoid, GaussLegendre };

/// Throws BadRule for names other than "trapezoid" and "gauss_legendre".
QuadratureRule parse_rule(std::string_view name);
std::string to_string(QuadratureRule rule);

struct QuadratureGrid {
  double a = 0;
  double b = 1;
  QuadratureRule rule = QuadratureRule::Trapezoid;
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// Composite trapezoid with `count` equispaced nodes, or the `count`-point
/// Gauss-Legendre rule mapped to [a, b]. Throws BadParams unless a < b and
/// BadCount unless 2 <= count <= 100000.
QuadratureGrid build_grid(double a, double b, std::size_t count, QuadratureRule rule);

/// (Σ w_i |x_i|^p)^(1/p).
double weighted_p_norm(const QuadratureGrid& grid, const std::vector<double>& x, double p);

}  // namespace ordfix
