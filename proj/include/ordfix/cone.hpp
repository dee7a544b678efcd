#pragma once

#include <cstddef>
#include <vector>

#include "ordfix/piecewise.hpp"
#include "ordfix/rational.hpp"

namespace ordfix {

using RealVector = std::vector<double>;
using ExactVector = std::vector<Rational>;

enum class ConeKind { Componentwise, IceCream2d, PointwiseFunction, C1Pair };

/// Positive cone inducing an order; `tolerance` relaxes membership for
/// floating-point inputs only.
struct ConeSpec {
  ConeKind kind = ConeKind::Componentwise;
  std::size_t dim = 0;
  double tolerance = 1e-12;

  static ConeSpec componentwise(std::size_t n) { return {ConeKind::Componentwise, n, 1e-12}; }
  static ConeSpec ice_cream_2d() { return {ConeKind::IceCream2d, 2, 1e-12}; }
  static ConeSpec pointwise_function() { return {ConeKind::PointwiseFunction, 0, 1e-12}; }
  static ConeSpec c1_pair() { return {ConeKind::C1Pair, 0, 1e-12}; }
};

enum class NormKind { SupAbs, Ell1, EllP, C1Sum, LpQuadrature };

struct NormSpec {
  NormKind kind = NormKind::SupAbs;
  double p = 2.0;
  std::vector<double> weights;

  static NormSpec sup_abs() { return {NormKind::SupAbs, 2.0, {}}; }
  static NormSpec ell1() { return {NormKind::Ell1, 1.0, {}}; }
  static NormSpec ellp(double p) { return {NormKind::EllP, p, {}}; }
  static NormSpec c1_sum() { return {NormKind::C1Sum, 2.0, {}}; }
  static NormSpec lp_quadrature(double p, std::vector<double> w) { return {NormKind::LpQuadrature, p, std::move(w)}; }
};

// Membership. Vectors must match the cone's dimension; functions must use a
// function cone. Violations throw DimensionMismatch.
bool cone_member(const ConeSpec& cone, const ExactVector& v);
bool cone_member(const ConeSpec& cone, const RealVector& v);
bool cone_member(const ConeSpec& cone, const PiecewisePoly& v);

ExactVector difference(const ExactVector& y, const ExactVector& x);
RealVector difference(const RealVector& y, const RealVector& x);
PiecewisePoly difference(const PiecewisePoly& y, const PiecewisePoly& x);

/// x ≼ y, i.e. y − x lies in the cone.
template <class E>
bool order_leq(const E& x, const E& y, const ConeSpec& cone) {
  return cone_member(cone, difference(y, x));
}

// Exact norms for rational data: sup_abs and ell1 on vectors, sup_abs and
// c1_sum on piecewise polynomials. Root-based norms need the floating-point
// overload and throw Unsupported here.
Rational norm_eval(const ExactVector& x, const NormSpec& norm);
Rational norm_eval(const PiecewisePoly& x, const NormSpec& norm);
double norm_eval(const RealVector& x, const NormSpec& norm);

inline double as_double(double x) { return x; }
inline double as_double(const Rational& x) { return to_double(x); }

/// Cone together with a norm; the unit all sequence probes work in.
template <class E>
struct OrderedSpace {
  ConeSpec cone;
  NormSpec norm;

  bool leq(const E& x, const E& y) const { return order_leq(x, y, cone); }
  auto distance(const E& x, const E& y) const { return norm_eval(difference(y, x), norm); }
  auto norm_of(const E& x) const { return norm_eval(x, norm); }
};

}  // namespace ordfix
