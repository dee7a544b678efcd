#include "ordfix/cone.hpp"

#include <algorithm>
#include <cmath>

#include "ordfix/error.hpp"

namespace ordfix {
namespace {

void require_vector_cone(const ConeSpec& cone, std::size_t n) {
  switch (cone.kind) {
    case ConeKind::Componentwise:
      if (cone.dim != n)
        throw Error(ErrorKind::DimensionMismatch, "componentwise cone of dimension " + std::to_string(cone.dim) +
                                                      " given a vector of length " + std::to_string(n));
      return;
    case ConeKind::IceCream2d:
      if (n != 2)
        throw Error(ErrorKind::DimensionMismatch, "ice-cream cone needs a 2-vector, got length " + std::to_string(n));
      return;
    default:
      throw Error(ErrorKind::DimensionMismatch, "function cone given a finite vector");
  }
}

template <class T>
void require_same_length(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::DimensionMismatch,
                "vectors of lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

}  // namespace

bool cone_member(const ConeSpec& cone, const ExactVector& v) {
  require_vector_cone(cone, v.size());
  if (cone.kind == ConeKind::IceCream2d) return abs(v[0]) <= v[1];
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x >= 0; });
}

bool cone_member(const ConeSpec& cone, const RealVector& v) {
  require_vector_cone(cone, v.size());
  const double tol = cone.tolerance;
  if (cone.kind == ConeKind::IceCream2d) return std::abs(v[0]) <= v[1] + tol;
  return std::all_of(v.begin(), v.end(), [tol](double x) { return x >= -tol; });
}

bool cone_member(const ConeSpec& cone, const PiecewisePoly& v) {
  switch (cone.kind) {
    case ConeKind::PointwiseFunction:
      return v.minimum().value >= 0;
    case ConeKind::C1Pair:
      return v.minimum().value >= 0 && v.derivative().minimum().value >= 0;
    default:
      throw Error(ErrorKind::DimensionMismatch, "vector cone given a function");
  }
}

ExactVector difference(const ExactVector& y, const ExactVector& x) {
  require_same_length(y, x);
  ExactVector d(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) d[i] = y[i] - x[i];
  return d;
}

RealVector difference(const RealVector& y, const RealVector& x) {
  require_same_length(y, x);
  RealVector d(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) d[i] = y[i] - x[i];
  return d;
}

PiecewisePoly difference(const PiecewisePoly& y, const PiecewisePoly& x) { return y - x; }

Rational norm_eval(const ExactVector& x, const NormSpec& norm) {
  Rational acc = 0;
  switch (norm.kind) {
    case NormKind::SupAbs:
      for (const auto& v : x) acc = std::max(acc, abs(v));
      return acc;
    case NormKind::Ell1:
      for (const auto& v : x) acc += abs(v);
      return acc;
    case NormKind::EllP:
      if (norm.p == 1.0) return norm_eval(x, NormSpec::ell1());
      throw Error(ErrorKind::Unsupported, "p-norm of an exact vector; evaluate in floating point");
    default:
      throw Error(ErrorKind::DimensionMismatch, "norm is not defined on finite vectors");
  }
}

Rational norm_eval(const PiecewisePoly& x, const NormSpec& norm) {
  switch (norm.kind) {
    case NormKind::SupAbs:
      return x.sup_abs();
    case NormKind::C1Sum:
      return x.sup_abs() + x.derivative().sup_abs();
    default:
      throw Error(ErrorKind::DimensionMismatch, "norm is not defined on piecewise functions");
  }
}

double norm_eval(const RealVector& x, const NormSpec& norm) {
  double acc = 0;
  switch (norm.kind) {
    case NormKind::SupAbs:
      for (double v : x) acc = std::max(acc, std::abs(v));
      return acc;
    case NormKind::Ell1:
      for (double v : x) acc += std::abs(v);
      return acc;
    case NormKind::EllP:
      if (!(norm.p >= 1)) throw Error(ErrorKind::BadParams, "p-norm needs p >= 1");
      for (double v : x) acc += std::pow(std::abs(v), norm.p);
      return std::pow(acc, 1.0 / norm.p);
    case NormKind::LpQuadrature:
      if (!(norm.p >= 1)) throw Error(ErrorKind::BadParams, "p-norm needs p >= 1");
      if (norm.weights.size() != x.size())
        throw Error(ErrorKind::DimensionMismatch, "quadrature weights and samples differ in length");
      for (std::size_t i = 0; i < x.size(); ++i) acc += norm.weights[i] * std::pow(std::abs(x[i]), norm.p);
      return std::pow(acc, 1.0 / norm.p);
    default:
      throw Error(ErrorKind::DimensionMismatch, "norm is not defined on finite vectors");
  }
}

}  // namespace ordfix
