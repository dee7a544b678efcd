#include "ordfix/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>

#include "ordfix/error.hpp"

namespace ordfix {
namespace {

ExtremePoint segment_extreme(const Segment& seg, bool want_min) {
  ExtremePoint best{seg.poly(seg.from), seg.from};
  auto consider = [&](const Rational& t) {
    Rational v = seg.poly(t);
    if (want_min ? v < best.value : v > best.value) best = {v, t};
  };
  consider(seg.to);
  if (seg.poly.c[2] != 0) {
    Rational vertex = -seg.poly.c[1] / (2 * seg.poly.c[2]);
    if (seg.from < vertex && vertex < seg.to) consider(vertex);
  }
  return best;
}

std::vector<Rational> merged_breakpoints(const PiecewisePoly& f, const PiecewisePoly& g) {
  std::vector<Rational> pts;
  for (const auto& s : f.segments()) pts.push_back(s.from);
  for (const auto& s : g.segments()) pts.push_back(s.from);
  pts.push_back(f.upper());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

/// Segment of f covering the open interval (lo, hi).
const Quadratic& poly_on(const PiecewisePoly& f, const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / 2;
  for (const auto& s : f.segments())
    if (s.from <= mid && mid <= s.to) return s.poly;
  throw Error(ErrorKind::BadParams, "point outside the function's interval");
}

PiecewisePoly combine(const PiecewisePoly& f, const PiecewisePoly& g,
                      const std::function<Quadratic(const Quadratic&, const Quadratic&)>& op) {
  if (f.lower() != g.lower() || f.upper() != g.upper())
    throw Error(ErrorKind::DimensionMismatch, "piecewise functions live on different intervals");
  auto pts = merged_breakpoints(f, g);
  std::vector<Segment> out;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    out.push_back({pts[i], pts[i + 1], op(poly_on(f, pts[i], pts[i + 1]), poly_on(g, pts[i], pts[i + 1]))});
  return PiecewisePoly(std::move(out));
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& x) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  BigInt rn = boost::multiprecision::sqrt(num);
  BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

/// Roots of q strictly inside (lo, hi).
std::vector<Rational> interior_roots(const Quadratic& q, const Rational& lo, const Rational& hi) {
  std::vector<Rational> roots;
  if (q.c[2] == 0) {
    if (q.c[1] != 0) roots.push_back(-q.c[0] / q.c[1]);
  } else {
    Rational disc = q.c[1] * q.c[1] - 4 * q.c[2] * q.c[0];
    if (disc >= 0) {
      auto r = rational_sqrt(disc);
      if (!r) {
        // Only a problem if an irrational crossing actually lies inside.
        double d = std::sqrt(to_double(disc));
        double a2 = 2 * to_double(q.c[2]);
        double b = to_double(q.c[1]);
        for (double root : {(-b - d) / a2, (-b + d) / a2})
          if (to_double(lo) < root && root < to_double(hi))
            throw Error(ErrorKind::Unsupported, "pointwise minimum has an irrational crossing point");
        return roots;
      }
      roots.push_back((-q.c[1] - *r) / (2 * q.c[2]));
      roots.push_back((-q.c[1] + *r) / (2 * q.c[2]));
    }
  }
  std::vector<Rational> inside;
  for (const auto& r : roots)
    if (lo < r && r < hi) inside.push_back(r);
  std::sort(inside.begin(), inside.end());
  inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
  return inside;
}

}  // namespace

int Quadratic::degree() const {
  if (c[2] != 0) return 2;
  if (c[1] != 0) return 1;
  return 0;
}

Quadratic operator+(const Quadratic& a, const Quadratic& b) {
  return {{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]}};
}
Quadratic operator-(const Quadratic& a, const Quadratic& b) {
  return {{a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2]}};
}
Quadratic operator*(const Rational& k, const Quadratic& a) { return {{k * a.c[0], k * a.c[1], k * a.c[2]}}; }

PiecewisePoly::PiecewisePoly(std::vector<Segment> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) throw Error(ErrorKind::BadParams, "piecewise function without segments");
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (!(segments_[i].from < segments_[i].to)) throw Error(ErrorKind::BadParams, "degenerate segment");
    if (i && segments_[i].from != segments_[i - 1].to)
      throw Error(ErrorKind::BadParams, "segments do not tile the interval");
  }
}

PiecewisePoly PiecewisePoly::constant(const Rational& a, const Rational& b, const Rational& value) {
  return PiecewisePoly({{a, b, {{value, 0, 0}}}});
}

const Segment& PiecewisePoly::segment_at(const Rational& t) const {
  if (t < lower() || t > upper())
    throw Error(ErrorKind::BadParams, "t=" + to_string(t) + " outside [" + to_string(lower()) + ", " +
                                          to_string(upper()) + "]");
  for (auto it = segments_.rbegin(); it != segments_.rend(); ++it)
    if (it->from <= t) return *it;
  return segments_.front();
}

Rational PiecewisePoly::operator()(const Rational& t) const { return segment_at(t).poly(t); }

Rational PiecewisePoly::left_limit(const Rational& t) const {
  if (t == lower()) return (*this)(t);
  for (const auto& s : segments_)
    if (s.from < t && t <= s.to) return s.poly(t);
  throw Error(ErrorKind::BadParams, "t outside the interval");
}

Rational PiecewisePoly::right_limit(const Rational& t) const { return segment_at(t).poly(t); }

PiecewisePoly PiecewisePoly::derivative() const {
  std::vector<Segment> out;
  for (const auto& s : segments_) out.push_back({s.from, s.to, s.poly.derivative()});
  return PiecewisePoly(std::move(out));
}

bool PiecewisePoly::is_continuous() const {
  for (std::size_t i = 1; i < segments_.size(); ++i) {
    const Rational& t = segments_[i].from;
    if (segments_[i - 1].poly(t) != segments_[i].poly(t)) return false;
  }
  return true;
}

bool PiecewisePoly::is_c1() const { return is_continuous() && derivative().is_continuous(); }

ExtremePoint PiecewisePoly::minimum() const {
  ExtremePoint best = segment_extreme(segments_.front(), true);
  for (const auto& s : segments_) {
    auto e = segment_extreme(s, true);
    if (e.value < best.value) best = e;
  }
  return best;
}

ExtremePoint PiecewisePoly::maximum() const {
  ExtremePoint best = segment_extreme(segments_.front(), false);
  for (const auto& s : segments_) {
    auto e = segment_extreme(s, false);
    if (e.value > best.value) best = e;
  }
  return best;
}

Rational PiecewisePoly::sup_abs() const {
  Rational hi = maximum().value;
  Rational lo = minimum().value;
  return std::max(abs(hi), abs(lo));
}

PiecewisePoly PiecewisePoly::pointwise_min(const PiecewisePoly& other) const {
  const PiecewisePoly diff = *this - other;
  std::vector<Segment> out;
  for (std::size_t i = 0; i < diff.segments_.size(); ++i) {
    const Segment& d = diff.segments_[i];
    std::vector<Rational> cuts{d.from};
    for (auto& r : interior_roots(d.poly, d.from, d.to)) cuts.push_back(r);
    cuts.push_back(d.to);
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      Rational mid = (cuts[k] + cuts[k + 1]) / 2;
      const Quadratic& mine = poly_on(*this, cuts[k], cuts[k + 1]);
      const Quadratic& theirs = poly_on(other, cuts[k], cuts[k + 1]);
      out.push_back({cuts[k], cuts[k + 1], d.poly(mid) <= 0 ? mine : theirs});
    }
  }
  return PiecewisePoly(std::move(out)).simplified();
}

PiecewisePoly PiecewisePoly::restricted(const Rational& from, const Rational& to) const {
  if (from < lower() || to > upper() || !(from < to))
    throw Error(ErrorKind::BadParams, "restriction interval outside the domain");
  std::vector<Segment> out;
  for (const auto& s : segments_) {
    Rational lo = std::max(s.from, from);
    Rational hi = std::min(s.to, to);
    if (lo < hi) out.push_back({lo, hi, s.poly});
  }
  return PiecewisePoly(std::move(out));
}

PiecewisePoly PiecewisePoly::simplified() const {
  std::vector<Segment> out;
  for (const auto& s : segments_) {
    if (!out.empty() && out.back().poly == s.poly) {
      out.back().to = s.to;
    } else {
      out.push_back(s);
    }
  }
  return PiecewisePoly(std::move(out));
}

PiecewisePoly operator+(const PiecewisePoly& f, const PiecewisePoly& g) {
  return combine(f, g, [](const Quadratic& a, const Quadratic& b) { return a + b; });
}

PiecewisePoly operator-(const PiecewisePoly& f, const PiecewisePoly& g) {
  return combine(f, g, [](const Quadratic& a, const Quadratic& b) { return a - b; });
}

PiecewisePoly operator*(const Rational& k, const PiecewisePoly& f) {
  std::vector<Segment> out;
  for (const auto& s : f.segments_) out.push_back({s.from, s.to, k * s.poly});
  return PiecewisePoly(std::move(out));
}

bool operator==(const PiecewisePoly& f, const PiecewisePoly& g) {
  if (f.lower() != g.lower() || f.upper() != g.upper()) return false;
  const PiecewisePoly d = f - g;
  return std::all_of(d.segments_.begin(), d.segments_.end(),
                     [](const Segment& s) { return s.poly.degree() == 0 && s.poly.c[0] == 0; });
}

}  // namespace ordfix
