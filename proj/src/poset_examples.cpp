#include "ordfix/poset_examples.hpp"

#include <algorithm>
#include <functional>

#include "ordfix/error.hpp"

namespace ordfix {
namespace {

GridPoint pt(double s, double t) { return {Dyadic::from_double(s), Dyadic::from_double(t)}; }

/// Twice the signed area of (a, b, c); zero iff collinear.
Dyadic cross(const GridPoint& a, const GridPoint& b, const GridPoint& c) {
  return (b.s - a.s) * (c.t - a.t) - (b.t - a.t) * (c.s - a.s);
}

bool on_segment(const GridPoint& p, const GridPoint& a, const GridPoint& b) {
  return cross(a, b, p) == Dyadic(0) && std::min(a.s, b.s) <= p.s && p.s <= std::max(a.s, b.s) &&
         std::min(a.t, b.t) <= p.t && p.t <= std::max(a.t, b.t);
}

/// Closed convex polygon with counter-clockwise vertices.
bool in_convex_polygon(const GridPoint& p, const std::vector<GridPoint>& ccw) {
  for (std::size_t i = 0; i < ccw.size(); ++i)
    if (cross(ccw[i], ccw[(i + 1) % ccw.size()], p) < Dyadic(0)) return false;
  return true;
}

std::vector<GridPoint> grid_points(const Dyadic& step, const Dyadic& lo, const Dyadic& hi) {
  std::vector<GridPoint> out;
  for (Dyadic s = lo; s <= hi; s = s + step)
    for (Dyadic t = lo; t <= hi; t = t + step) out.push_back({s, t});
  return out;
}

Dyadic checked_step(double grid_step) {
  if (!(grid_step > 0)) throw Error(ErrorKind::BadGridStep, "grid step must be positive");
  Dyadic step = Dyadic::from_double(grid_step);
  if (!Dyadic::from_parts(1, 1).divisible_by(step))
    throw Error(ErrorKind::BadGridStep, "cited points (1,1), (1.5,0.5), (1,2), (2,1) are not all grid points for step " +
                                            step.to_string());
  return step;
}

Element must_find(const FinitePoset& poset, const GridPoint& p) {
  auto e = poset.find_point(p);
  if (!e) throw Error(ErrorKind::BadGridStep, p.name() + " is not a grid point");
  return *e;
}

PosetExample finish(std::string name, std::vector<GridPoint> points,
                    const std::function<std::vector<GridPoint>(const GridPoint&)>& image,
                    const std::function<bool(const GridPoint&)>& expected_fixed, GridPoint a, GridPoint b) {
  PosetExample ex;
  ex.name = std::move(name);
  ex.poset = FinitePoset::from_points(std::move(points));
  std::vector<ElementSet> images;
  for (Element x = 0; x < ex.poset.size(); ++x) {
    ElementSet img;
    for (const auto& q : image(ex.poset.point(x))) img.push_back(must_find(ex.poset, q));
    images.push_back(make_set(std::move(img)));
    if (expected_fixed(ex.poset.point(x))) ex.expected_fixed.push_back(x);
  }
  ex.map = SetValuedMap(ex.poset, ex.poset.all(), std::move(images));
  ex.seed = must_find(ex.poset, pt(0, 0));
  ex.cited_pair = {must_find(ex.poset, a), must_find(ex.poset, b)};
  return ex;
}

PosetExample remark_3_11(const Dyadic& step) {
  const Dyadic one(1);
  auto image = [&](const GridPoint& p) -> std::vector<GridPoint> {
    if (p.s < one) return {{p.s, p.s}};
    return {{p.s, p.s}, {p.s, p.s - one}};
  };
  auto expected = [](const GridPoint& p) {
    return on_segment(p, pt(0, 0), pt(2, 2)) || on_segment(p, pt(1, 0), pt(2, 1));
  };
  return finish("remark_3_11", grid_points(step, Dyadic(0), Dyadic(2)), image, expected, pt(1, 1), pt(1.5, 0.5));
}

std::vector<GridPoint> four_point_fixed_set() { return {pt(0, 0), pt(1, 2), pt(2, 1), pt(3, 3)}; }

bool is_four_point_fixed(const GridPoint& p) {
  auto pts = four_point_fixed_set();
  return std::find(pts.begin(), pts.end(), p) != pts.end();
}

PosetExample example_3_12_1(const Dyadic& step) {
  std::vector<GridPoint> points;
  for (const auto& p : grid_points(step, Dyadic(0), Dyadic(3))) {
    if (on_segment(p, pt(0, 0), pt(1, 1)) || on_segment(p, pt(2, 2), pt(3, 3)) || p == pt(1, 2) || p == pt(2, 1))
      points.push_back(p);
  }
  auto image = [](const GridPoint& p) -> std::vector<GridPoint> {
    if (p == pt(1, 2) || p == pt(2, 1)) return {p};
    if (on_segment(p, pt(0, 0), pt(1, 1))) return {pt(0, 0)};
    return {pt(3, 3)};
  };
  return finish("example_3_12_1", std::move(points), image, is_four_point_fixed, pt(1, 2), pt(2, 1));
}

PosetExample example_3_12_2(const Dyadic& step) {
  const std::vector<GridPoint> quad{pt(0, 0), pt(2, 1), pt(3, 3), pt(1, 2)};
  std::vector<GridPoint> points;
  for (const auto& p : grid_points(step, Dyadic(0), Dyadic(3)))
    if (in_convex_polygon(p, quad)) points.push_back(p);
  const Dyadic three(3);
  auto image = [&](const GridPoint& p) -> std::vector<GridPoint> {
    if (p == pt(1, 2) || p == pt(2, 1)) return {p};
    // Below the line s + t = 3 is the lower triangle minus the segment C.
    if (p.s + p.t < three) return {pt(0, 0)};
    return {pt(3, 3)};
  };
  return finish("example_3_12_2", std::move(points), image, is_four_point_fixed, pt(1, 2), pt(2, 1));
}

}  // namespace

const std::vector<std::string>& builtin_example_names() {
  static const std::vector<std::string> names{"remark_3_11", "example_3_12_1", "example_3_12_2"};
  return names;
}

PosetExample builtin_example(std::string_view name, double grid_step) {
  if (std::find(builtin_example_names().begin(), builtin_example_names().end(), name) ==
      builtin_example_names().end())
    throw Error(ErrorKind::UnknownFixture, "unknown poset example '" + std::string(name) + "'");
  const Dyadic step = checked_step(grid_step);
  if (name == "remark_3_11") return remark_3_11(step);
  if (name == "example_3_12_1") return example_3_12_1(step);
  return example_3_12_2(step);
}

}  // namespace ordfix
