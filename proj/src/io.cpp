#include "ordfix/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "ordfix/error.hpp"

namespace ordfix::io {
namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::BadConfig, msg); }

void require_keys(const Json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) bad(where + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; });
    if (!known) bad("unknown key '" + key + "' in " + where);
  }
}

Rational rational_of(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      bad(std::string("bad rational: ") + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long long>());
  bad("rationals must be \"p/q\" strings or integers, got " + j.dump());
}

double number_of(const Json& j, const std::string& key, std::optional<double> fallback = {}) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    bad("missing number '" + key + "'");
  }
  const Json& v = j.at(key);
  if (!v.is_number()) bad("'" + key + "' must be a number");
  double x = v.get<double>();
  if (!std::isfinite(x)) bad("'" + key + "' must be finite");
  return x;
}

std::optional<double> optional_number(const Json& j, const std::string& key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return number_of(j, key);
}

std::string family_of(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string())
    bad(where + " needs a string 'family'");
  return j.at("family").get<std::string>();
}

ScalarFunction scalar_function_of(const Json& j, const std::string& where) {
  const std::string fam = family_of(j, where);
  if (fam == "constant") {
    require_keys(j, where, {"family", "c"});
    return ScalarFunction::constant(number_of(j, "c"));
  }
  if (fam == "affine") {
    require_keys(j, where, {"family", "c0", "c1"});
    return ScalarFunction::affine(number_of(j, "c0", 0.0), number_of(j, "c1", 0.0));
  }
  bad("unknown " + where + " family '" + fam + "'");
}

Kernel kernel_of(const Json& j) {
  const std::string fam = family_of(j, "kernel");
  if (fam == "constant") {
    require_keys(j, "kernel", {"family", "c"});
    return Kernel::constant(number_of(j, "c"));
  }
  if (fam == "affine") {
    require_keys(j, "kernel", {"family", "c0", "ct", "cs"});
    return Kernel::affine(number_of(j, "c0", 0.0), number_of(j, "ct", 0.0), number_of(j, "cs", 0.0));
  }
  if (fam == "separable") {
    require_keys(j, "kernel", {"family", "g", "h"});
    if (!j.contains("g") || !j.contains("h")) bad("separable kernel needs 'g' and 'h'");
    return Kernel::separable(scalar_function_of(j.at("g"), "kernel.g"), scalar_function_of(j.at("h"), "kernel.h"));
  }
  if (fam == "gaussian") {
    require_keys(j, "kernel", {"family", "amplitude", "width"});
    return Kernel::gaussian(number_of(j, "amplitude", 1.0), number_of(j, "width"));
  }
  bad("unknown kernel family '" + fam + "'");
}

Nonlinearity nonlinearity_of(const Json& j) {
  const std::string fam = family_of(j, "nonlinearity");
  if (fam == "constant") {
    require_keys(j, "nonlinearity", {"family", "c"});
    return Nonlinearity::constant(number_of(j, "c"));
  }
  if (fam == "affine_clamped") {
    require_keys(j, "nonlinearity", {"family", "a", "b", "lo", "hi"});
    return Nonlinearity::affine_clamped(number_of(j, "a"), number_of(j, "b"), optional_number(j, "lo"),
                                        optional_number(j, "hi"));
  }
  if (fam == "bounded_sigmoid") {
    require_keys(j, "nonlinearity", {"family", "a", "b"});
    return Nonlinearity::bounded_sigmoid(number_of(j, "a"), number_of(j, "b"));
  }
  if (fam == "arctan") {
    require_keys(j, "nonlinearity", {"family", "a", "b"});
    return Nonlinearity::arctan(number_of(j, "a"), number_of(j, "b"));
  }
  bad("unknown nonlinearity family '" + fam + "'");
}

GridPoint point_of(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    bad("coordinate elements must be [s, t] number pairs, got " + j.dump());
  return {Dyadic::from_double(j[0].get<double>()), Dyadic::from_double(j[1].get<double>())};
}

std::string element_name(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return point_of(j).name();
}

void check_finite(const Json& j, const std::string& path) {
  if (j.is_number_float() && !std::isfinite(j.get<double>()))
    throw Error(ErrorKind::InvalidReport, "non-finite number at " + path);
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) check_finite(j[i], path + "[" + std::to_string(i) + "]");
  } else if (j.is_object()) {
    for (const auto& [key, value] : j.items()) check_finite(value, path + "." + key);
  }
}

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json to_json(const PiecewisePoly& f) {
  Json segs = Json::array();
  for (const auto& s : f.segments()) {
    Json coeffs = Json::array();
    for (const auto& c : s.poly.c) coeffs.push_back(to_string(c));
    segs.push_back({{"from", to_string(s.from)}, {"to", to_string(s.to)}, {"coeffs", coeffs}});
  }
  return {{"interval", Json::array({to_string(f.lower()), to_string(f.upper())})}, {"segments", segs}};
}

PiecewisePoly piecewise_from_json(const Json& j) {
  require_keys(j, "piecewise polynomial", {"interval", "segments"});
  if (!j.contains("segments") || !j.at("segments").is_array()) bad("'segments' must be an array");
  std::vector<Segment> segs;
  for (const auto& s : j.at("segments")) {
    require_keys(s, "segment", {"from", "to", "coeffs"});
    if (!s.contains("from") || !s.contains("to") || !s.contains("coeffs")) bad("segment needs from, to, coeffs");
    const Json& c = s.at("coeffs");
    if (!c.is_array() || c.empty() || c.size() > 3) bad("'coeffs' must hold 1 to 3 entries");
    Quadratic q{{Rational(0), Rational(0), Rational(0)}};
    for (std::size_t k = 0; k < c.size(); ++k) q.c[k] = rational_of(c[k]);
    segs.push_back({rational_of(s.at("from")), rational_of(s.at("to")), q});
  }
  PiecewisePoly f;
  try {
    f = PiecewisePoly(std::move(segs));
  } catch (const Error& e) {
    bad(e.what());
  }
  if (j.contains("interval")) {
    const Json& iv = j.at("interval");
    if (!iv.is_array() || iv.size() != 2) bad("'interval' must be [a, b]");
    if (rational_of(iv[0]) != f.lower() || rational_of(iv[1]) != f.upper())
      bad("'interval' disagrees with the segments");
  }
  return f;
}

Json to_json(const ClaimReport& report) {
  Json out = Json::array();
  for (const auto& c : report.claims)
    out.push_back({{"claim", c.id}, {"expected", c.expected}, {"measured", c.measured}, {"pass", c.pass}});
  return out;
}

Json to_json(const FixedPointReport& r, const FinitePoset& p) {
  auto entries = [](const std::vector<HypothesisEntry>& log) {
    Json out = Json::array();
    for (const auto& e : log) out.push_back({{"name", e.name}, {"pass", e.pass}, {"witness", e.witness}});
    return out;
  };
  return {{"fixed_points", p.element_names(r.fixed_points)},
          {"is_inductive", r.is_inductive},
          {"above_seed", p.element_names(r.above_seed)},
          {"above_seed_inductive", r.above_seed_inductive},
          {"maximal_elements", p.element_names(r.maximal_elements)},
          {"hypotheses", entries(r.hypothesis_log)},
          {"conclusions", entries(r.conclusion_log)}};
}

Json to_json(const ConditionLog& log) {
  Json verdicts = Json::array();
  for (const auto& v : log.verdicts)
    verdicts.push_back({{"name", v.name}, {"pass", v.pass}, {"witness", v.witness}, {"exhaustive", v.exhaustive}});
  return {{"lambda", finite_or_null(log.lambda)}, {"verdicts", verdicts}, {"all_pass", log.all_pass()}};
}

Json to_json(const SolveReport& r) {
  return {{"iterates_count", r.iterates_count},
          {"nodes", r.nodes},
          {"solution", r.solution},
          {"residual_p", finite_or_null(r.residual_p)},
          {"norm_p", finite_or_null(r.norm_p)},
          {"final_step_p", finite_or_null(r.final_step_p)},
          {"final_step_sup", finite_or_null(r.final_step_sup)},
          {"converged", r.converged},
          {"monotone_ok", r.monotone_ok},
          {"ball_ok", r.ball_ok},
          {"nonzero_ok", r.nonzero_ok},
          {"audit_overridden", r.audit_overridden},
          {"lambda", finite_or_null(r.lambda)},
          {"condition_log", to_json(r.condition_log)}};
}

Json to_json(const Exploration& e) {
  return {{"fixed_points", e.fixed_points},
          {"seed_to_point", e.seed_to_point},
          {"iterations", e.iterations},
          {"comparable", e.comparable},
          {"maximal", e.maximal}};
}

PosetConfig poset_config_from_json(const Json& j) {
  require_keys(j, "poset config", {"elements", "leq", "map", "x0"});
  if (!j.contains("elements") || !j.at("elements").is_array() || j.at("elements").empty())
    bad("'elements' must be a nonempty array");
  if (!j.contains("map") || !j.at("map").is_object()) bad("'map' must be an object");

  PosetConfig cfg;
  const Json& elements = j.at("elements");
  if (!j.contains("leq")) {
    std::vector<GridPoint> points;
    for (const auto& e : elements) {
      if (e.is_string()) bad("named elements need an explicit 'leq' relation");
      points.push_back(point_of(e));
    }
    cfg.poset = FinitePoset::from_points(std::move(points));
  } else {
    std::vector<std::string> names;
    for (const auto& e : elements) names.push_back(element_name(e));
    std::vector<std::pair<std::string, std::string>> pairs;
    if (!j.at("leq").is_array()) bad("'leq' must be an array of pairs");
    for (const auto& pr : j.at("leq")) {
      if (!pr.is_array() || pr.size() != 2) bad("'leq' entries must be [lower, upper] pairs");
      pairs.emplace_back(element_name(pr[0]), element_name(pr[1]));
    }
    cfg.poset = validate_poset(std::move(names), pairs);
  }

  std::vector<std::pair<Element, ElementSet>> rows;
  for (const auto& [key, image] : j.at("map").items()) {
    if (!image.is_array()) bad("map image of '" + key + "' must be an array");
    ElementSet img;
    for (const auto& y : image) img.push_back(cfg.poset.at(element_name(y)));
    rows.emplace_back(cfg.poset.at(key), make_set(std::move(img)));
  }
  if (rows.empty()) bad("'map' must define at least one element");
  std::sort(rows.begin(), rows.end());
  std::vector<ElementSet> images;
  for (auto& [x, img] : rows) {
    cfg.domain.push_back(x);
    images.push_back(std::move(img));
  }
  cfg.map = SetValuedMap(cfg.poset, cfg.domain, std::move(images));

  if (j.contains("x0")) {
    cfg.seed = cfg.poset.at(element_name(j.at("x0")));
  } else {
    auto least = extremum(cfg.poset, cfg.domain, Extremum::Inf);
    if (!least || !std::binary_search(cfg.domain.begin(), cfg.domain.end(), *least))
      bad("no 'x0' given and the domain has no least element");
    cfg.seed = *least;
  }
  return cfg;
}

HammersteinProblem problem_from_json(const Json& j) {
  require_keys(j, "problem config", {"domain", "nodes", "rule", "p", "gamma", "kernel", "nonlinearity", "seed"});
  if (!j.contains("domain") || !j.at("domain").is_array() || j.at("domain").size() != 2 ||
      !j.at("domain")[0].is_number() || !j.at("domain")[1].is_number())
    bad("'domain' must be [a, b]");
  if (!j.contains("nodes") || !j.at("nodes").is_number_integer() || j.at("nodes").get<long long>() < 0)
    bad("'nodes' must be a nonnegative integer");
  if (!j.contains("kernel")) bad("missing 'kernel'");
  if (!j.contains("nonlinearity")) bad("missing 'nonlinearity'");
  std::string rule = "trapezoid";
  if (j.contains("rule")) {
    if (!j.at("rule").is_string()) bad("'rule' must be a string");
    rule = j.at("rule").get<std::string>();
  }
  auto grid = build_grid(j.at("domain")[0].get<double>(), j.at("domain")[1].get<double>(),
                         j.at("nodes").get<std::size_t>(), parse_rule(rule));
  return HammersteinProblem::make(std::move(grid), kernel_of(j.at("kernel")), nonlinearity_of(j.at("nonlinearity")),
                                  number_of(j, "p", 2.0), number_of(j, "gamma", 1.0));
}

std::string canonical_dump(const Json& j) {
  check_finite(j, "$");
  return j.dump(2) + "\n";
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::BadConfig, "'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace ordfix::io
