#include <cmath>
#include <limits>

#include "doctest.h"
#include "ordfix/counterexamples.hpp"
#include "ordfix/io.hpp"

using namespace ordfix;
using io::Json;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an ordfix::Error");
  return ErrorKind::IoError;
}

}  // namespace

TEST_CASE("piecewise polynomials round-trip through JSON") {
  for (const auto& f : {ramp_at_zero(3), smoothed_corner(Rational(9, 10)), corner_function(), unit_function()}) {
    Json j = io::to_json(f);
    CHECK(io::piecewise_from_json(j) == f);
    CHECK(io::piecewise_from_json(Json::parse(j.dump())) == f);
  }
  Json j = io::to_json(ramp_at_zero(2));
  CHECK(j["interval"] == Json::array({"0", "2"}));
  CHECK(j["segments"][0]["coeffs"] == Json::array({"0", "2", "0"}));
}

TEST_CASE("piecewise JSON accepts short coefficient lists and integers") {
  Json j = Json::parse(R"J({"segments":[{"from":0,"to":"1/2","coeffs":["1"]},{"from":"1/2","to":1,"coeffs":[0,"3/2"]}]})J");
  auto f = io::piecewise_from_json(j);
  CHECK(f(Rational(1, 4)) == 1);
  CHECK(f(1) == Rational(3, 2));
  CHECK(kind_of([] { io::piecewise_from_json(Json::parse(R"J({"segments":[]})J")); }) == ErrorKind::BadConfig);
  CHECK(kind_of([] {
          io::piecewise_from_json(Json::parse(R"J({"segments":[{"from":0,"to":1,"coeffs":[0.5]}]})J"));
        }) == ErrorKind::BadConfig);
  CHECK(kind_of([] {
          io::piecewise_from_json(
              Json::parse(R"J({"interval":["0","2"],"segments":[{"from":0,"to":1,"coeffs":["1"]}]})J"));
        }) == ErrorKind::BadConfig);
}

TEST_CASE("claim reports serialize as arrays") {
  ClaimReport r;
  CHECK(io::to_json(r) == Json::array());
  CHECK(io::canonical_dump(io::to_json(r)) == "[]\n");
  r.add("x.one", "1", "1", true);
  Json j = io::to_json(r);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["claim"] == "x.one");
  CHECK(j[0]["pass"] == true);
}

TEST_CASE("canonical dump sorts keys and rejects non-finite numbers") {
  Json j{{"zeta", 1}, {"alpha", {{"b", 0.1}, {"a", 2.5}}}};
  CHECK(io::canonical_dump(j) == "{\n  \"alpha\": {\n    \"a\": 2.5,\n    \"b\": 0.1\n  },\n  \"zeta\": 1\n}\n");
  Json bad{{"x", Json::array({1.0, std::numeric_limits<double>::quiet_NaN()})}};
  CHECK(kind_of([&] { io::canonical_dump(bad); }) == ErrorKind::InvalidReport);
  Json inf{{"x", std::numeric_limits<double>::infinity()}};
  CHECK(kind_of([&] { io::canonical_dump(inf); }) == ErrorKind::InvalidReport);
}

TEST_CASE("poset config with coordinate elements") {
  Json j = Json::parse(R"J({
    "elements": [[0,0],[1,0],[0,1],[1,1]],
    "map": {"(0,0)": [[1,1]], "(1,0)": [[1,1]], "(0,1)": [[1,1]], "(1,1)": [[1,1]]}
  })J");
  auto cfg = io::poset_config_from_json(j);
  CHECK(cfg.poset.size() == 4);
  CHECK(cfg.poset.name(cfg.seed) == "(0,0)");
  CHECK(cfg.domain.size() == 4);
  CHECK(fixed_point_set(cfg.map) == ElementSet{cfg.poset.at("(1,1)")});
}

TEST_CASE("poset config with named elements") {
  Json j = Json::parse(R"J({
    "elements": ["bot","a","b","top"],
    "leq": [["bot","a"],["bot","b"],["a","top"],["b","top"]],
    "map": {"bot": ["a","b"], "a": ["a"], "b": ["top"], "top": ["top"]},
    "x0": "bot"
  })J");
  auto cfg = io::poset_config_from_json(j);
  CHECK(cfg.poset.leq(cfg.poset.at("bot"), cfg.poset.at("top")));
  CHECK(cfg.map.image(cfg.poset.at("bot")).size() == 2);
  CHECK(cfg.poset.element_names(fixed_point_set(cfg.map)) == std::vector<std::string>{"a", "top"});

  Json cyc = Json::parse(R"J({"elements":["a","b"],"leq":[["a","b"],["b","a"]],"map":{"a":["a"]}})J");
  CHECK(kind_of([&] { io::poset_config_from_json(cyc); }) == ErrorKind::AntisymmetryViolation);
  Json unknown = Json::parse(R"J({"elements":["a"],"leq":[],"map":{"z":["a"]}})J");
  CHECK(kind_of([&] { io::poset_config_from_json(unknown); }) == ErrorKind::UnknownElement);
  Json no_least = Json::parse(R"J({"elements":["a","b"],"leq":[],"map":{"a":["a"],"b":["b"]}})J");
  CHECK(kind_of([&] { io::poset_config_from_json(no_least); }) == ErrorKind::BadConfig);
  Json extra = Json::parse(R"J({"elements":["a"],"leq":[],"map":{"a":["a"]},"colour":1})J");
  CHECK(kind_of([&] { io::poset_config_from_json(extra); }) == ErrorKind::BadConfig);
}

TEST_CASE("problem config") {
  Json j = Json::parse(R"J({
    "domain": [0, 1], "nodes": 17, "rule": "gauss_legendre", "p": 3, "gamma": 2,
    "kernel": {"family": "separable", "g": {"family": "affine", "c0": 1, "c1": 1}, "h": {"family": "constant", "c": 1}},
    "nonlinearity": {"family": "bounded_sigmoid", "a": 0.2, "b": 0.3}
  })J");
  auto pr = io::problem_from_json(j);
  CHECK(pr.grid.size() == 17);
  CHECK(pr.grid.rule == QuadratureRule::GaussLegendre);
  CHECK(pr.q == doctest::Approx(1.5));
  CHECK(pr.gamma == 2);
  CHECK(pr.kernel(0.5, 0.25) == doctest::Approx(1.5));
  CHECK(pr.f(0, 1) == doctest::Approx(0.35));

  auto with = [&](const char* key, Json value) {
    Json k = j;
    k[key] = std::move(value);
    return k;
  };
  CHECK(kind_of([&] { io::problem_from_json(with("rule", "simpson")); }) == ErrorKind::BadRule);
  CHECK(kind_of([&] { io::problem_from_json(with("nodes", 1)); }) == ErrorKind::BadCount);
  CHECK(kind_of([&] { io::problem_from_json(with("p", 1)); }) == ErrorKind::BadParams);
  CHECK(kind_of([&] { io::problem_from_json(with("kernel", {{"family", "bessel"}})); }) == ErrorKind::BadConfig);
  CHECK(kind_of([&] { io::problem_from_json(with("extra", 1)); }) == ErrorKind::BadConfig);
  CHECK(kind_of([&] {
          io::problem_from_json(with("nonlinearity", {{"family", "affine_clamped"}, {"a", 1}, {"b", 1}, {"lo", 2},
                                                      {"hi", 1}}));
        }) == ErrorKind::BadParams);
}

TEST_CASE("solve report serialization") {
  auto pr = HammersteinProblem::make(build_grid(0, 1, 5, QuadratureRule::Trapezoid), Kernel::constant(1),
                                     Nonlinearity::constant(1), 2, 1);
  Json j = io::to_json(monotone_solve(pr));
  for (const char* key : {"iterates_count", "nodes", "solution", "residual_p", "norm_p", "monotone_ok", "lambda",
                          "condition_log", "converged", "nonzero_ok", "ball_ok", "audit_overridden"})
    CHECK(j.contains(key));
  CHECK(j["condition_log"]["verdicts"].size() == 4);
  CHECK(j["solution"].size() == 5);
}

TEST_CASE("read_json_file errors") {
  CHECK(kind_of([] { io::read_json_file("/nonexistent/ordfix.json"); }) == ErrorKind::IoError);
}
