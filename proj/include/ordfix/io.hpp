#pragma once

#include <string>

#include "json.hpp"
#include "ordfix/claims.hpp"
#include "ordfix/fixed_point.hpp"
#include "ordfix/hammerstein.hpp"
#include "ordfix/piecewise.hpp"

namespace ordfix::io {

using Json = nlohmann::json;

/// {"interval":[a,b],"segments":[{"from","to","coeffs":[c0,c1,c2]}]}, every
/// rational written as a "p/q" string.
Json to_json(const PiecewisePoly& f);
/// Accepts rationals as "p/q" strings, decimal strings or JSON integers.
/// Throws BadConfig on malformed input.
PiecewisePoly piecewise_from_json(const Json& j);

/// Array of {"claim","expected","measured","pass"}.
Json to_json(const ClaimReport& report);

Json to_json(const FixedPointReport& report, const FinitePoset& poset);
Json to_json(const ConditionLog& log);
Json to_json(const SolveReport& report);
Json to_json(const Exploration& exploration);

/// A poset with a set-valued self-map read from
/// {"elements":[...], "leq":[[a,b],...], "map":{"a":[...],...}, "x0":...}.
/// Elements are names or coordinate pairs [s,t]; pairs are named "(s,t)".
/// Without "leq" all elements must be pairs and the componentwise order is
/// used. The map's keys form the domain. Without "x0" the domain must have
/// a least element, which becomes the seed.
struct PosetConfig {
  FinitePoset poset;
  ElementSet domain;
  SetValuedMap map;
  Element seed = 0;
};
PosetConfig poset_config_from_json(const Json& j);

/// {"domain":[a,b],"nodes":N,"rule":"trapezoid","p":2,"gamma":1,
///  "kernel":{"family":...},"nonlinearity":{"family":...}}.
/// Unknown keys and families raise BadConfig.
HammersteinProblem problem_from_json(const Json& j);

/// Sorted keys, two-space indent, trailing newline. Throws InvalidReport
/// when the document holds a non-finite number.
std::string canonical_dump(const Json& j);

/// Reads and parses a JSON file; IoError when unreadable, BadConfig when
/// not JSON.
Json read_json_file(const std::string& path);

}  // namespace ordfix::io
