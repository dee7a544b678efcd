#include <random>

#include "doctest.h"
#include "ordfix/error.hpp"
#include "ordfix/fixed_point.hpp"
#include "ordfix/poset_examples.hpp"
#include "support/oracles.hpp"

using namespace ordfix;

namespace {

GridPoint pt(double s, double t) { return {Dyadic::from_double(s), Dyadic::from_double(t)}; }

ElementSet points_of(const FinitePoset& p, std::initializer_list<GridPoint> pts) {
  ElementSet out;
  for (const auto& q : pts) out.push_back(*p.find_point(q));
  return make_set(out);
}

FinitePoset two_chain() { return validate_poset({"bot", "top"}, {{"bot", "top"}}); }

}  // namespace

TEST_CASE("check_isotone") {
  auto p = two_chain();
  SUBCASE("constant map") {
    auto t = SetValuedMap::single_valued(p, p.all(), {1, 1});
    CHECK(check_isotone(p, t, Isotone::Both).holds);
  }
  SUBCASE("order reversal") {
    auto t = SetValuedMap::single_valued(p, p.all(), {1, 0});
    auto v = check_isotone(p, t, Isotone::Upward);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    auto [x, y, z] = *v.witness;
    CHECK(x == 0);
    CHECK(y == 1);
    CHECK(z == 1);
  }
  SUBCASE("upward but not downward") {
    // T(bot) = {bot, top}, T(top) = {top}: every z in T(bot) is below top,
    // but bot in T(bot) is not needed downward; take T(top) = {bot, top},
    // T(bot) = {top}: upward holds, downward fails at w = bot.
    auto t = SetValuedMap(p, p.all(), {{1}, {0, 1}});
    CHECK(check_isotone(p, t, Isotone::Upward).holds);
    auto down = check_isotone(p, t, Isotone::Downward);
    CHECK_FALSE(down.holds);
    CHECK(down.failed_direction == Isotone::Downward);
    CHECK_FALSE(check_isotone(p, t, Isotone::Both).holds);
  }
}

TEST_CASE("SetValuedMap validation") {
  auto p = two_chain();
  CHECK_THROWS_AS(SetValuedMap(p, p.all(), {{}, {1}}), Error);
  CHECK_THROWS_AS(SetValuedMap(p, p.all(), {{5}, {1}}), Error);
  CHECK_THROWS_AS(SetValuedMap(p, {0, 0}, {{0}, {1}}), Error);
  auto t = SetValuedMap(p, {1}, {{1}});
  CHECK_THROWS_AS(t.image(0), Error);
}

TEST_CASE("fixed_point_set equals brute force") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    auto lat = testing::random_lattice(rng, 32);
    const auto& p = lat.poset;
    std::vector<ElementSet> images;
    for (Element x = 0; x < p.size(); ++x) {
      ElementSet img;
      for (Element y = 0; y < p.size(); ++y)
        if (rng() % 4 == 0) img.push_back(y);
      if (img.empty()) img.push_back(rng() % p.size());
      images.push_back(img);
    }
    auto copy = images;
    SetValuedMap t(p, p.all(), std::move(images));
    ElementSet brute;
    for (Element x = 0; x < p.size(); ++x)
      if (std::find(copy[x].begin(), copy[x].end(), x) != copy[x].end()) brute.push_back(x);
    CHECK(fixed_point_set(t) == brute);
  }
  auto p = two_chain();
  CHECK(fixed_point_set(SetValuedMap::single_valued(p, p.all(), {0, 1})) == ElementSet{0, 1});
}

TEST_CASE("remark_3_11 fixture") {
  auto ex = builtin_example("remark_3_11", 0.25);
  const auto& p = ex.poset;
  CHECK(p.size() == 81);
  auto fixed = fixed_point_set(ex.map);
  CHECK(fixed == ex.expected_fixed);
  CHECK(fixed.size() == 14);  // 9 diagonal + 5 on the lower segment
  CHECK(std::binary_search(fixed.begin(), fixed.end(), *p.find_point(pt(1.5, 0.5))));
  CHECK(std::binary_search(fixed.begin(), fixed.end(), *p.find_point(pt(1.25, 1.25))));
  CHECK_FALSE(std::binary_search(fixed.begin(), fixed.end(), *p.find_point(pt(0.5, 0))));

  CHECK(extremum(p, points_of(p, {pt(1, 1), pt(1.5, 0.5)}), Extremum::Sup) == p.find_point(pt(1.5, 1)));
  CHECK(extremum(p, points_of(p, {pt(1, 1), pt(1.5, 0.5)}), Extremum::Inf) == p.find_point(pt(1, 0.5)));

  CHECK(check_isotone(p, ex.map, Isotone::Upward).holds);
  CHECK(is_chain_complete(p, p.all()).holds);

  auto report = verify_fixed_point_theorem(p, p.all(), ex.map, ex.seed);
  CHECK(report.hypotheses_pass());
  CHECK(report.conclusions_pass());
  CHECK(report.fixed_points == fixed);
  CHECK(report.is_inductive);
  CHECK(report.above_seed == fixed);
  CHECK(report.maximal_elements == ElementSet{*p.find_point(pt(2, 2))});

  auto sub = is_sublattice(p, fixed, {ex.cited_pair});
  CHECK_FALSE(sub.holds);
  REQUIRE(sub.witness);
  CHECK(sub.witness->a == *p.find_point(pt(1, 1)));
  CHECK(sub.witness->b == *p.find_point(pt(1.5, 0.5)));
  CHECK(sub.witness->join == *p.find_point(pt(1.5, 1)));
  CHECK(sub.witness->meet == *p.find_point(pt(1, 0.5)));
  CHECK_FALSE(sub.witness->join_in_set);
  CHECK_FALSE(sub.witness->meet_in_set);
  CHECK(sub.violating_pairs > 0);
}

TEST_CASE("example_3_12_1 fixture") {
  auto ex = builtin_example("example_3_12_1", 0.5);
  const auto& p = ex.poset;
  CHECK(p.size() == 8);
  auto fixed = fixed_point_set(ex.map);
  CHECK(fixed == points_of(p, {pt(0, 0), pt(1, 2), pt(2, 1), pt(3, 3)}));
  CHECK(fixed == ex.expected_fixed);
  CHECK_NOTHROW(require_lattice(p));
  CHECK(is_sublattice(p, p.all()).holds);

  auto sub = is_sublattice(p, fixed, {ex.cited_pair});
  CHECK_FALSE(sub.holds);
  REQUIRE(sub.witness);
  CHECK(sub.witness->join == *p.find_point(pt(2, 2)));
  CHECK(sub.witness->meet == *p.find_point(pt(1, 1)));

  auto report = verify_fixed_point_theorem(p, p.all(), ex.map, ex.seed);
  CHECK(report.conclusions_pass());
  CHECK(report.maximal_elements == ElementSet{*p.find_point(pt(3, 3))});
}

TEST_CASE("example_3_12_2 fixture") {
  auto ex = builtin_example("example_3_12_2", 0.25);
  const auto& p = ex.poset;
  CHECK(p.size() == 57);
  CHECK(fixed_point_set(ex.map) == points_of(p, {pt(0, 0), pt(1, 2), pt(2, 1), pt(3, 3)}));
  // Interior point of the open segment C goes up.
  CHECK(ex.map.image(*p.find_point(pt(1.5, 1.5))) == ElementSet{*p.find_point(pt(3, 3))});
  CHECK(ex.map.image(*p.find_point(pt(1, 1))) == ElementSet{*p.find_point(pt(0, 0))});
  CHECK(is_sublattice(p, p.all()).holds);
  auto report = verify_fixed_point_theorem(p, p.all(), ex.map, ex.seed);
  CHECK(report.conclusions_pass());
}

TEST_CASE("builtin_example errors") {
  CHECK_THROWS_WITH_AS(builtin_example("remark_3_11", 0.3), doctest::Contains("BadGridStep"), Error);
  CHECK_THROWS_WITH_AS(builtin_example("remark_3_11", 0.375), doctest::Contains("BadGridStep"), Error);
  CHECK_THROWS_WITH_AS(builtin_example("remark_3_11", -0.5), doctest::Contains("BadGridStep"), Error);
  CHECK_THROWS_WITH_AS(builtin_example("lemma_9_9", 0.5), doctest::Contains("UnknownFixture"), Error);
  CHECK(builtin_example("remark_3_11", 0.5).poset.size() == 25);
}

TEST_CASE("verify_fixed_point_theorem hypothesis failures") {
  auto p = two_chain();
  auto reversing = SetValuedMap::single_valued(p, p.all(), {1, 0});
  try {
    verify_fixed_point_theorem(p, p.all(), reversing, 0);
    FAIL("no throw");
  } catch (const HypothesisFailure& e) {
    CHECK(e.hypothesis() == "A1_isotone_upward");
    CHECK(e.report().hypothesis_log.back().pass == false);
  }

  // Isotone but nothing in T(top) lies above top.
  auto down = SetValuedMap::single_valued(p, p.all(), {0, 0});
  try {
    verify_fixed_point_theorem(p, p.all(), down, 1);
    FAIL("no throw");
  } catch (const HypothesisFailure& e) {
    CHECK(e.hypothesis() == "A3_seed_below_image");
  }

  // Images must stay inside D.
  auto leaving = SetValuedMap(p, {0}, {{1}});
  CHECK_THROWS_AS(verify_fixed_point_theorem(p, {0}, leaving, 0), Error);
}

TEST_CASE("is_sublattice requires a lattice host") {
  auto anti = validate_poset({"x", "y"}, {});
  CHECK_THROWS_WITH_AS(is_sublattice(anti, {0}), doctest::Contains("NotALattice"), Error);
}

TEST_CASE("Knaster-Tarski iteration on random lattices") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    auto lat = testing::random_lattice(rng, 40);
    const auto& p = lat.poset;
    auto f = testing::random_increasing_map(rng, p);
    auto map = SetValuedMap::single_valued(p, p.all(), f);
    CHECK(check_isotone(p, map, Isotone::Both).holds);
    Element bottom = *extremum(p, p.all(), Extremum::Inf);
    auto orbit = iterate_map(map, bottom, p.size());
    CHECK(orbit.size() <= p.size() + 1);
    Element limit = orbit.back();
    CHECK(f[limit] == limit);
    for (Element x = 0; x < p.size(); ++x)
      if (f[x] == x) CHECK(p.leq(limit, x));
    auto report = verify_fixed_point_theorem(p, p.all(), map, bottom);
    CHECK(report.conclusions_pass());
  }
}
