#include <doctest.h>

#include <algorithm>
#include <random>

#include "mixfair/errors.hpp"
#include "mixfair/objective.hpp"

using namespace mixfair;

namespace {

UtilityVector vec(std::initializer_list<long long> xs) {
  UtilityVector u;
  for (long long x : xs) u.push_back(Rat(x));
  return u;
}

}  // namespace

TEST_CASE("objective parsing") {
  CHECK(parse_objective("square-sum").kind == ObjectiveKind::PowerSum);
  CHECK(parse_objective("square-sum").power == 2);
  CHECK(parse_objective("power:5").power == 5);
  CHECK(parse_objective("dec-min").kind == ObjectiveKind::DecMin);
  CHECK(parse_objective("inc-max").kind == ObjectiveKind::IncMax);
  CHECK(parse_objective("nash").kind == ObjectiveKind::Nash);
  CHECK_THROWS_AS(parse_objective("power:1"), ParseError);
  CHECK_THROWS_AS(parse_objective("power:x"), ParseError);
  CHECK_THROWS_AS(parse_objective("power:2junk"), ParseError);
  CHECK_THROWS_AS(parse_objective("bogus"), ParseError);
  for (const char* name : {"square-sum", "power:3", "dec-min", "inc-max", "nash"})
    CHECK(objective_name(parse_objective(name)) == name);
}

TEST_CASE("power sums compare by exact value") {
  Objective sq = parse_objective("square-sum");
  CHECK(compare(sq, {Rat(3, 2), Rat(3, 2)}, {Rat(1), Rat(2)}) < 0);
  CHECK(compare(sq, vec({2, 2}), vec({2, 2})) == 0);
  CHECK(compare(sq, vec({0, 3}), vec({2, 2})) > 0);
  Objective cu = parse_objective("power:3");
  // Cubes separate what squares cannot: (0,5) vs (3,4).
  CHECK(compare(sq, vec({0, 5}), vec({3, 4})) == 0);
  CHECK(compare(cu, vec({0, 5}), vec({3, 4})) > 0);
}

TEST_CASE("objective values are reported for power sums only") {
  CHECK(objective_value(parse_objective("square-sum"),
                        {Rat(3, 2), Rat(2)}) == Rat(25, 4));
  CHECK(objective_value(parse_objective("power:3"), vec({1, 2})) == Rat(9));
  CHECK(!objective_value(parse_objective("dec-min"), vec({1})).has_value());
  CHECK(!objective_value(parse_objective("inc-max"), vec({1})).has_value());
  CHECK(!objective_value(parse_objective("nash"), vec({1})).has_value());
}

TEST_CASE("decreasing-minimal order") {
  Objective dm = parse_objective("dec-min");
  // (7/4 x4, 1) beats (3/2 x4, 2): the largest entry decides.
  UtilityVector a = {Rat(7, 4), Rat(7, 4), Rat(7, 4), Rat(7, 4), Rat(1)};
  UtilityVector b = {Rat(3, 2), Rat(3, 2), Rat(3, 2), Rat(3, 2), Rat(2)};
  CHECK(compare(dm, a, b) < 0);
  CHECK(compare(dm, b, a) > 0);
  CHECK(compare(dm, a, a) == 0);
  CHECK(compare(dm, vec({1, 2, 2}), vec({2, 1, 2})) == 0);  // order-blind
}

TEST_CASE("increasing-maximal order") {
  Objective im = parse_objective("inc-max");
  // (3/2 x4, 2) beats (1, 7/4 x4): the smallest entry decides.
  UtilityVector a = {Rat(3, 2), Rat(3, 2), Rat(3, 2), Rat(3, 2), Rat(2)};
  UtilityVector b = {Rat(7, 4), Rat(7, 4), Rat(7, 4), Rat(7, 4), Rat(1)};
  CHECK(compare(im, a, b) < 0);
  CHECK(compare(im, b, a) > 0);
}

TEST_CASE("nash order: fewer zeros, then larger product") {
  Objective na = parse_objective("nash");
  CHECK(compare(na, vec({1, 1, 1}), vec({0, 3, 3})) < 0);
  CHECK(compare(na, vec({2, 2}), vec({1, 3})) < 0);
  CHECK(compare(na, vec({0, 0, 9}), vec({0, 1, 1})) > 0);
  CHECK(compare(na, {Rat(1), Rat(1, 2), Rat(1, 2)},
                {Rat(1, 2), Rat(1), Rat(1, 2)}) == 0);
}

TEST_CASE("comparisons are antisymmetric and permutation-blind") {
  std::mt19937_64 rng(555);
  const Objective objs[] = {parse_objective("square-sum"),
                            parse_objective("power:3"),
                            parse_objective("dec-min"),
                            parse_objective("inc-max"),
                            parse_objective("nash")};
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rng() % 5);
    UtilityVector a, b;
    for (int i = 0; i < n; ++i) {
      a.push_back(Rat(Int(rng() % 5), Int(1 + rng() % 3)));
      b.push_back(Rat(Int(rng() % 5), Int(1 + rng() % 3)));
    }
    UtilityVector ap = a;
    std::shuffle(ap.begin(), ap.end(), rng);
    for (const Objective& o : objs) {
      CAPTURE(t);
      REQUIRE(compare(o, a, b) == -compare(o, b, a));
      REQUIRE(compare(o, a, ap) == 0);
    }
  }
}

TEST_CASE("tie-break prefers the lexicographically smaller sorted vector") {
  Objective sq = parse_objective("square-sum");
  CHECK(compare_with_tiebreak(sq, vec({0, 5}), vec({3, 4})) < 0);
  CHECK(compare_with_tiebreak(sq, vec({3, 4}), vec({0, 5})) > 0);
  CHECK(compare_with_tiebreak(sq, vec({4, 3}), vec({3, 4})) == 0);
  // A strictly better value still wins before any tie-break.
  CHECK(compare_with_tiebreak(sq, vec({2, 2}), vec({0, 5})) < 0);
}
