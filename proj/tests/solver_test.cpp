#include <doctest.h>

#include <algorithm>
#include <random>

#include "mixfair/errors.hpp"
#include "mixfair/oracle.hpp"
#include "mixfair/solver.hpp"
#include "support/fixtures.hpp"

using namespace mixfair;
namespace mt = mixfair::testing;

namespace {

UtilityVector sorted(UtilityVector u) {
  std::sort(u.begin(), u.end());
  return u;
}

}  // namespace

TEST_CASE("water level formula") {
  // Four agents sharing three houses and three cake goods below bound two.
  CHECK(water_level(4, Int(2), 0, 3, 3) == Rat(3, 2));
  CHECK(water_level(4, Int(2), 0, 4, 3) == Rat(7, 4));
  CHECK(water_level(3, Int(1), 1, 1, 1) == Rat(1, 2));
  CHECK(water_level(2, Int(1), 1, 1, 1) == Rat(1));
}

TEST_CASE("five agents, five houses, three cake goods") {
  Instance inst = mt::table1();
  SolveResult sq = solve(inst, parse_objective("square-sum"));
  CHECK(sq.utilities == UtilityVector{Rat(3, 2), Rat(3, 2), Rat(3, 2),
                                      Rat(3, 2), Rat(2)});
  CHECK(sq.objective_value == Rat(13));
  CHECK(validate_allocation(inst, sq.allocation).empty());

  SolveResult dm = solve(inst, parse_objective("dec-min"));
  CHECK(dm.utilities == UtilityVector{Rat(7, 4), Rat(7, 4), Rat(7, 4),
                                      Rat(7, 4), Rat(1)});
  CHECK(!dm.objective_value.has_value());

  SolveResult im = solve(inst, parse_objective("inc-max"));
  CHECK(im.utilities == UtilityVector{Rat(3, 2), Rat(3, 2), Rat(3, 2),
                                      Rat(3, 2), Rat(2)});
  CHECK(sq.candidates_examined > 1);
}

TEST_CASE("five agents, five houses, two cake goods") {
  Instance inst = mt::table2();
  SolveResult sq = solve(inst, parse_objective("square-sum"));
  CHECK(sq.utilities == UtilityVector{Rat(3, 2), Rat(3, 2), Rat(3, 2),
                                      Rat(3, 2), Rat(1)});
  CHECK(sq.objective_value == Rat(10));

  SolveResult dm = solve(inst, parse_objective("dec-min"));
  CHECK(dm.utilities == sq.utilities);

  SolveResult im = solve(inst, parse_objective("inc-max"));
  CHECK(im.utilities == UtilityVector{Rat(5, 4), Rat(5, 4), Rat(5, 4),
                                      Rat(5, 4), Rat(2)});
}

TEST_CASE("one house and one cake good among three agents") {
  Instance inst = mt::example_house_cake();
  for (const char* name : {"square-sum", "dec-min", "inc-max", "nash"}) {
    CAPTURE(name);
    SolveResult r = solve(inst, parse_objective(name));
    REQUIRE(sorted(r.utilities) ==
            UtilityVector{Rat(1, 2), Rat(1, 2), Rat(1)});
    REQUIRE(validate_allocation(inst, r.allocation).empty());
  }
}

TEST_CASE("pure indivisible instances round inside blocks") {
  Instance inst = parse_instance(
      R"({"agents": 2, "indivisible": [[0], [0, 1], [0, 1]]})");
  SolveResult r = solve(inst, parse_objective("square-sum"));
  CHECK(r.utilities == UtilityVector{Rat(2), Rat(1)});
  CHECK(r.objective_value == Rat(5));
  CHECK(r.candidates_examined == 1);
  CHECK(!r.allocation.relaxed);
}

TEST_CASE("pure divisible instances realize the relaxed point") {
  Instance inst = parse_instance(
      R"({"agents": 2, "divisible": [[0, 1], [0, 1]]})");
  SolveResult r = solve(inst, parse_objective("nash"));
  CHECK(r.utilities == UtilityVector{Rat(1), Rat(1)});
  Rat total;
  for (const auto& [key, share] : r.allocation.shares) total += share;
  CHECK(total == Rat(2));
}

TEST_CASE("an agent outside every desire-set gets zero") {
  Instance inst = parse_instance(
      R"({"agents": 3, "indivisible": [[0, 1]], "divisible": [[0, 1]]})");
  SolveResult r = solve(inst, parse_objective("square-sum"));
  CHECK(sorted(r.utilities) == UtilityVector{Rat(0), Rat(1), Rat(1)});
}

TEST_CASE("differing cake desire-sets are refused") {
  Instance inst = parse_instance(
      R"({"agents": 2, "indivisible": [[0, 1]], "divisible": [[0], [0, 1]]})");
  CHECK_THROWS_AS(solve(inst, parse_objective("square-sum")),
                  HardInstanceError);
}

TEST_CASE("solver matches the oracle on small mixed instances") {
  std::mt19937_64 rng(90210);
  RandomSpec spec;
  spec.max_agents = 5;
  spec.max_indivisible = 5;
  spec.max_divisible = 3;
  spec.identical_divisible = true;
  const Objective objs[] = {parse_objective("square-sum"),
                            parse_objective("dec-min"),
                            parse_objective("inc-max"),
                            parse_objective("nash")};
  for (int t = 0; t < 25; ++t) {
    Instance inst = random_instance(rng, spec);
    for (const Objective& obj : objs) {
      CAPTURE(t);
      CAPTURE(objective_name(obj));
      SolveResult got = solve(inst, obj);
      OracleResult want = brute_force_optimal(inst, obj);
      REQUIRE(sorted(got.utilities) == sorted(want.utilities));
      REQUIRE(got.objective_value == want.objective_value);
    }
  }
}
