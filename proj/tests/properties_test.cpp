#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mixfair/instance.hpp"
#include "mixfair/objective.hpp"
#include "mixfair/oracle.hpp"

using namespace mixfair;

namespace {

constexpr unsigned long long kSeed = 0x5eed2026;

UtilityVector random_rationals(std::mt19937_64& rng, int n) {
  UtilityVector u;
  for (int i = 0; i < n; ++i)
    u.push_back(Rat(Int(rng() % 6), Int(1 + rng() % 4)));
  return u;
}

}  // namespace

TEST_CASE("achievable utility sets satisfy the pairwise exchange axiom") {
  std::mt19937_64 rng(kSeed);
  for (int t = 0; t < 25; ++t) {
    CoverageFn f = random_coverage(rng, 5, 6);
    CAPTURE(t);
    REQUIRE(check_exchange_axiom(f));
  }
}

TEST_CASE("exchange steps compose transitively") {
  std::mt19937_64 rng(kSeed + 1);
  for (int t = 0; t < 25; ++t) {
    CoverageFn f = random_coverage(rng, 5, 6);
    CAPTURE(t);
    REQUIRE(check_exchange_transitivity(f, rng, 300));
  }
}

TEST_CASE("moving a unit down any gap improves every power sum") {
  std::mt19937_64 rng(kSeed + 2);
  const Objective objs[] = {parse_objective("square-sum"),
                            parse_objective("power:3"),
                            parse_objective("power:4")};
  for (int t = 0; t < 30; ++t) {
    CoverageFn f = random_coverage(rng, 5, 6);
    auto pts = mconvex_points(f);
    std::set<std::vector<long long>> in(pts.begin(), pts.end());
    const int n = static_cast<int>(f.ground.size());
    for (const auto& x : pts)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j || x[i] <= x[j] + 1) continue;
          std::vector<long long> y = x;
          y[i] -= 1;
          y[j] += 1;
          if (!in.count(y)) continue;
          UtilityVector xu, yu;
          for (long long v : x) xu.push_back(Rat(v));
          for (long long v : y) yu.push_back(Rat(v));
          for (const Objective& o : objs) {
            CAPTURE(t);
            REQUIRE(compare(o, yu, xu) < 0);
          }
        }
  }
}

TEST_CASE("swapping a unit across a gap of one changes nothing") {
  Objective sq = parse_objective("square-sum");
  UtilityVector x = {Rat(3), Rat(2), Rat(0)};
  UtilityVector y = {Rat(2), Rat(3), Rat(0)};
  CHECK(compare(sq, x, y) == 0);
}

TEST_CASE("comparators are antisymmetric, transitive and permutation-blind") {
  std::mt19937_64 rng(kSeed + 3);
  const Objective objs[] = {parse_objective("square-sum"),
                            parse_objective("power:3"),
                            parse_objective("dec-min"),
                            parse_objective("inc-max"),
                            parse_objective("nash")};
  for (int t = 0; t < 120; ++t) {
    int n = 1 + static_cast<int>(rng() % 5);
    UtilityVector a = random_rationals(rng, n);
    UtilityVector b = random_rationals(rng, n);
    UtilityVector c = random_rationals(rng, n);
    UtilityVector ap = a;
    std::shuffle(ap.begin(), ap.end(), rng);
    for (const Objective& o : objs) {
      CAPTURE(t);
      REQUIRE(compare(o, a, a) == 0);
      REQUIRE(compare(o, a, ap) == 0);
      REQUIRE(compare(o, a, b) == -compare(o, b, a));
      if (compare(o, a, b) <= 0 && compare(o, b, c) <= 0)
        REQUIRE(compare(o, a, c) <= 0);
    }
  }
}

TEST_CASE("huge exponents order vectors like the lexicographic rule") {
  // For integer entries the power:64 ordering already coincides with
  // dec-min on vectors this small, which pins both against one another.
  std::mt19937_64 rng(kSeed + 4);
  Objective big = parse_objective("power:64");
  Objective dm = parse_objective("dec-min");
  for (int t = 0; t < 150; ++t) {
    int n = 1 + static_cast<int>(rng() % 5);
    UtilityVector a, b;
    for (int i = 0; i < n; ++i) {
      a.push_back(Rat(Int(rng() % 9)));
      b.push_back(Rat(Int(rng() % 9)));
    }
    CAPTURE(t);
    REQUIRE(compare(dm, a, b) == compare(big, a, b));
  }
}

TEST_CASE("instance JSON round trips under random content") {
  std::mt19937_64 rng(kSeed + 5);
  for (int t = 0; t < 40; ++t) {
    Instance inst = random_instance(rng);
    CAPTURE(t);
    REQUIRE(parse_instance(serialize_instance(inst)) == inst);
  }
}

TEST_CASE("allocation and utility JSON round trip under random content") {
  std::mt19937_64 rng(kSeed + 6);
  for (int t = 0; t < 40; ++t) {
    Allocation a;
    a.relaxed = rng() & 1;
    int entries = static_cast<int>(rng() % 6);
    for (int e = 0; e < entries; ++e)
      a.add(static_cast<int>(rng() % 4),
            {rng() & 1 ? GoodKind::Divisible : GoodKind::Indivisible,
             static_cast<int>(rng() % 4)},
            Rat(Int(1 + rng() % 7), Int(1 + rng() % 7)));
    Allocation back = parse_allocation(serialize_allocation(a));
    CAPTURE(t);
    REQUIRE(back.relaxed == a.relaxed);
    REQUIRE(back.shares == a.shares);
    UtilityVector u = random_rationals(rng, 1 + static_cast<int>(rng() % 5));
    REQUIRE(parse_utilities(serialize_utilities(u)) == u);
  }
}
