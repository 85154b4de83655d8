#include <doctest.h>

#include <random>

#include "mixfair/coverage.hpp"
#include "mixfair/instance.hpp"
#include "mixfair/oracle.hpp"
#include "support/test_oracles.hpp"

using namespace mixfair;
namespace mt = mixfair::testing;

namespace {

CoverageFn two_owned_one_shared() {
  CoverageFn f;
  f.ground = {0, 1};
  f.items = {{0}, {0}, {0, 1}};
  return f;
}

}  // namespace

TEST_CASE("coverage counts items inside the subset") {
  CoverageFn f = two_owned_one_shared();
  CHECK(f.eval({}) == 0);
  CHECK(f.eval({0}) == 2);
  CHECK(f.eval({1}) == 0);
  CHECK(f.eval({0, 1}) == 3);
}

TEST_CASE("builders keep desire-less agents in the ground set") {
  Instance inst = parse_instance(
      R"({"agents": 3, "indivisible": [[0]], "divisible": [[0, 1]]})");
  CoverageFn fm = coverage_indivisible(inst);
  CoverageFn fc = coverage_divisible(inst);
  CoverageFn fe = coverage_all(inst);
  CHECK(fm.ground == std::vector<int>{0, 1, 2});
  CHECK(fm.items.size() == 1);
  CHECK(fc.items.size() == 1);
  CHECK(fe.items.size() == 2);
  CHECK(fe.eval({0, 1, 2}) == 2);
  CHECK(fe.eval({2}) == 0);
}

TEST_CASE("excess maximizers at hand-checked thresholds") {
  CoverageFn f = two_owned_one_shared();
  // f - 1*|X|: empty 0, {0} 1, {1} -1, {0,1} 1 -> extremes {0} and {0,1}.
  ExcessResult r = smallest_maximizer_excess(f, Rat(1));
  CHECK(r.value == Rat(1));
  CHECK(r.argmax == std::vector<int>{0});
  CHECK(r.argmax_largest == std::vector<int>{0, 1});
  // Negative threshold: the ground set dominates everything.
  ExcessResult neg = smallest_maximizer_excess(f, Rat(-1));
  CHECK(neg.argmax == std::vector<int>{0, 1});
  CHECK(neg.value == Rat(5));
  // Fractional threshold between the two densities.
  ExcessResult half = smallest_maximizer_excess(f, Rat(3, 2));
  CHECK(half.value == Rat(1, 2));
  CHECK(half.argmax == std::vector<int>{0});
  CHECK(half.argmax_largest == std::vector<int>{0});
}

TEST_CASE("excess agrees with subset enumeration") {
  std::mt19937_64 rng(20260819);
  const Rat betas[] = {Rat(-1), Rat(0),     Rat(1, 2), Rat(1),
                       Rat(3, 2), Rat(2),   Rat(7, 3), Rat(4)};
  for (int t = 0; t < 60; ++t) {
    CoverageFn f = random_coverage(rng, 6, 7);
    for (const Rat& beta : betas) {
      ExcessResult got = smallest_maximizer_excess(f, beta);
      mt::NaiveExcess want = mt::excess_naive(f, beta);
      CAPTURE(t);
      REQUIRE(got.value == want.value);
      REQUIRE(got.argmax == want.smallest);
      REQUIRE(got.argmax_largest == want.largest);
    }
  }
}

TEST_CASE("maximum density by ratio search") {
  CoverageFn f = two_owned_one_shared();
  DensityResult d = max_density(f);
  CHECK(d.density == Rat(2));
  CHECK(d.witness == std::vector<int>{0});

  CoverageFn empty;
  empty.ground = {0, 1, 2};
  DensityResult zero = max_density(empty);
  CHECK(zero.density == Rat(0));
  CHECK(zero.witness == std::vector<int>{0, 1, 2});
}

TEST_CASE("maximum density agrees with subset enumeration") {
  std::mt19937_64 rng(4242);
  for (int t = 0; t < 80; ++t) {
    CoverageFn f = random_coverage(rng, 7, 8);
    DensityResult got = max_density(f);
    mt::NaiveDensity want = mt::density_naive(f);
    CAPTURE(t);
    REQUIRE(got.density == want.density);
    REQUIRE(got.witness == want.witness);
  }
}

TEST_CASE("contraction drops the set and its covered items") {
  CoverageFn f = two_owned_one_shared();
  CoverageFn g = contract(f, {0});
  CHECK(g.ground == std::vector<int>{1});
  CHECK(g.items == std::vector<std::vector<int>>{{1}});
  CHECK(g.eval({1}) == 1);
}
