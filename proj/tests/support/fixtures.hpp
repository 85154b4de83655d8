#pragma once

#include "mixfair/instance.hpp"
#include "mixfair/oracle.hpp"

namespace mixfair::testing {

// Five agents, five houses everyone wants, three cake goods wanted by the
// first four agents.
inline Instance table1() {
  Instance inst;
  inst.n_agents = 5;
  for (int g = 0; g < 5; ++g) inst.indivisible.push_back({0, 1, 2, 3, 4});
  for (int g = 0; g < 3; ++g) inst.divisible.push_back({0, 1, 2, 3});
  return inst;
}

// As table1 but with only two cake goods.
inline Instance table2() {
  Instance inst = table1();
  inst.divisible.pop_back();
  return inst;
}

// Three agents, one house and one cake good, everyone wants everything.
inline Instance example_house_cake() {
  Instance inst;
  inst.n_agents = 3;
  inst.indivisible.push_back({0, 1, 2});
  inst.divisible.push_back({0, 1, 2});
  return inst;
}

// Matchable: {(0,0,0), (1,1,1)} covers every coordinate.
inline ThreeDM dm_yes() {
  return {2, {{{0, 0, 0}}, {{1, 1, 1}}, {{0, 1, 1}}}};
}

// Unmatchable: no triple has first coordinate 1.
inline ThreeDM dm_no() {
  return {2, {{{0, 0, 0}}, {{0, 1, 1}}, {{0, 0, 1}}}};
}

}  // namespace mixfair::testing
