#pragma once

#include <map>
#include <optional>

#include "mixfair/flow.hpp"
#include "mixfair/instance.hpp"
#include "mixfair/objective.hpp"
#include "mixfair/rational.hpp"

namespace mixfair {

struct SolveResult {
  Allocation allocation;
  UtilityVector utilities;
  std::optional<Rat> objective_value;
  long long candidates_examined = 0;
};

// Dispatch: pure instances go through the partition route, mixed instances
// with identical divisible desire-sets through the block enumeration. Mixed
// instances with differing divisible desire-sets throw HardInstanceError.
SolveResult solve(const Instance& inst, const Objective& obj);

// Pure divisible: relaxed minimizer, realized exactly. Pure indivisible:
// discrete minimizer, realized as a 0/1 allocation. Optimal for every
// objective kind, so obj only selects the reported value.
SolveResult solve_pure(const Instance& inst, const Objective& obj);

// Mixed with identical divisible desire-sets: canonical partition, discrete
// minimizer outside the divisible block, then per-(k, ell) candidate
// enumeration inside it. candidates_examined counts the feasible candidates
// compared.
SolveResult solve_algorithm1(const Instance& inst, const Objective& obj);

// Water level of a feasible block candidate: agents below the bound share
//   beta - (n_plus*beta - ell - n_cake) / (n_plus - k_at_beta).
// Requires k_at_beta < n_plus.
Rat water_level(long long n_plus, const Int& beta, long long k_at_beta,
                long long ell, long long n_cake);

// Per-good divisible share for each nplus agent that holds fewer than beta
// goods (everyone is topped up to the common water level). Agents at beta
// receive nothing. n_cake is the number of identical divisible goods.
std::map<int, Rat> water_fill(const BlockAssignment& assignment,
                              const std::vector<int>& nplus, long long n_cake,
                              const Int& beta, long long ell);

}  // namespace mixfair
