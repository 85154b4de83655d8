#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mixfair/coverage.hpp"
#include "mixfair/instance.hpp"
#include "mixfair/objective.hpp"
#include "mixfair/rational.hpp"

namespace mixfair {

struct OracleLimits {
  long long cap_assignments = 1'000'000;
  int max_agents = 6;
  int max_indivisible = 6;
  int max_divisible = 4;
};

struct OracleResult {
  UtilityVector utilities;
  Allocation allocation;
  std::optional<Rat> objective_value;
  long long candidates_examined = 0;
};

// Enumerates every assignment of indivisible goods to desiring agents and
// solves the remaining divisible problem exactly per assignment. Independent
// of the solver by construction: no canonical partition, no block
// enumeration. Throws CapExceededError past the limits.
OracleResult brute_force_optimal(const Instance& inst, const Objective& obj,
                                 const OracleLimits& limits = {},
                                 bool parallel = true);

// Serial reference for the parallel enumeration; same result bit-for-bit.
OracleResult brute_force_optimal_serial(const Instance& inst,
                                        const Objective& obj,
                                        const OracleLimits& limits = {});

struct ContinuousMinResult {
  UtilityVector utilities;  // exact rational point of the base polyhedron
  Rat gap;                  // exact duality-gap certificate at that point
  long long iterations = 0;
};

// Frank-Wolfe with away steps over the base polyhedron, PowerSum objectives
// only. Floating-point internally; the returned point is snapped to exact
// vertex weights and certified by an exact linear-minimization gap <= tol.
ContinuousMinResult continuous_min(const Instance& inst, const Objective& obj,
                                   const Rat& tol = Rat(1, 100000000));

// Componentwise floor(relaxed) <= discrete <= ceil(relaxed).
bool check_proximity_utilities(const UtilityVector& relaxed,
                               const UtilityVector& discrete);
bool check_proximity(const Instance& inst);

// Violations of the block structure: every good must be fully allocated
// inside the canonical block that owns it. Empty result means compliant.
std::vector<std::string> check_structure(const Instance& inst,
                                         const Allocation& alloc);

// All integer points of the base polyhedron (small ground sets only).
std::vector<std::vector<long long>> mconvex_points(const CoverageFn& f);

// Pairwise exchange: for x, y in the set and any i with x_i > y_i there is j
// with x_j < y_j such that both x - e_i + e_j and y + e_i - e_j stay inside.
bool check_exchange_axiom(const CoverageFn& f);

// Sampled rays of the transitivity pattern: x - e_i + e_j and x - e_j + e_k
// inside imply x - e_i + e_k inside.
bool check_exchange_transitivity(const CoverageFn& f, std::mt19937_64& rng,
                                 int samples);

struct ThreeDM {
  int n = 0;                               // universe size per coordinate
  std::vector<std::array<int, 3>> triples; // 0-based (x, y, z)
};

ThreeDM parse_3dm(const std::string& text);
std::string serialize_3dm(const ThreeDM& dm);

struct HardnessReduction {
  Instance instance;
  UtilityVector target;  // length n_agents
  bool profile = false;  // true: target is a multiset; false: exact per-agent
};

// Mixed instance whose fair-division profile (n agents at 1, the rest at 3/5)
// is optimal exactly when the 3DM instance has a perfect matching.
HardnessReduction gen_3dm_hardness(const ThreeDM& dm);

// Divisible+indivisible instance whose exact target vector (1 on the triple
// agents, 1/3 on the element agents) is achievable exactly when a perfect
// matching exists.
HardnessReduction gen_realization_hardness(const ThreeDM& dm);

// Exhaustive achievability checks (assignment enumeration + flow per
// assignment); subject to the same caps as the oracle.
bool profile_achievable(const Instance& inst, const UtilityVector& profile,
                        const OracleLimits& limits = {});
bool vector_achievable(const Instance& inst, const UtilityVector& target,
                       const OracleLimits& limits = {});

struct RandomSpec {
  int min_agents = 2;
  int max_agents = 6;
  int max_indivisible = 6;
  int max_divisible = 4;
  bool identical_divisible = true;  // keep the mixed case solver-compatible
};

Instance random_instance(std::mt19937_64& rng, const RandomSpec& spec = {});
CoverageFn random_coverage(std::mt19937_64& rng, int max_agents,
                           int max_items);

}  // namespace mixfair
