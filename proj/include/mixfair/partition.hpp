#pragma once

#include <vector>

#include "mixfair/coverage.hpp"
#include "mixfair/instance.hpp"
#include "mixfair/rational.hpp"

namespace mixfair {

// Agent blocks in decreasing order of their value; blocks are sorted agent
// lists and together partition the ground set.
struct CanonicalPartition {
  std::vector<std::vector<int>> blocks;
  std::vector<Int> values;  // beta_j, strictly decreasing, last may be 0
};

struct PrincipalPartition {
  std::vector<std::vector<int>> blocks;
  std::vector<Rat> values;  // lambda_j, strictly decreasing
};

// Peels blocks by rounded-up max density: block j is the smallest maximizer
// of f_c(X) - (beta_j - 1)|X| over the contracted function f_c.
CanonicalPartition canonical_partition(const CoverageFn& f);

// Peels the largest maximizer at the exact max density; the densities strictly
// decrease and every ground element is assigned.
PrincipalPartition principal_partition(const CoverageFn& f);

// Round-up aggregation: principal blocks with equal ceil(lambda) merge into
// one canonical block valued at that ceiling.
CanonicalPartition aggregate_principal(const PrincipalPartition& pp);

// Relaxed minimizer of any symmetric strictly convex objective over the base
// polyhedron: constant lambda_j on principal block j.
UtilityVector relaxed_minimizer(const Instance& inst);

// Integer minimizer restricted to utilities: in canonical block j exactly
// r_j agents sit at beta_j and the rest at beta_j - 1, chosen lowest-index
// first subject to realizability.
UtilityVector discrete_minimizer(const Instance& inst);

}  // namespace mixfair
