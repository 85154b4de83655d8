#pragma once

#include <vector>

#include "mixfair/instance.hpp"
#include "mixfair/rational.hpp"

namespace mixfair {

// f(X) = number of items whose desire-set is contained in X. Ground elements
// are agent indices; items are desire-sets (sorted agent lists, never empty).
struct CoverageFn {
  std::vector<int> ground;               // sorted agent indices
  std::vector<std::vector<int>> items;   // sorted desire-sets, subsets of ground

  int eval(const std::vector<int>& subset) const;  // subset need not be sorted
};

CoverageFn coverage_indivisible(const Instance& inst);
CoverageFn coverage_divisible(const Instance& inst);
CoverageFn coverage_all(const Instance& inst);

struct ExcessResult {
  Rat value;                       // max over X of f(X) - beta * |X|
  std::vector<int> argmax;         // smallest maximizer (sorted)
  std::vector<int> argmax_largest; // largest maximizer (sorted)
};

// Maximizers of f(X) - beta*|X| form a lattice; the min-cut residual yields
// both extreme members. Runs in one max-flow on a graph with
// |items| + |ground| + 2 nodes.
ExcessResult smallest_maximizer_excess(const CoverageFn& f, const Rat& beta);

struct DensityResult {
  Rat density;               // max over nonempty X of f(X) / |X|
  std::vector<int> witness;  // largest maximizer of f(X) - density*|X| (sorted)
};

// Dinkelbach iteration; the density strictly increases each round, so at most
// |ground| excess computations happen. Empty item list gives density 0 with
// the whole ground as witness.
DensityResult max_density(const CoverageFn& f);

// Restriction of the contracted function X -> f(X ∪ S) - f(S) to ground \ S.
CoverageFn contract(const CoverageFn& f, const std::vector<int>& s);

}  // namespace mixfair
