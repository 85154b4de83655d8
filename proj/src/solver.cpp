#include "mixfair/solver.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "mixfair/errors.hpp"
#include "mixfair/log.hpp"
#include "mixfair/oracle.hpp"
#include "mixfair/partition.hpp"

namespace mixfair {

namespace {

// Every invariant here is a theorem; a violation is a bug, not bad input.
void post_solve_checks(const Instance& inst, const SolveResult& res) {
  if (!validate_allocation(inst, res.allocation).empty())
    throw std::logic_error("solver produced an invalid allocation");
  if (utility_vector(inst, res.allocation) != res.utilities)
    throw std::logic_error("allocation does not match reported utilities");
  if (!check_structure(inst, res.allocation).empty())
    throw std::logic_error("solver allocation violates the block structure");
  UtilityVector relaxed = relaxed_minimizer(inst);
  for (int i = 0; i < inst.n_agents; ++i)
    if (res.utilities[i] < rat_floor(relaxed[i]) ||
        res.utilities[i] > rat_ceil(relaxed[i]))
      throw std::logic_error("solver utilities violate proximity");
  // Agents holding a positive divisible share end at one common utility.
  std::optional<Rat> level;
  for (const auto& [key, share] : res.allocation.shares) {
    if (key.second.kind != GoodKind::Divisible || share <= 0) continue;
    const Rat& u = res.utilities[key.first];
    if (level && *level != u)
      throw std::logic_error("divisible shares at unequal utilities");
    level = u;
  }
}

// Goods of one indivisible block handed out with pinned per-agent counts.
void assign_block_goods(const Instance& inst, const std::vector<int>& goods,
                        const std::vector<int>& agents,
                        const UtilityVector& counts, Allocation* alloc) {
  const int m = static_cast<int>(goods.size());
  std::map<int, int> agent_node;
  int next = 1 + m;
  for (int i : agents) agent_node[i] = next++;
  const int t = next++;
  std::vector<ArcSpec> arcs;
  arcs.push_back({t, 0, 0, 1LL << 50});
  std::vector<std::vector<std::pair<int, int>>> good_arcs(m);
  for (int g = 0; g < m; ++g) {
    arcs.push_back({0, 1 + g, 1, 1});
    for (int i : inst.indivisible[goods[g]])
      if (agent_node.count(i)) {
        good_arcs[g].push_back({i, static_cast<int>(arcs.size())});
        arcs.push_back({1 + g, agent_node[i], 0, 1});
      }
  }
  for (int i : agents) {
    long long c = to_int64(Int(numerator(counts[i])));
    assert(denominator(counts[i]) == 1);
    arcs.push_back({agent_node[i], t, c, c});
  }
  CirculationResult res = feasible_circulation(next, arcs, "block-goods");
  if (!res.feasible)
    throw std::logic_error("block goods cannot meet the per-agent counts");
  for (int g = 0; g < m; ++g)
    for (const auto& [agent, arc] : good_arcs[g])
      if (res.flow[arc] == 1)
        alloc->add(agent, {GoodKind::Indivisible, goods[g]}, Rat(1));
}

}  // namespace

Rat water_level(long long n_plus, const Int& beta, long long k_at_beta,
                long long ell, long long n_cake) {
  assert(k_at_beta < n_plus);
  Rat deficit = Rat(beta) * n_plus - ell - n_cake;
  return Rat(beta) - deficit / (n_plus - k_at_beta);
}

std::map<int, Rat> water_fill(const BlockAssignment& assignment,
                              const std::vector<int>& nplus, long long n_cake,
                              const Int& beta, long long ell) {
  long long k_prime = 0;
  for (int i : nplus)
    if (assignment.counts.at(i) == beta) ++k_prime;
  std::map<int, Rat> shares;
  if (n_cake == 0) return shares;
  Rat u = water_level(static_cast<long long>(nplus.size()), beta, k_prime, ell,
                      n_cake);
  for (int i : nplus) {
    long long c = assignment.counts.at(i);
    if (c == beta) continue;
    Rat s = (u - c) / n_cake;
    assert(s >= 0);
    if (s > 0) shares[i] = s;
  }
  return shares;
}

SolveResult solve_pure(const Instance& inst, const Objective& obj) {
  assert(inst.indivisible.empty() || inst.divisible.empty());
  SolveResult res;
  if (!inst.indivisible.empty()) {
    res.utilities = discrete_minimizer(inst);
    res.allocation =
        realize_from_utilities(inst, RealizeKind::Indivisible, res.utilities);
  } else {
    res.utilities = relaxed_minimizer(inst);
    res.allocation =
        realize_from_utilities(inst, RealizeKind::Divisible, res.utilities);
  }
  res.objective_value = objective_value(obj, res.utilities);
  res.candidates_examined = 1;
  return res;
}

SolveResult solve_algorithm1(const Instance& inst, const Objective& obj) {
  assert(!inst.indivisible.empty() && !inst.divisible.empty());
  assert(goods_identical(inst, GoodKind::Divisible));
  const long long n_cake = static_cast<long long>(inst.divisible.size());

  CanonicalPartition cp = canonical_partition(coverage_all(inst));
  GoodsPartition gp = goods_canonical_partition(inst, cp);
  UtilityVector zdot = discrete_minimizer(inst);

  int jstar = -1;
  for (std::size_t j = 0; j < gp.divisible_blocks.size(); ++j)
    if (!gp.divisible_blocks[j].empty()) {
      assert(jstar < 0);
      jstar = static_cast<int>(j);
    }
  assert(jstar >= 0);
  assert(static_cast<long long>(gp.divisible_blocks[jstar].size()) == n_cake);
  const Int beta = cp.values[jstar];
  assert(beta >= 1);

  // Blocks other than j* are fixed: their goods meet the integer minimizer
  // counts exactly.
  Allocation base_alloc;
  for (std::size_t j = 0; j < cp.blocks.size(); ++j)
    if (static_cast<int>(j) != jstar && !gp.indivisible_blocks[j].empty())
      assign_block_goods(inst, gp.indivisible_blocks[j], cp.blocks[j], zdot,
                         &base_alloc);

  const std::vector<int>& cake_set = inst.divisible.front();
  BlockSpec spec;
  for (int i : cp.blocks[jstar])
    (std::binary_search(cake_set.begin(), cake_set.end(), i) ? spec.nplus
                                                             : spec.nminus)
        .push_back(i);
  assert(!spec.nplus.empty());
  std::set<int> in_block(cp.blocks[jstar].begin(), cp.blocks[jstar].end());
  const std::vector<int>& m_star = gp.indivisible_blocks[jstar];
  for (int g : m_star) {
    std::vector<int> desire;
    for (int i : inst.indivisible[g])
      if (in_block.count(i)) desire.push_back(i);
    assert(!desire.empty());
    spec.goods.push_back(std::move(desire));
  }

  const long long n_plus = static_cast<long long>(spec.nplus.size());
  const long long n_goods = static_cast<long long>(m_star.size());
  struct Candidate {
    UtilityVector utilities;
    BlockAssignment assignment;
    Rat level;
    long long k = 0, ell = 0;
  };
  std::optional<Candidate> best;
  long long examined = 0;
  for (long long k = 0; k < n_plus; ++k) {  // k = n_plus cannot hold the cake
    for (long long ell = 0; ell <= n_goods; ++ell) {
      auto ba = feasible_block_assignment(spec, k, ell, beta);
      if (!ba) continue;
      long long k_prime = 0;
      for (int i : spec.nplus)
        if (ba->counts[i] == beta) ++k_prime;
      if (k_prime == n_plus) continue;
      Rat u = water_level(n_plus, beta, k_prime, ell, n_cake);
      if (u < Rat(beta) - 1 || u > Rat(beta)) continue;

      UtilityVector cand = zdot;
      for (int i : spec.nminus) cand[i] = Rat(ba->counts[i]);
      for (int i : spec.nplus)
        cand[i] = ba->counts[i] == beta ? Rat(beta) : u;
      ++examined;
      bool take = !best;
      if (best) {
        int c = compare_with_tiebreak(obj, cand, best->utilities);
        take = c < 0 || (c == 0 && std::pair(ell, k) <
                                       std::pair(best->ell, best->k));
      }
      if (take) best = Candidate{cand, *ba, u, k, ell};
    }
  }
  if (!best) throw std::logic_error("no feasible block candidate exists");
  log::debug("picked block candidate k=" + std::to_string(best->k) +
             " ell=" + std::to_string(best->ell));

  SolveResult res;
  res.allocation = base_alloc;
  for (std::size_t gi = 0; gi < m_star.size(); ++gi)
    res.allocation.add(best->assignment.owner[gi],
                       {GoodKind::Indivisible, m_star[gi]}, Rat(1));
  std::map<int, Rat> shares =
      water_fill(best->assignment, spec.nplus, n_cake, beta, best->ell);
  for (const auto& [agent, share] : shares)
    for (int g = 0; g < static_cast<int>(n_cake); ++g)
      res.allocation.add(agent, {GoodKind::Divisible, g}, share);
  res.utilities = best->utilities;
  res.objective_value = objective_value(obj, res.utilities);
  res.candidates_examined = examined;
  return res;
}

SolveResult solve(const Instance& inst, const Objective& obj) {
  SolveResult res;
  if (inst.indivisible.empty() || inst.divisible.empty())
    res = solve_pure(inst, obj);
  else if (goods_identical(inst, GoodKind::Divisible))
    res = solve_algorithm1(inst, obj);
  else
    throw HardInstanceError(
        "mixed instances with differing divisible desire-sets are NP-hard; "
        "use the brute-force oracle at small scale");
  post_solve_checks(inst, res);
  return res;
}

}  // namespace mixfair
