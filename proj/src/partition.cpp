#include "mixfair/partition.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "mixfair/errors.hpp"
#include "mixfair/flow.hpp"

namespace mixfair {

CanonicalPartition canonical_partition(const CoverageFn& f) {
  CanonicalPartition cp;
  CoverageFn cur = f;
  while (!cur.ground.empty()) {
    Int beta = rat_ceil(max_density(cur).density);
    ExcessResult ex = smallest_maximizer_excess(cur, Rat(beta) - 1);
    assert(!ex.argmax.empty());
    assert(cp.values.empty() || beta < cp.values.back());
    cp.blocks.push_back(ex.argmax);
    cp.values.push_back(beta);
    cur = contract(cur, ex.argmax);
  }
  return cp;
}

PrincipalPartition principal_partition(const CoverageFn& f) {
  PrincipalPartition pp;
  CoverageFn cur = f;
  while (!cur.ground.empty()) {
    DensityResult d = max_density(cur);
    assert(!d.witness.empty());
    assert(pp.values.empty() || d.density < pp.values.back());
    pp.blocks.push_back(d.witness);
    pp.values.push_back(d.density);
    cur = contract(cur, d.witness);
  }
  return pp;
}

CanonicalPartition aggregate_principal(const PrincipalPartition& pp) {
  CanonicalPartition cp;
  for (std::size_t j = 0; j < pp.blocks.size(); ++j) {
    Int c = rat_ceil(pp.values[j]);
    if (cp.values.empty() || c != cp.values.back()) {
      cp.blocks.push_back(pp.blocks[j]);
      cp.values.push_back(c);
    } else {
      auto& blk = cp.blocks.back();
      blk.insert(blk.end(), pp.blocks[j].begin(), pp.blocks[j].end());
      std::sort(blk.begin(), blk.end());
    }
  }
  return cp;
}

UtilityVector relaxed_minimizer(const Instance& inst) {
  PrincipalPartition pp = principal_partition(coverage_all(inst));
  UtilityVector u(inst.n_agents, Rat(0));
  for (std::size_t j = 0; j < pp.blocks.size(); ++j)
    for (int i : pp.blocks[j]) u[i] = pp.values[j];
  return u;
}

UtilityVector discrete_minimizer(const Instance& inst) {
  CoverageFn f = coverage_all(inst);
  CanonicalPartition cp = canonical_partition(f);

  const int n_blocks = static_cast<int>(cp.blocks.size());
  std::vector<long long> mass(n_blocks), r(n_blocks);
  std::vector<int> prefix;
  long long prev = 0;
  for (int j = 0; j < n_blocks; ++j) {
    prefix.insert(prefix.end(), cp.blocks[j].begin(), cp.blocks[j].end());
    long long val = f.eval(prefix);
    mass[j] = val - prev;
    prev = val;
    long long beta = to_int64(cp.values[j]);
    long long size = static_cast<long long>(cp.blocks[j].size());
    r[j] = mass[j] - (beta - 1) * size;
    assert(beta == 0 || (r[j] >= 1 && r[j] <= size));
  }

  // Circulation over all items and the agents of positive-value blocks. Each
  // such agent takes beta_j - 1 items through its base arc; the r_j agents
  // raised to beta_j route one extra unit through their block node.
  std::map<int, std::pair<int, int>> agent_info;  // id -> (block, node)
  std::vector<ArcSpec> arcs;
  const int m = static_cast<int>(f.items.size());
  int next = 1 + m;
  for (int j = 0; j < n_blocks; ++j) {
    if (cp.values[j] == 0) continue;
    for (int i : cp.blocks[j]) agent_info[i] = {j, next++};
  }
  std::vector<int> block_node(n_blocks, -1);
  for (int j = 0; j < n_blocks; ++j)
    if (cp.values[j] != 0) block_node[j] = next++;
  const int t = next++;

  arcs.push_back({t, 0, 0, 1LL << 50});
  for (int e = 0; e < m; ++e) {
    arcs.push_back({0, 1 + e, 1, 1});
    for (int a : f.items[e]) {
      auto it = agent_info.find(a);
      if (it != agent_info.end())
        arcs.push_back({1 + e, it->second.second, 0, 1});
    }
  }
  std::map<int, int> overflow_arc;  // agent id -> arc index
  for (const auto& [id, info] : agent_info) {
    long long beta = to_int64(cp.values[info.first]);
    arcs.push_back({info.second, t, beta - 1, beta - 1});
    overflow_arc[id] = static_cast<int>(arcs.size());
    arcs.push_back({info.second, block_node[info.first], 0, 1});
  }
  for (int j = 0; j < n_blocks; ++j)
    if (block_node[j] >= 0) arcs.push_back({block_node[j], t, r[j], r[j]});

  assert(feasible_circulation(next, arcs).feasible);

  // Lowest-index agents get the raised value whenever some completion of the
  // remaining choices stays feasible.
  std::map<int, bool> raised;
  for (const auto& [id, arc] : overflow_arc) {
    arcs[arc].lo = 1;
    if (feasible_circulation(next, arcs).feasible) {
      raised[id] = true;
    } else {
      arcs[arc].lo = 0;
      arcs[arc].hi = 0;
      raised[id] = false;
    }
  }

  UtilityVector u(inst.n_agents, Rat(0));
  for (const auto& [id, info] : agent_info)
    u[id] = Rat(cp.values[info.first] - (raised[id] ? 0 : 1));
  return u;
}

}  // namespace mixfair
