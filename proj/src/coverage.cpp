#include "mixfair/coverage.hpp"

#include <algorithm>
#include <cassert>

#include "mixfair/flow.hpp"

namespace mixfair {

namespace {

// Membership lookup table over agent ids.
std::vector<char> id_table(const std::vector<int>& ids, int size_hint) {
  std::vector<char> in(size_hint, 0);
  for (int i : ids) {
    if (i >= static_cast<int>(in.size())) in.resize(i + 1, 0);
    in[i] = 1;
  }
  return in;
}

}  // namespace

int CoverageFn::eval(const std::vector<int>& subset) const {
  std::vector<char> in = id_table(subset, ground.empty() ? 1 : ground.back() + 1);
  int count = 0;
  for (const auto& item : items)
    if (std::all_of(item.begin(), item.end(), [&](int a) {
          return a < static_cast<int>(in.size()) && in[a];
        }))
      ++count;
  return count;
}

CoverageFn coverage_indivisible(const Instance& inst) {
  CoverageFn f;
  f.ground.resize(inst.n_agents);
  for (int i = 0; i < inst.n_agents; ++i) f.ground[i] = i;
  f.items = inst.indivisible;
  return f;
}

CoverageFn coverage_divisible(const Instance& inst) {
  CoverageFn f = coverage_indivisible(inst);
  f.items = inst.divisible;
  return f;
}

CoverageFn coverage_all(const Instance& inst) {
  CoverageFn f = coverage_indivisible(inst);
  f.items.insert(f.items.end(), inst.divisible.begin(), inst.divisible.end());
  return f;
}

ExcessResult smallest_maximizer_excess(const CoverageFn& f, const Rat& beta) {
  const int m = static_cast<int>(f.items.size());
  const int n = static_cast<int>(f.ground.size());
  if (beta < 0) {
    // f(X) - beta|X| grows with every added element, so the ground set is
    // the unique maximizer.
    ExcessResult res;
    res.value = Rat(f.eval(f.ground)) - beta * n;
    res.argmax = f.ground;
    res.argmax_largest = f.ground;
    return res;
  }
  const long long p = to_int64(Int(numerator(beta)));
  const long long q = to_int64(Int(denominator(beta)));

  // Project selection: keep item j (profit q) by buying every agent of its
  // desire-set (cost p each). s = 0, items 1..m, agents m+1..m+n, t last.
  std::map<int, int> agent_pos;
  for (int i = 0; i < n; ++i) agent_pos[f.ground[i]] = i;
  FlowNetwork net(m + n + 2);
  const int t = m + n + 1;
  for (int j = 0; j < m; ++j) {
    net.add_edge(0, 1 + j, q);
    for (int a : f.items[j]) {
      auto it = agent_pos.find(a);
      assert(it != agent_pos.end());
      net.add_edge(1 + j, 1 + m + it->second, 1LL << 50);
    }
  }
  for (int i = 0; i < n; ++i) net.add_edge(1 + m + i, t, p);
  long long cut = net.max_flow(0, t);

  ExcessResult res;
  res.value = Rat(Int(q) * m - cut, Int(q));
  std::vector<char> from_s = net.residual_from(0);
  std::vector<char> to_t = net.residual_to(t);
  for (int i = 0; i < n; ++i) {
    if (from_s[1 + m + i]) res.argmax.push_back(f.ground[i]);
    if (!to_t[1 + m + i]) res.argmax_largest.push_back(f.ground[i]);
  }
  return res;
}

DensityResult max_density(const CoverageFn& f) {
  assert(!f.ground.empty());
  if (f.items.empty()) return {Rat(0), f.ground};
  Rat lambda(f.eval(f.ground), static_cast<int>(f.ground.size()));
  for (;;) {
    ExcessResult ex = smallest_maximizer_excess(f, lambda);
    if (ex.value == 0) return {lambda, ex.argmax_largest};
    assert(ex.value > 0 && !ex.argmax.empty());
    Rat next(f.eval(ex.argmax), static_cast<int>(ex.argmax.size()));
    assert(next > lambda);
    lambda = next;
  }
}

CoverageFn contract(const CoverageFn& f, const std::vector<int>& s) {
  std::vector<char> in = id_table(s, f.ground.empty() ? 1 : f.ground.back() + 1);
  auto dropped = [&](int a) {
    return a < static_cast<int>(in.size()) && in[a];
  };
  CoverageFn out;
  for (int a : f.ground)
    if (!dropped(a)) out.ground.push_back(a);
  for (const auto& item : f.items) {
    std::vector<int> rest;
    for (int a : item)
      if (!dropped(a)) rest.push_back(a);
    if (!rest.empty()) out.items.push_back(std::move(rest));
  }
  return out;
}

}  // namespace mixfair
