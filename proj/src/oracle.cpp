#include "mixfair/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <set>

#include <json.hpp>

#include "mixfair/errors.hpp"
#include "mixfair/flow.hpp"
#include "mixfair/log.hpp"
#include "mixfair/partition.hpp"

namespace mixfair {

namespace {

// --- shared helpers ------------------------------------------------------

long long assignment_count(const Instance& inst, long long cap) {
  long long total = 1;
  for (const auto& d : inst.indivisible) {
    total *= static_cast<long long>(d.size());
    if (total > cap)
      throw CapExceededError("assignment space exceeds the cap of " +
                             std::to_string(cap));
  }
  return total;
}

std::vector<long long> decode_offsets(const Instance& inst, long long idx) {
  std::vector<long long> off(inst.n_agents, 0);
  for (const auto& d : inst.indivisible) {
    off[d[idx % d.size()]] += 1;
    idx /= static_cast<long long>(d.size());
  }
  return off;
}

// Exact relaxed minimizer of the divisible system shifted by integer
// offsets: iterated maximum-density blocks of f(X) = f_C(X) + off(X),
// enumerated over bitmasks. Valid for any symmetric strictly convex
// objective and for the lexicographic/Nash orders alike.
UtilityVector shifted_relaxed_minimizer(int n,
                                        const std::vector<long long>& f_div,
                                        const std::vector<long long>& off) {
  assert(n <= 16);
  const int full = (1 << n) - 1;
  std::vector<long long> fprime(1 << n);
  fprime[0] = 0;
  for (int mask = 1; mask <= full; ++mask) {
    int low = mask & -mask;
    int low_idx = __builtin_ctz(mask);
    fprime[mask] = fprime[mask ^ low] + off[low_idx];
  }
  for (int mask = 0; mask <= full; ++mask) fprime[mask] += f_div[mask];

  UtilityVector u(n, Rat(0));
  int base = 0, remaining = full;
  while (remaining) {
    long long best_p = -1, best_q = 1;
    for (int sub = remaining;; sub = (sub - 1) & remaining) {
      if (sub) {
        long long p = fprime[sub | base] - fprime[base];
        long long q = __builtin_popcount(sub);
        if (best_p < 0 || p * best_q > best_p * q) {
          best_p = p;
          best_q = q;
        }
      }
      if (sub == 0) break;
    }
    int block = 0;
    for (int sub = remaining;; sub = (sub - 1) & remaining) {
      if (sub) {
        long long p = fprime[sub | base] - fprime[base];
        long long q = __builtin_popcount(sub);
        if (p * best_q == best_p * q) block |= sub;
      }
      if (sub == 0) break;
    }
    assert(block != 0);
    for (int i = 0; i < n; ++i)
      if (block & (1 << i)) u[i] = Rat(best_p, best_q);
    base |= block;
    remaining &= ~block;
  }
  return u;
}

std::vector<long long> divisible_masks(const Instance& inst) {
  std::vector<long long> f_div(1 << inst.n_agents, 0);
  std::vector<int> dmask;
  for (const auto& d : inst.divisible) {
    int m = 0;
    for (int i : d) m |= 1 << i;
    dmask.push_back(m);
  }
  for (int mask = 0; mask < (1 << inst.n_agents); ++mask)
    for (int m : dmask)
      if ((m & mask) == m) f_div[mask] += 1;
  return f_div;
}

bool divisible_targets_feasible(const Instance& inst,
                                const UtilityVector& diff) {
  try {
    realize_from_utilities(inst, RealizeKind::Divisible, diff);
    return true;
  } catch (const InfeasibleError&) {
    return false;
  }
}

}  // namespace

// --- brute force ----------------------------------------------------------

OracleResult brute_force_optimal(const Instance& inst, const Objective& obj,
                                 const OracleLimits& limits, bool parallel) {
  if (inst.n_agents > limits.max_agents)
    throw CapExceededError("too many agents for the oracle");
  if (static_cast<int>(inst.indivisible.size()) > limits.max_indivisible)
    throw CapExceededError("too many indivisible goods for the oracle");
  if (static_cast<int>(inst.divisible.size()) > limits.max_divisible)
    throw CapExceededError("too many divisible goods for the oracle");
  const long long total = assignment_count(inst, limits.cap_assignments);
  const std::vector<long long> f_div = divisible_masks(inst);
  const int n = inst.n_agents;

  struct Best {
    bool set = false;
    UtilityVector utilities;
    long long idx = -1;
  };
  std::vector<Best> bests(std::max(1, omp_get_max_threads()));

#pragma omp parallel for schedule(static) if (parallel)
  for (long long idx = 0; idx < total; ++idx) {
    UtilityVector cand =
        shifted_relaxed_minimizer(n, f_div, decode_offsets(inst, idx));
    Best& b = bests[omp_get_thread_num()];
    if (!b.set || compare_with_tiebreak(obj, cand, b.utilities) < 0) {
      b.set = true;
      b.utilities = std::move(cand);
      b.idx = idx;
    }
  }

  Best winner;
  for (const Best& b : bests) {
    if (!b.set) continue;
    if (!winner.set) {
      winner = b;
      continue;
    }
    int c = compare_with_tiebreak(obj, b.utilities, winner.utilities);
    if (c < 0 || (c == 0 && b.idx < winner.idx)) winner = b;
  }
  assert(winner.set);

  OracleResult res;
  res.utilities = winner.utilities;
  res.candidates_examined = total;
  res.objective_value = objective_value(obj, res.utilities);
  long long idx = winner.idx;
  UtilityVector diff = res.utilities;
  for (std::size_t g = 0; g < inst.indivisible.size(); ++g) {
    const auto& d = inst.indivisible[g];
    int agent = d[idx % d.size()];
    idx /= static_cast<long long>(d.size());
    res.allocation.add(agent, {GoodKind::Indivisible, static_cast<int>(g)},
                       Rat(1));
    diff[agent] -= 1;
  }
  Allocation cake = realize_from_utilities(inst, RealizeKind::Divisible, diff);
  for (const auto& [key, share] : cake.shares)
    res.allocation.add(key.first, key.second, share);
  return res;
}

OracleResult brute_force_optimal_serial(const Instance& inst,
                                        const Objective& obj,
                                        const OracleLimits& limits) {
  return brute_force_optimal(inst, obj, limits, /*parallel=*/false);
}

// --- continuous minimizer -------------------------------------------------

namespace {

std::vector<long long> greedy_vertex(const CoverageFn& f,
                                     const std::vector<int>& order) {
  std::vector<long long> x(order.size(), 0);
  std::vector<int> prefix;
  long long prev = 0;
  for (int id : order) {
    prefix.push_back(id);
    long long cur = f.eval(prefix);
    x[id] = cur - prev;
    prev = cur;
  }
  return x;
}

// Prefix marginals of a coverage function grow along the order, so the
// cheapest coordinates must come last to minimize the inner product.
template <typename Key>
std::vector<int> cost_order(const std::vector<Key>& key) {
  std::vector<int> order(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return key[a] != key[b] ? key[a] > key[b] : a < b;
  });
  return order;
}

}  // namespace

ContinuousMinResult continuous_min(const Instance& inst, const Objective& obj,
                                   const Rat& tol) {
  if (obj.kind != ObjectiveKind::PowerSum)
    throw ParseError("continuous_min supports power objectives only");
  const long long p = obj.power;
  const int n = inst.n_agents;
  CoverageFn f = coverage_all(inst);

  // Vertices come from the greedy order; weights form a convex combination.
  std::map<std::vector<long long>, double> weight;
  {
    std::vector<double> zero(n, 0.0);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    weight[greedy_vertex(f, order)] = 1.0;
  }

  auto current = [&] {
    std::vector<double> x(n, 0.0);
    for (const auto& [v, w] : weight)
      for (int i = 0; i < n; ++i) x[i] += w * v[i];
    return x;
  };
  auto snap = [&] {
    std::vector<std::pair<std::vector<long long>, Rat>> lam;
    Rat sum(0);
    const Int grid = Int(1) << 48;
    for (const auto& [v, w] : weight) {
      if (w <= 0) continue;
      Rat r(Int(std::llround(w * std::pow(2.0, 48))), grid);
      if (r <= 0) continue;
      lam.push_back({v, r});
      sum += r;
    }
    UtilityVector x(n, Rat(0));
    if (lam.empty()) return x;
    for (auto& [v, r] : lam) {
      r /= sum;
      for (int i = 0; i < n; ++i) x[i] += r * v[i];
    }
    return x;
  };
  auto exact_gap = [&](const UtilityVector& x) {
    UtilityVector g(n);
    for (int i = 0; i < n; ++i) g[i] = rat_pow(x[i], p - 1) * p;
    std::vector<long long> s = greedy_vertex(f, cost_order(g));
    Rat gap(0);
    for (int i = 0; i < n; ++i) gap += g[i] * (x[i] - s[i]);
    return gap;
  };

  ContinuousMinResult res;
  const long long max_iter = 200000;
  for (long long iter = 0;; ++iter) {
    if (iter % 512 == 0 || iter == max_iter) {
      res.utilities = snap();
      res.gap = exact_gap(res.utilities);
      res.iterations = iter;
      if (res.gap <= tol || iter == max_iter) return res;
    }
    std::vector<double> x = current();
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
      g[i] = static_cast<double>(p) * std::pow(x[i], static_cast<double>(p - 1));

    std::vector<long long> s = greedy_vertex(f, cost_order(g));
    double gap_fw = 0;
    for (int i = 0; i < n; ++i) gap_fw += g[i] * (x[i] - s[i]);

    auto away = weight.begin();
    double away_score = -1e300;
    for (auto it = weight.begin(); it != weight.end(); ++it) {
      double sc = 0;
      for (int i = 0; i < n; ++i) sc += g[i] * it->first[i];
      if (sc > away_score) {
        away_score = sc;
        away = it;
      }
    }
    double gap_away = away_score;
    for (int i = 0; i < n; ++i) gap_away -= g[i] * x[i];

    std::vector<double> dir(n);
    bool fw_step = gap_fw >= gap_away;
    double gamma_max;
    if (fw_step) {
      for (int i = 0; i < n; ++i) dir[i] = s[i] - x[i];
      gamma_max = 1.0;
    } else {
      for (int i = 0; i < n; ++i) dir[i] = x[i] - away->first[i];
      gamma_max = away->second >= 1.0 ? 1e9
                                      : away->second / (1.0 - away->second);
    }
    auto dphi = [&](double t) {
      double d = 0;
      for (int i = 0; i < n; ++i)
        d += static_cast<double>(p) *
             std::pow(std::max(0.0, x[i] + t * dir[i]),
                      static_cast<double>(p - 1)) *
             dir[i];
      return d;
    };
    double lo = 0, hi = gamma_max;
    if (dphi(hi) <= 0) {
      lo = hi;
    } else {
      for (int it2 = 0; it2 < 80; ++it2) {
        double mid = 0.5 * (lo + hi);
        (dphi(mid) <= 0 ? lo : hi) = mid;
      }
    }
    double gamma = lo;
    if (gamma <= 0) continue;
    if (fw_step) {
      for (auto& [v, w] : weight) w *= 1.0 - gamma;
      weight[s] += gamma;
    } else {
      std::vector<long long> av = away->first;
      for (auto& [v, w] : weight) w *= 1.0 + gamma;
      weight[av] -= gamma;
    }
    for (auto it = weight.begin(); it != weight.end();)
      it = it->second <= 1e-15 ? weight.erase(it) : std::next(it);
  }
}

// --- theorem checks --------------------------------------------------------

bool check_proximity_utilities(const UtilityVector& relaxed,
                               const UtilityVector& discrete) {
  if (relaxed.size() != discrete.size()) return false;
  for (std::size_t i = 0; i < relaxed.size(); ++i)
    if (discrete[i] < rat_floor(relaxed[i]) ||
        discrete[i] > rat_ceil(relaxed[i]))
      return false;
  return true;
}

bool check_proximity(const Instance& inst) {
  return check_proximity_utilities(relaxed_minimizer(inst),
                                   discrete_minimizer(inst));
}

std::vector<std::string> check_structure(const Instance& inst,
                                         const Allocation& alloc) {
  CanonicalPartition cp = canonical_partition(coverage_all(inst));
  GoodsPartition gp = goods_canonical_partition(inst, cp);
  std::map<GoodId, int> block_of;
  std::vector<std::set<int>> members;
  for (std::size_t j = 0; j < cp.blocks.size(); ++j) {
    members.emplace_back(cp.blocks[j].begin(), cp.blocks[j].end());
    for (int g : gp.indivisible_blocks[j])
      block_of[{GoodKind::Indivisible, g}] = static_cast<int>(j);
    for (int g : gp.divisible_blocks[j])
      block_of[{GoodKind::Divisible, g}] = static_cast<int>(j);
  }
  std::vector<std::string> report;
  for (const auto& [key, share] : alloc.shares) {
    if (share <= 0) continue;
    auto it = block_of.find(key.second);
    if (it == block_of.end()) {
      report.push_back("good " + good_id_to_string(key.second) +
                       " is outside every block");
      continue;
    }
    if (!members[it->second].count(key.first))
      report.push_back("good " + good_id_to_string(key.second) +
                       " leaks out of its block to agent " +
                       std::to_string(key.first));
  }
  return report;
}

// --- exchange axioms -------------------------------------------------------

std::vector<std::vector<long long>> mconvex_points(const CoverageFn& f) {
  const int n = static_cast<int>(f.ground.size());
  assert(n <= 16);
  std::vector<long long> fmask(1 << n);
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) sub.push_back(f.ground[i]);
    fmask[mask] = f.eval(sub);
  }
  const int full = (1 << n) - 1;
  std::vector<long long> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    lo[i] = fmask[1 << i];
    hi[i] = fmask[full] - fmask[full ^ (1 << i)];
  }
  std::vector<std::vector<long long>> points;
  std::vector<long long> x(n);
  auto rec = [&](auto&& self, int i, long long sum) -> void {
    if (i == n) {
      if (sum != fmask[full]) return;
      for (int mask = 1; mask < full; ++mask) {
        long long s = 0;
        for (int j = 0; j < n; ++j)
          if (mask & (1 << j)) s += x[j];
        if (s < fmask[mask]) return;
      }
      points.push_back(x);
      return;
    }
    long long rest_lo = 0, rest_hi = 0;
    for (int j = i + 1; j < n; ++j) {
      rest_lo += lo[j];
      rest_hi += hi[j];
    }
    for (long long v = lo[i]; v <= hi[i]; ++v) {
      if (sum + v + rest_hi < fmask[full]) continue;
      if (sum + v + rest_lo > fmask[full]) break;
      x[i] = v;
      self(self, i + 1, sum + v);
    }
  };
  rec(rec, 0, 0);
  return points;
}

bool check_exchange_axiom(const CoverageFn& f) {
  auto pts = mconvex_points(f);
  std::set<std::vector<long long>> in(pts.begin(), pts.end());
  const int n = static_cast<int>(f.ground.size());
  for (const auto& x : pts)
    for (const auto& y : pts)
      for (int i = 0; i < n; ++i) {
        if (x[i] <= y[i]) continue;
        bool ok = false;
        for (int j = 0; j < n && !ok; ++j) {
          if (x[j] >= y[j]) continue;
          std::vector<long long> xs = x, ys = y;
          xs[i] -= 1;
          xs[j] += 1;
          ys[i] += 1;
          ys[j] -= 1;
          ok = in.count(xs) && in.count(ys);
        }
        if (!ok) return false;
      }
  return true;
}

bool check_exchange_transitivity(const CoverageFn& f, std::mt19937_64& rng,
                                 int samples) {
  auto pts = mconvex_points(f);
  if (pts.empty()) return true;
  std::set<std::vector<long long>> in(pts.begin(), pts.end());
  const int n = static_cast<int>(f.ground.size());
  if (n < 3) return true;
  for (int s = 0; s < samples; ++s) {
    const auto& x = pts[rng() % pts.size()];
    int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n),
        k = static_cast<int>(rng() % n);
    if (i == j || j == k || i == k) continue;
    std::vector<long long> a = x, b = x, c = x;
    a[i] -= 1;
    a[j] += 1;
    b[j] -= 1;
    b[k] += 1;
    c[i] -= 1;
    c[k] += 1;
    if (in.count(a) && in.count(b) && !in.count(c)) return false;
  }
  return true;
}

// --- hardness reductions ----------------------------------------------------

ThreeDM parse_3dm(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("n") ||
      !j.contains("triples"))
    throw ParseError("expected {\"n\": k, \"triples\": [[x,y,z],...]}");
  ThreeDM dm;
  dm.n = j["n"].get<int>();
  if (dm.n <= 0) throw ParseError("3dm universe size must be positive");
  for (const auto& t : j["triples"]) {
    if (!t.is_array() || t.size() != 3) throw ParseError("triples need 3 entries");
    std::array<int, 3> triple{};
    for (int c = 0; c < 3; ++c) {
      triple[c] = t[c].get<int>();
      if (triple[c] < 0 || triple[c] >= dm.n)
        throw ParseError("triple coordinate out of range");
    }
    dm.triples.push_back(triple);
  }
  return dm;
}

std::string serialize_3dm(const ThreeDM& dm) {
  nlohmann::json j;
  j["n"] = dm.n;
  j["triples"] = nlohmann::json::array();
  for (const auto& t : dm.triples) j["triples"].push_back({t[0], t[1], t[2]});
  return j.dump(2);
}

namespace {

std::string element_name(int n, int el) {
  if (el < n) return "x" + std::to_string(el);
  if (el < 2 * n) return "y" + std::to_string(el - n);
  return "z" + std::to_string(el - 2 * n);
}

}  // namespace

HardnessReduction gen_3dm_hardness(const ThreeDM& dm) {
  const int n = dm.n, m = static_cast<int>(dm.triples.size());
  Instance inst;
  inst.n_agents = 6 * n + 5 * m;
  auto s_agent = [&](int el) { return 2 * el; };
  auto sp_agent = [&](int el) { return 2 * el + 1; };
  auto t_agent = [&](int tau, int j) { return 6 * n + 5 * tau + j; };  // j=0..4

  nlohmann::json agent_names;
  for (int el = 0; el < 3 * n; ++el) {
    agent_names[std::to_string(s_agent(el))] = "s_" + element_name(n, el);
    agent_names[std::to_string(sp_agent(el))] = "s'_" + element_name(n, el);
  }
  for (int tau = 0; tau < m; ++tau)
    for (int j = 0; j <= 4; ++j)
      agent_names[std::to_string(t_agent(tau, j))] =
          "t" + std::to_string(tau) + (j ? "_" + std::to_string(j) : "");

  std::vector<int> base_t;
  for (int tau = 0; tau < m; ++tau) base_t.push_back(t_agent(tau, 0));
  for (int g = 0; g < n; ++g) inst.indivisible.push_back(base_t);

  for (int el = 0; el < 3 * n; ++el)
    inst.divisible.push_back({s_agent(el), sp_agent(el)});
  for (int tau = 0; tau < m; ++tau) {
    const auto& [x, y, z] = std::tuple(dm.triples[tau][0], dm.triples[tau][1],
                                       dm.triples[tau][2]);
    std::vector<int> d = {s_agent(x), s_agent(n + y), s_agent(2 * n + z)};
    for (int j = 0; j <= 4; ++j) d.push_back(t_agent(tau, j));
    std::sort(d.begin(), d.end());
    for (int rep = 0; rep < 3; ++rep) inst.divisible.push_back(d);
  }
  inst.names = nlohmann::json{{"agents", agent_names}};

  HardnessReduction red;
  red.instance = std::move(inst);
  red.profile = true;
  red.target.assign(red.instance.n_agents, Rat(3, 5));
  for (int i = 0; i < n; ++i) red.target[i] = Rat(1);
  return red;
}

HardnessReduction gen_realization_hardness(const ThreeDM& dm) {
  const int n = dm.n, m = static_cast<int>(dm.triples.size());
  Instance inst;
  inst.n_agents = 3 * n + m;
  nlohmann::json agent_names;
  for (int el = 0; el < 3 * n; ++el)
    agent_names[std::to_string(el)] = element_name(n, el);
  for (int j = 0; j < m; ++j)
    agent_names[std::to_string(3 * n + j)] = "t" + std::to_string(j);

  std::vector<int> all_t;
  for (int j = 0; j < m; ++j) all_t.push_back(3 * n + j);
  for (int g = 0; g < n; ++g) inst.indivisible.push_back(all_t);
  for (int j = 0; j < m; ++j) {
    std::vector<int> d = {dm.triples[j][0], n + dm.triples[j][1],
                          2 * n + dm.triples[j][2], 3 * n + j};
    std::sort(d.begin(), d.end());
    inst.divisible.push_back(d);
  }
  inst.names = nlohmann::json{{"agents", agent_names}};

  HardnessReduction red;
  red.instance = std::move(inst);
  red.profile = false;
  red.target.assign(red.instance.n_agents, Rat(1, 3));
  for (int j = 0; j < m; ++j) red.target[3 * n + j] = Rat(1);
  return red;
}

// --- achievability ----------------------------------------------------------

namespace {

// Agents with equal offsets and equal divisible desirability are
// interchangeable when matching a profile, so choices are made per class.
struct AgentClass {
  std::vector<int> members;
  long long off = 0;
};

bool assign_labels(const Instance& inst, std::vector<AgentClass>& classes,
                   std::vector<std::vector<int>>& chosen,
                   const std::vector<Rat>& values,
                   const std::vector<int>& mult, std::size_t d,
                   const std::vector<long long>& off, long long* budget) {
  if (d == values.size()) {
    UtilityVector diff(inst.n_agents, Rat(0));
    for (std::size_t v = 0; v < values.size(); ++v)
      for (int i : chosen[v]) diff[i] = values[v] - off[i];
    if (--*budget < 0)
      throw CapExceededError("profile search exceeded its budget");
    return divisible_targets_feasible(inst, diff);
  }
  // Unassigned agents that cannot wait for a smaller value are forced now.
  const Rat next = d + 1 < values.size() ? values[d + 1] : Rat(-1);
  std::vector<int> forced;
  std::vector<int> free_classes;
  std::vector<int> taken(classes.size(), 0);
  for (auto& v : chosen)
    for (int i : v)
      for (std::size_t c = 0; c < classes.size(); ++c)
        if (std::find(classes[c].members.begin(), classes[c].members.end(),
                      i) != classes[c].members.end())
          ++taken[c];
  int slots = mult[d];
  for (std::size_t c = 0; c < classes.size(); ++c) {
    int avail = static_cast<int>(classes[c].members.size()) - taken[c];
    if (avail == 0) continue;
    if (classes[c].off > values[d]) return false;  // cannot place them at all
    if (Rat(classes[c].off) > next) {
      slots -= avail;
      if (slots < 0) return false;
      for (int i : classes[c].members) {
        bool used = false;
        for (auto& v : chosen)
          used = used ||
                 std::find(v.begin(), v.end(), i) != v.end();
        if (!used) forced.push_back(i);
      }
    } else {
      free_classes.push_back(static_cast<int>(c));
    }
  }
  // Distribute the remaining slots over the eligible classes.
  std::vector<int> take(free_classes.size(), 0);
  auto rec = [&](auto&& self, std::size_t ci, int left) -> bool {
    if (ci == free_classes.size()) {
      if (left != 0) return false;
      chosen[d] = forced;
      for (std::size_t c = 0; c < free_classes.size(); ++c) {
        const auto& cls = classes[free_classes[c]];
        int picked = 0;
        for (int i : cls.members) {
          if (picked == take[c]) break;
          bool used = false;
          for (auto& v : chosen)
            used = used || std::find(v.begin(), v.end(), i) != v.end();
          if (!used) {
            chosen[d].push_back(i);
            ++picked;
          }
        }
      }
      bool ok = assign_labels(inst, classes, chosen, values, mult, d + 1, off,
                              budget);
      if (!ok) chosen[d].clear();
      return ok;
    }
    const auto& cls = classes[free_classes[ci]];
    int avail = static_cast<int>(cls.members.size()) - taken[free_classes[ci]];
    for (int t = 0; t <= std::min(avail, left); ++t) {
      take[ci] = t;
      if (self(self, ci + 1, left - t)) return true;
    }
    return false;
  };
  return rec(rec, 0, slots);
}

}  // namespace

bool profile_achievable(const Instance& inst, const UtilityVector& profile,
                        const OracleLimits& limits) {
  if (static_cast<int>(profile.size()) != inst.n_agents)
    throw ParseError("profile has the wrong length");
  Rat total(0);
  for (const Rat& v : profile) total += v;
  if (total != inst.total_goods()) return false;

  std::vector<Rat> values;
  std::vector<int> mult;
  {
    UtilityVector s = profile;
    std::sort(s.begin(), s.end(), std::greater<>());
    while (!s.empty()) {
      const Rat v = s.front();
      values.push_back(v);
      mult.push_back(static_cast<int>(std::count(s.begin(), s.end(), v)));
      s.erase(std::remove(s.begin(), s.end(), v), s.end());
    }
  }

  const long long total_assignments =
      assignment_count(inst, limits.cap_assignments);
  for (long long idx = 0; idx < total_assignments; ++idx) {
    std::vector<long long> off = decode_offsets(inst, idx);
    // Interchangeability classes: same offset, same divisible desirability.
    std::map<std::pair<long long, std::vector<char>>, AgentClass> class_map;
    for (int i = 0; i < inst.n_agents; ++i) {
      std::vector<char> col(inst.divisible.size(), 0);
      for (std::size_t g = 0; g < inst.divisible.size(); ++g)
        col[g] = std::binary_search(inst.divisible[g].begin(),
                                    inst.divisible[g].end(), i);
      AgentClass& c = class_map[{off[i], col}];
      c.off = off[i];
      c.members.push_back(i);
    }
    std::vector<AgentClass> classes;
    for (auto& [key, c] : class_map) classes.push_back(std::move(c));
    std::vector<std::vector<int>> chosen(values.size());
    long long budget = limits.cap_assignments;
    if (assign_labels(inst, classes, chosen, values, mult, 0, off, &budget))
      return true;
  }
  return false;
}

bool vector_achievable(const Instance& inst, const UtilityVector& target,
                       const OracleLimits& limits) {
  if (static_cast<int>(target.size()) != inst.n_agents)
    throw ParseError("target has the wrong length");
  const long long total = assignment_count(inst, limits.cap_assignments);
  for (long long idx = 0; idx < total; ++idx) {
    std::vector<long long> off = decode_offsets(inst, idx);
    UtilityVector diff(inst.n_agents);
    bool ok = true;
    for (int i = 0; i < inst.n_agents && ok; ++i) {
      diff[i] = target[i] - off[i];
      ok = diff[i] >= 0;
    }
    if (ok && divisible_targets_feasible(inst, diff)) return true;
  }
  return false;
}

// --- random generators -------------------------------------------------------

namespace {

std::vector<int> random_desire(std::mt19937_64& rng, int n) {
  std::vector<int> d;
  while (d.empty()) {
    d.clear();
    for (int i = 0; i < n; ++i)
      if (rng() & 1) d.push_back(i);
  }
  return d;
}

}  // namespace

Instance random_instance(std::mt19937_64& rng, const RandomSpec& spec) {
  Instance inst;
  inst.n_agents = spec.min_agents +
                  static_cast<int>(rng() % (spec.max_agents - spec.min_agents + 1));
  int nm = static_cast<int>(rng() % (spec.max_indivisible + 1));
  int nc = static_cast<int>(rng() % (spec.max_divisible + 1));
  for (int g = 0; g < nm; ++g)
    inst.indivisible.push_back(random_desire(rng, inst.n_agents));
  if (spec.identical_divisible) {
    std::vector<int> d = random_desire(rng, inst.n_agents);
    for (int g = 0; g < nc; ++g) inst.divisible.push_back(d);
  } else {
    for (int g = 0; g < nc; ++g)
      inst.divisible.push_back(random_desire(rng, inst.n_agents));
  }
  return inst;
}

CoverageFn random_coverage(std::mt19937_64& rng, int max_agents,
                           int max_items) {
  int n = 1 + static_cast<int>(rng() % max_agents);
  CoverageFn f;
  for (int i = 0; i < n; ++i) f.ground.push_back(i);
  int m = static_cast<int>(rng() % (max_items + 1));
  for (int e = 0; e < m; ++e) f.items.push_back(random_desire(rng, n));
  return f;
}

}  // namespace mixfair
