#include "mixfair/flow.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <sstream>

#include "mixfair/errors.hpp"
#include "mixfair/log.hpp"

namespace mixfair {

namespace {
constexpr long long kInf = 1LL << 60;

thread_local std::function<void(const std::string&, const std::string&)>
    g_dump_sink;
}  // namespace

int FlowNetwork::add_node() {
  head_.push_back(-1);
  return static_cast<int>(head_.size()) - 1;
}

int FlowNetwork::add_edge(int from, int to, long long cap) {
  int id = static_cast<int>(edges_.size());
  edges_.push_back({to, head_[from], cap});
  head_[from] = id;
  edges_.push_back({from, head_[to], 0});
  head_[to] = id + 1;
  return id;
}

bool FlowNetwork::bfs(int s, int t) {
  level_.assign(head_.size(), -1);
  std::queue<int> q;
  level_[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e = head_[v]; e != -1; e = edges_[e].next)
      if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
        level_[edges_[e].to] = level_[v] + 1;
        q.push(edges_[e].to);
      }
  }
  return level_[t] >= 0;
}

long long FlowNetwork::dfs(int v, int t, long long limit) {
  if (v == t) return limit;
  for (int& e = iter_[v]; e != -1; e = edges_[e].next) {
    int u = edges_[e].to;
    if (edges_[e].cap <= 0 || level_[u] != level_[v] + 1) continue;
    long long d = dfs(u, t, std::min(limit, edges_[e].cap));
    if (d > 0) {
      edges_[e].cap -= d;
      edges_[e ^ 1].cap += d;
      return d;
    }
  }
  level_[v] = -1;
  return 0;
}

long long FlowNetwork::max_flow(int s, int t) {
  long long flow = 0;
  while (bfs(s, t)) {
    iter_ = head_;
    while (long long d = dfs(s, t, kInf)) flow += d;
  }
  return flow;
}

std::vector<char> FlowNetwork::residual_from(int s) const {
  std::vector<char> seen(head_.size(), 0);
  std::queue<int> q;
  seen[s] = 1;
  q.push(s);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e = head_[v]; e != -1; e = edges_[e].next)
      if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
        seen[edges_[e].to] = 1;
        q.push(edges_[e].to);
      }
  }
  return seen;
}

std::vector<char> FlowNetwork::residual_to(int t) const {
  // Reverse reachability over residual arcs u -> v (cap > 0).
  std::vector<std::vector<int>> into(head_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].cap > 0) into[edges_[e].to].push_back(edges_[e ^ 1].to);
  std::vector<char> seen(head_.size(), 0);
  std::queue<int> q;
  seen[t] = 1;
  q.push(t);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : into[v])
      if (!seen[u]) {
        seen[u] = 1;
        q.push(u);
      }
  }
  return seen;
}

std::string FlowNetwork::to_dot(const std::string& label,
                                const std::vector<std::string>& node_names) const {
  auto name = [&](int v) {
    if (v < static_cast<int>(node_names.size()) && !node_names[v].empty())
      return node_names[v];
    return "n" + std::to_string(v);
  };
  std::ostringstream out;
  out << "digraph \"" << label << "\" {\n  rankdir=LR;\n";
  for (std::size_t e = 0; e < edges_.size(); e += 2) {
    int from = edges_[e ^ 1].to, to = edges_[e].to;
    long long flow = edges_[e ^ 1].cap, cap = edges_[e].cap + edges_[e ^ 1].cap;
    out << "  \"" << name(from) << "\" -> \"" << name(to) << "\" [label=\""
        << flow << "/" << cap << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

void set_network_dump(
    std::function<void(const std::string&, const std::string&)> sink) {
  g_dump_sink = std::move(sink);
}

void dump_network(const FlowNetwork& net, const std::string& label,
                  const std::vector<std::string>& node_names) {
  if (g_dump_sink) g_dump_sink(label, net.to_dot(label, node_names));
}

CirculationResult feasible_circulation(int n_nodes,
                                       const std::vector<ArcSpec>& arcs,
                                       const std::string& dump_label) {
  FlowNetwork net(n_nodes + 2);
  const int S = n_nodes, T = n_nodes + 1;
  std::vector<long long> excess(n_nodes, 0);
  std::vector<int> arc_edge(arcs.size(), -1);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const ArcSpec& a = arcs[i];
    assert(a.from >= 0 && a.from < n_nodes && a.to >= 0 && a.to < n_nodes);
    assert(a.lo <= a.hi);
    excess[a.to] += a.lo;
    excess[a.from] -= a.lo;
    if (a.hi > a.lo) arc_edge[i] = net.add_edge(a.from, a.to, a.hi - a.lo);
  }
  long long need = 0;
  for (int v = 0; v < n_nodes; ++v) {
    if (excess[v] > 0) {
      net.add_edge(S, v, excess[v]);
      need += excess[v];
    } else if (excess[v] < 0) {
      net.add_edge(v, T, -excess[v]);
    }
  }
  long long flow = net.max_flow(S, T);
  if (!dump_label.empty()) dump_network(net, dump_label, {});

  CirculationResult res;
  res.feasible = flow == need;
  res.flow.resize(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i)
    res.flow[i] =
        arcs[i].lo + (arc_edge[i] >= 0 ? net.edge_flow(arc_edge[i]) : 0);
  if (!res.feasible) {
    std::vector<char> reach = net.residual_from(S);
    for (int v = 0; v < n_nodes; ++v)
      if (reach[v]) res.violated_cut.push_back(v);
  }
  return res;
}

Allocation realize_from_utilities(const Instance& inst, RealizeKind kind,
                                  const UtilityVector& target) {
  if (static_cast<int>(target.size()) != inst.n_agents)
    throw ParseError("target utility vector has the wrong length");
  for (const Rat& v : target)
    if (v < 0) throw ParseError("target utilities must be non-negative");

  const auto& goods = kind == RealizeKind::Indivisible ? inst.indivisible
                                                       : inst.divisible;
  const GoodKind good_kind = kind == RealizeKind::Indivisible
                                 ? GoodKind::Indivisible
                                 : GoodKind::Divisible;
  const int G = static_cast<int>(goods.size());
  Rat total(0);
  for (const Rat& v : target) total += v;
  if (total != G)
    throw InfeasibleError("target utilities sum to " + rat_to_string(total) +
                          ", expected " + std::to_string(G));

  Int D = common_denominator(target);
  long long d = to_int64(D);
  // s = 0, goods 1..G, agents G+1..G+n, t last
  FlowNetwork net(G + inst.n_agents + 2);
  const int t = G + inst.n_agents + 1;
  std::vector<std::vector<std::pair<int, int>>> good_arcs(G);  // (agent, edge)
  for (int g = 0; g < G; ++g) {
    net.add_edge(0, 1 + g, d);
    for (int i : goods[g])
      good_arcs[g].push_back({i, net.add_edge(1 + g, 1 + G + i, d)});
  }
  for (int i = 0; i < inst.n_agents; ++i) {
    Int cap = Int(numerator(target[i])) * (D / Int(denominator(target[i])));
    net.add_edge(1 + G + i, t, to_int64(cap));
  }
  long long flow = net.max_flow(0, t);
  {
    std::vector<std::string> names(net.node_count());
    names[0] = "s";
    names[t] = "t";
    for (int g = 0; g < G; ++g)
      names[1 + g] = good_id_to_string({good_kind, g});
    for (int i = 0; i < inst.n_agents; ++i)
      names[1 + G + i] = "a" + std::to_string(i);
    dump_network(net, kind == RealizeKind::Indivisible ? "realize:indivisible"
                                                       : "realize:divisible",
                 names);
  }
  if (flow != d * G)
    throw InfeasibleError("no allocation achieves the target utilities");

  Allocation alloc;
  for (int g = 0; g < G; ++g)
    for (const auto& [agent, edge] : good_arcs[g]) {
      long long f = net.edge_flow(edge);
      if (f > 0) alloc.add(agent, {good_kind, g}, Rat(Int(f), D));
    }
  if (kind == RealizeKind::Indivisible)
    for (const auto& [key, share] : alloc.shares)
      if (denominator(share) != 1) alloc.relaxed = true;
  return alloc;
}

std::optional<BlockAssignment> feasible_block_assignment(const BlockSpec& spec,
                                                         long long k,
                                                         long long ell,
                                                         const Int& beta) {
  const long long b = to_int64(beta);
  assert(b >= 1 && k >= 0 && ell >= 0);
  const int m = static_cast<int>(spec.goods.size());

  std::map<int, int> agent_node;
  int next = 1 + m;
  for (int i : spec.nplus) agent_node[i] = next++;
  for (int i : spec.nminus) agent_node[i] = next++;
  const int K = next, P = next + 1, t = next + 2;
  const int n_nodes = next + 3;

  std::vector<ArcSpec> arcs;
  arcs.push_back({t, 0, 0, kInf});  // node 0 is s
  std::vector<std::vector<std::pair<int, int>>> good_arcs(m);  // (agent, arc)
  for (int g = 0; g < m; ++g) {
    arcs.push_back({0, 1 + g, 1, 1});
    for (int i : spec.goods[g]) {
      auto it = agent_node.find(i);
      assert(it != agent_node.end());
      good_arcs[g].push_back({i, static_cast<int>(arcs.size())});
      arcs.push_back({1 + g, it->second, 0, 1});
    }
  }
  // An nplus agent holding beta goods is forced through the shared overflow
  // arc; nminus agents must land on beta-1 or beta.
  for (int i : spec.nplus) {
    arcs.push_back({agent_node[i], P, 0, b - 1});
    arcs.push_back({agent_node[i], K, 0, 1});
  }
  arcs.push_back({K, P, 0, k});
  arcs.push_back({P, t, ell, ell});
  for (int i : spec.nminus) arcs.push_back({agent_node[i], t, b - 1, b});

  CirculationResult res = feasible_circulation(
      n_nodes, arcs,
      "block-assignment k=" + std::to_string(k) + " ell=" + std::to_string(ell));
  if (!res.feasible) return std::nullopt;

  BlockAssignment out;
  for (int i : spec.nplus) out.counts[i] = 0;
  for (int i : spec.nminus) out.counts[i] = 0;
  out.owner.resize(m, -1);
  for (int g = 0; g < m; ++g) {
    for (const auto& [agent, arc] : good_arcs[g])
      if (res.flow[arc] == 1) {
        out.owner[g] = agent;
        out.counts[agent] += 1;
        break;
      }
    assert(out.owner[g] >= 0);
  }
  return out;
}

}  // namespace mixfair
