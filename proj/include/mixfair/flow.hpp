#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mixfair/instance.hpp"
#include "mixfair/rational.hpp"

namespace mixfair {

// Dinic max-flow on integer capacities. Edges are stored in pairs; edge id^1
// is the reverse edge.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n_nodes) : head_(n_nodes, -1) {}

  int add_node();
  int node_count() const { return static_cast<int>(head_.size()); }
  // Returns the forward edge id (even); the paired reverse edge is id+1.
  int add_edge(int from, int to, long long cap);

  long long max_flow(int s, int t);

  long long edge_flow(int id) const { return edges_[id ^ 1].cap; }
  long long edge_cap(int id) const { return edges_[id].cap + edges_[id ^ 1].cap; }

  // After max_flow: nodes reachable from s in the residual graph (the
  // source side of a minimum cut).
  std::vector<char> residual_from(int s) const;
  // Nodes that can reach t in the residual graph (complement = largest
  // min-cut source side).
  std::vector<char> residual_to(int t) const;

  std::string to_dot(const std::string& label,
                     const std::vector<std::string>& node_names) const;

 private:
  struct Edge {
    int to;
    int next;
    long long cap;  // residual capacity
  };
  std::vector<Edge> edges_;
  std::vector<int> head_;
  std::vector<int> level_, iter_;

  bool bfs(int s, int t);
  long long dfs(int v, int t, long long limit);
};

// Debug sink for constructed networks; set by the CLI --dump-network flag.
// Called with a label and the DOT text each time a network is solved.
void set_network_dump(std::function<void(const std::string& label,
                                         const std::string& dot)> sink);
void dump_network(const FlowNetwork& net, const std::string& label,
                  const std::vector<std::string>& node_names);

struct ArcSpec {
  int from = 0;
  int to = 0;
  long long lo = 0;
  long long hi = 0;
};

struct CirculationResult {
  bool feasible = false;
  std::vector<long long> flow;     // per arc, within [lo, hi] when feasible
  std::vector<int> violated_cut;   // certificate node set when infeasible
};

// Feasible circulation with lower bounds via the usual super-source
// transformation. The certificate is the residual-reachable set: demand into
// it exceeds the capacity crossing it.
CirculationResult feasible_circulation(int n_nodes,
                                       const std::vector<ArcSpec>& arcs,
                                       const std::string& dump_label = {});

enum class RealizeKind { Indivisible, Divisible };

// Builds the bipartite goods -> agents network scaled by the common
// denominator of the target and extracts exact shares. Integral targets on
// indivisible goods give a 0/1 allocation; fractional ones are honored with
// relaxed = true. Throws InfeasibleError when no allocation matches.
Allocation realize_from_utilities(const Instance& inst, RealizeKind kind,
                                  const UtilityVector& target);

// One block of the mixed solver: nplus desires the divisible goods, nminus
// does not; goods lists the desire-sets (global agent ids inside the block)
// of the block's indivisible goods.
struct BlockSpec {
  std::vector<int> nplus;
  std::vector<int> nminus;
  std::vector<std::vector<int>> goods;
};

struct BlockAssignment {
  std::map<int, long long> counts;  // agent -> number of goods received
  std::vector<int> owner;           // per good, receiving agent
};

// Assignment of the block's goods such that
//   * agents in nminus receive beta-1 or beta goods,
//   * agents in nplus receive at most beta goods, and at most k of them
//     receive exactly beta,
//   * agents in nplus receive ell goods in total.
// Encoded as a circulation: an nplus agent at beta must route one unit
// through a shared overflow arc of capacity k.
std::optional<BlockAssignment> feasible_block_assignment(const BlockSpec& spec,
                                                         long long k,
                                                         long long ell,
                                                         const Int& beta);

}  // namespace mixfair
