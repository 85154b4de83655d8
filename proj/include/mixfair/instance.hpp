#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mixfair/rational.hpp"

namespace mixfair {

enum class GoodKind { Indivisible, Divisible };

struct GoodId {
  GoodKind kind = GoodKind::Indivisible;
  int index = 0;

  friend bool operator==(const GoodId& a, const GoodId& b) = default;
  friend bool operator<(const GoodId& a, const GoodId& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.index < b.index;
  }
};

std::string good_id_to_string(const GoodId& g);  // "m3" / "c0"
GoodId good_id_from_string(const std::string& s);

// Desire-sets are stored as sorted agent-index lists; agents and goods are
// 0-based in file order.
struct Instance {
  int n_agents = 0;
  std::vector<std::vector<int>> indivisible;
  std::vector<std::vector<int>> divisible;
  nlohmann::json names;  // optional metadata, null when absent

  int total_goods() const {
    return static_cast<int>(indivisible.size() + divisible.size());
  }
  friend bool operator==(const Instance& a, const Instance& b) {
    return a.n_agents == b.n_agents && a.indivisible == b.indivisible &&
           a.divisible == b.divisible && a.names == b.names;
  }
};

// Sparse share matrix; zero shares are omitted. The relaxed flag permits
// fractional shares on indivisible goods.
struct Allocation {
  bool relaxed = false;
  std::map<std::pair<int, GoodId>, Rat> shares;

  void add(int agent, GoodId good, const Rat& share);
  Rat share_of(int agent, GoodId good) const;
};

using UtilityVector = std::vector<Rat>;

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);
Allocation parse_allocation(const std::string& text);
std::string serialize_allocation(const Allocation& alloc);
UtilityVector parse_utilities(const std::string& text);
std::string serialize_utilities(const UtilityVector& u);

UtilityVector utility_vector(const Instance& inst, const Allocation& alloc);

// Every violated invariant becomes one report line; an empty result means the
// allocation is valid.
std::vector<std::string> validate_allocation(const Instance& inst,
                                             const Allocation& alloc);

// True iff all desire-sets of the chosen kind coincide (vacuously true for
// zero or one good).
bool goods_identical(const Instance& inst, GoodKind kind);

struct GoodsPartition {
  std::vector<std::vector<int>> indivisible_blocks;
  std::vector<std::vector<int>> divisible_blocks;
};

struct CanonicalPartition;

// Block j gets the goods not taken by earlier blocks whose desire-set lies
// inside the union of agent blocks 1..j.
GoodsPartition goods_canonical_partition(const Instance& inst,
                                         const CanonicalPartition& cp);

}  // namespace mixfair
