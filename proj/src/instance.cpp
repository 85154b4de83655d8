#include "mixfair/instance.hpp"

#include <algorithm>
#include <set>

#include "mixfair/errors.hpp"
#include "mixfair/partition.hpp"

namespace mixfair {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return j;
}

std::vector<std::vector<int>> parse_desire_sets(const json& arr, int n_agents,
                                                const char* what) {
  if (!arr.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::vector<int>> out;
  for (const json& d : arr) {
    if (!d.is_array() || d.empty())
      throw ParseError(std::string(what) + " desire-sets must be non-empty arrays");
    std::vector<int> set;
    for (const json& a : d) {
      if (!a.is_number_integer())
        throw ParseError(std::string(what) + " desire-set entries must be integers");
      int i = a.get<int>();
      if (i < 0 || i >= n_agents)
        throw ParseError("agent index out of range in " + std::string(what));
      set.push_back(i);
    }
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end())
      throw ParseError("duplicate agent in a " + std::string(what) + " desire-set");
    out.push_back(std::move(set));
  }
  return out;
}

}  // namespace

std::string good_id_to_string(const GoodId& g) {
  return (g.kind == GoodKind::Indivisible ? "m" : "c") + std::to_string(g.index);
}

GoodId good_id_from_string(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'm' && s[0] != 'c'))
    throw ParseError("not a good id: '" + s + "'");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("not a good id: '" + s + "'");
  GoodId g;
  g.kind = s[0] == 'm' ? GoodKind::Indivisible : GoodKind::Divisible;
  g.index = std::stoi(s.substr(1));
  return g;
}

void Allocation::add(int agent, GoodId good, const Rat& share) {
  if (share == 0) return;
  shares[{agent, good}] += share;
}

Rat Allocation::share_of(int agent, GoodId good) const {
  auto it = shares.find({agent, good});
  return it == shares.end() ? Rat(0) : it->second;
}

Instance parse_instance(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  if (!j.contains("agents") || !j["agents"].is_number_integer())
    throw ParseError("instance requires an integer \"agents\" field");
  Instance inst;
  inst.n_agents = j["agents"].get<int>();
  if (inst.n_agents <= 0) throw ParseError("\"agents\" must be positive");
  if (j.contains("indivisible"))
    inst.indivisible = parse_desire_sets(j["indivisible"], inst.n_agents, "indivisible");
  if (j.contains("divisible"))
    inst.divisible = parse_desire_sets(j["divisible"], inst.n_agents, "divisible");
  if (j.contains("names")) {
    if (!j["names"].is_object()) throw ParseError("\"names\" must be an object");
    inst.names = j["names"];
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  json j;
  j["agents"] = inst.n_agents;
  j["indivisible"] = inst.indivisible;
  j["divisible"] = inst.divisible;
  if (!inst.names.is_null()) j["names"] = inst.names;
  return j.dump(2);
}

Allocation parse_allocation(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("shares") || !j["shares"].is_array())
    throw ParseError("allocation requires a \"shares\" array");
  Allocation alloc;
  alloc.relaxed = j.value("relaxed", false);
  for (const json& s : j["shares"]) {
    if (!s.is_object() || !s.contains("agent") || !s.contains("good") ||
        !s.contains("share"))
      throw ParseError("each share needs \"agent\", \"good\", \"share\"");
    if (!s["agent"].is_number_integer() || !s["good"].is_string() ||
        !s["share"].is_string())
      throw ParseError("share fields have the wrong types");
    int agent = s["agent"].get<int>();
    GoodId good = good_id_from_string(s["good"].get<std::string>());
    Rat share = rat_from_string(s["share"].get<std::string>());
    if (alloc.shares.count({agent, good}))
      throw ParseError("duplicate share entry for agent " +
                       std::to_string(agent) + ", good " + good_id_to_string(good));
    alloc.shares[{agent, good}] = share;
  }
  return alloc;
}

std::string serialize_allocation(const Allocation& alloc) {
  json shares = json::array();
  for (const auto& [key, share] : alloc.shares) {
    json s;
    s["agent"] = key.first;
    s["good"] = good_id_to_string(key.second);
    s["share"] = rat_to_string(share);
    shares.push_back(s);
  }
  json j;
  j["relaxed"] = alloc.relaxed;
  j["shares"] = shares;
  return j.dump(2);
}

UtilityVector parse_utilities(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("utilities") || !j["utilities"].is_array())
    throw ParseError("expected a \"utilities\" array");
  UtilityVector u;
  for (const json& v : j["utilities"]) {
    if (v.is_string())
      u.push_back(rat_from_string(v.get<std::string>()));
    else if (v.is_number_integer())
      u.push_back(Rat(v.get<long long>()));
    else
      throw ParseError("utilities must be rational strings");
  }
  return u;
}

std::string serialize_utilities(const UtilityVector& u) {
  json arr = json::array();
  for (const Rat& v : u) arr.push_back(rat_to_string(v));
  json j;
  j["utilities"] = arr;
  return j.dump(2);
}

UtilityVector utility_vector(const Instance& inst, const Allocation& alloc) {
  UtilityVector u(inst.n_agents, Rat(0));
  for (const auto& [key, share] : alloc.shares) {
    const auto& [agent, good] = key;
    if (agent < 0 || agent >= inst.n_agents)
      throw ParseError("allocation references agent " + std::to_string(agent));
    const auto& sets =
        good.kind == GoodKind::Indivisible ? inst.indivisible : inst.divisible;
    if (good.index < 0 || good.index >= static_cast<int>(sets.size()))
      throw ParseError("allocation references unknown good " +
                       good_id_to_string(good));
    const auto& desire = sets[good.index];
    if (std::binary_search(desire.begin(), desire.end(), agent))
      u[agent] += share;
  }
  return u;
}

std::vector<std::string> validate_allocation(const Instance& inst,
                                             const Allocation& alloc) {
  std::vector<std::string> report;
  auto note = [&](const std::string& line) { report.push_back(line); };

  std::map<GoodId, Rat> totals;
  for (const auto& [key, share] : alloc.shares) {
    const auto& [agent, good] = key;
    std::string tag = "agent " + std::to_string(agent) + ", good " +
                      good_id_to_string(good);
    if (agent < 0 || agent >= inst.n_agents) {
      note("unknown agent: " + tag);
      continue;
    }
    const auto& sets =
        good.kind == GoodKind::Indivisible ? inst.indivisible : inst.divisible;
    if (good.index < 0 || good.index >= static_cast<int>(sets.size())) {
      note("unknown good: " + tag);
      continue;
    }
    if (share < 0) note("negative share: " + tag);
    if (share > 1) note("share above 1: " + tag);
    const auto& desire = sets[good.index];
    if (!std::binary_search(desire.begin(), desire.end(), agent))
      note("share to an agent that does not desire the good: " + tag);
    if (!alloc.relaxed && good.kind == GoodKind::Indivisible &&
        denominator(share) != 1)
      note("fractional share of an indivisible good: " + tag);
    totals[good] += share;
  }
  for (int g = 0; g < static_cast<int>(inst.indivisible.size()); ++g)
    totals.emplace(GoodId{GoodKind::Indivisible, g}, Rat(0));
  for (int g = 0; g < static_cast<int>(inst.divisible.size()); ++g)
    totals.emplace(GoodId{GoodKind::Divisible, g}, Rat(0));
  for (const auto& [good, total] : totals)
    if (total != 1)
      note("good " + good_id_to_string(good) + " allocated " +
           rat_to_string(total) + ", expected 1");
  return report;
}

bool goods_identical(const Instance& inst, GoodKind kind) {
  const auto& sets =
      kind == GoodKind::Indivisible ? inst.indivisible : inst.divisible;
  for (const auto& d : sets)
    if (d != sets.front()) return false;
  return true;
}

GoodsPartition goods_canonical_partition(const Instance& inst,
                                         const CanonicalPartition& cp) {
  GoodsPartition gp;
  gp.indivisible_blocks.resize(cp.blocks.size());
  gp.divisible_blocks.resize(cp.blocks.size());
  std::set<int> prefix;  // agents of blocks 1..j
  std::vector<char> taken_m(inst.indivisible.size(), 0),
      taken_c(inst.divisible.size(), 0);
  for (std::size_t j = 0; j < cp.blocks.size(); ++j) {
    prefix.insert(cp.blocks[j].begin(), cp.blocks[j].end());
    auto inside = [&](const std::vector<int>& desire) {
      return std::all_of(desire.begin(), desire.end(),
                         [&](int a) { return prefix.count(a) > 0; });
    };
    for (std::size_t g = 0; g < inst.indivisible.size(); ++g)
      if (!taken_m[g] && inside(inst.indivisible[g])) {
        taken_m[g] = 1;
        gp.indivisible_blocks[j].push_back(static_cast<int>(g));
      }
    for (std::size_t g = 0; g < inst.divisible.size(); ++g)
      if (!taken_c[g] && inside(inst.divisible[g])) {
        taken_c[g] = 1;
        gp.divisible_blocks[j].push_back(static_cast<int>(g));
      }
  }
  return gp;
}

}  // namespace mixfair
