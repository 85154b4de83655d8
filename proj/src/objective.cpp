#include "mixfair/objective.hpp"

#include <algorithm>
#include <cassert>

#include "mixfair/errors.hpp"

namespace mixfair {

Objective parse_objective(const std::string& s) {
  if (s == "square-sum") return {ObjectiveKind::PowerSum, 2};
  if (s == "dec-min") return {ObjectiveKind::DecMin, 2};
  if (s == "inc-max") return {ObjectiveKind::IncMax, 2};
  if (s == "nash") return {ObjectiveKind::Nash, 2};
  if (s.rfind("power:", 0) == 0) {
    long long p = 0;
    try {
      std::size_t used = 0;
      p = std::stoll(s.substr(6), &used);
      if (used != s.size() - 6) p = 0;
    } catch (const std::exception&) {
      p = 0;
    }
    if (p < 2) throw ParseError("power objectives need an integer exponent >= 2");
    return {ObjectiveKind::PowerSum, p};
  }
  throw ParseError("unknown objective '" + s + "'");
}

std::string objective_name(const Objective& obj) {
  switch (obj.kind) {
    case ObjectiveKind::PowerSum:
      return obj.power == 2 ? "square-sum" : "power:" + std::to_string(obj.power);
    case ObjectiveKind::DecMin:
      return "dec-min";
    case ObjectiveKind::IncMax:
      return "inc-max";
    case ObjectiveKind::Nash:
      return "nash";
  }
  return "?";
}

UtilityVector sorted_ascending(const UtilityVector& u) {
  UtilityVector s = u;
  std::sort(s.begin(), s.end());
  return s;
}

int compare_sorted_lex(const UtilityVector& a, const UtilityVector& b) {
  UtilityVector sa = sorted_ascending(a), sb = sorted_ascending(b);
  assert(sa.size() == sb.size());
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (sa[i] < sb[i]) return -1;
    if (sa[i] > sb[i]) return 1;
  }
  return 0;
}

namespace {

int three_way(const Rat& a, const Rat& b) { return a < b ? -1 : a > b ? 1 : 0; }

int compare_power_sum(long long p, const UtilityVector& a,
                      const UtilityVector& b) {
  Rat sa(0), sb(0);
  for (const Rat& v : a) sa += rat_pow(v, p);
  for (const Rat& v : b) sb += rat_pow(v, p);
  return three_way(sa, sb);
}

int compare_nash(const UtilityVector& a, const UtilityVector& b) {
  long long za = std::count(a.begin(), a.end(), Rat(0));
  long long zb = std::count(b.begin(), b.end(), Rat(0));
  if (za != zb) return za < zb ? -1 : 1;
  Rat pa(1), pb(1);
  for (const Rat& v : a)
    if (v != 0) pa *= v;
  for (const Rat& v : b)
    if (v != 0) pb *= v;
  return three_way(pb, pa);  // larger product is better
}

}  // namespace

int compare(const Objective& obj, const UtilityVector& a,
            const UtilityVector& b) {
  assert(a.size() == b.size());
  switch (obj.kind) {
    case ObjectiveKind::PowerSum:
      return compare_power_sum(obj.power, a, b);
    case ObjectiveKind::DecMin: {
      UtilityVector sa = sorted_ascending(a), sb = sorted_ascending(b);
      std::reverse(sa.begin(), sa.end());
      std::reverse(sb.begin(), sb.end());
      for (std::size_t i = 0; i < sa.size(); ++i)
        if (int c = three_way(sa[i], sb[i])) return c;
      return 0;
    }
    case ObjectiveKind::IncMax: {
      UtilityVector sa = sorted_ascending(a), sb = sorted_ascending(b);
      for (std::size_t i = 0; i < sa.size(); ++i)
        if (int c = three_way(sb[i], sa[i])) return c;  // larger minimum wins
      return 0;
    }
    case ObjectiveKind::Nash:
      return compare_nash(a, b);
  }
  return 0;
}

std::optional<Rat> objective_value(const Objective& obj,
                                   const UtilityVector& u) {
  if (obj.kind != ObjectiveKind::PowerSum) return std::nullopt;
  Rat s(0);
  for (const Rat& v : u) s += rat_pow(v, obj.power);
  return s;
}

int compare_with_tiebreak(const Objective& obj, const UtilityVector& a,
                          const UtilityVector& b) {
  if (int c = compare(obj, a, b)) return c;
  return compare_sorted_lex(a, b);
}

}  // namespace mixfair
