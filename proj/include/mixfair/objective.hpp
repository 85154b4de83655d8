#pragma once

#include <optional>
#include <string>

#include "mixfair/instance.hpp"
#include "mixfair/rational.hpp"

namespace mixfair {

enum class ObjectiveKind { PowerSum, DecMin, IncMax, Nash };

struct Objective {
  ObjectiveKind kind = ObjectiveKind::PowerSum;
  long long power = 2;  // PowerSum only; integer >= 2 keeps arithmetic exact
};

// Accepts "square-sum", "power:<p>", "dec-min", "inc-max", "nash".
Objective parse_objective(const std::string& s);
std::string objective_name(const Objective& obj);

// Three-way comparison, minimization orientation: negative when a is the
// better vector. All four kinds are order-equivalent to minimizing some
// symmetric strictly convex function, so one comparator serves the solver.
//   PowerSum: smaller sum of p-th powers.
//   DecMin:  lexicographically smaller sorted-descending vector.
//   IncMax:  lexicographically larger sorted-ascending vector.
//   Nash:    fewer zeros, then larger product over the positive entries.
int compare(const Objective& obj, const UtilityVector& a,
            const UtilityVector& b);

// Reported only for PowerSum; the other kinds are pure orders.
std::optional<Rat> objective_value(const Objective& obj,
                                   const UtilityVector& u);

UtilityVector sorted_ascending(const UtilityVector& u);
int compare_sorted_lex(const UtilityVector& a, const UtilityVector& b);

// compare(), then ties broken toward the lexicographically smallest
// sorted-ascending vector. Distinct multisets never tie, which pins the
// solver/oracle agreement down to the sorted utility vector.
int compare_with_tiebreak(const Objective& obj, const UtilityVector& a,
                          const UtilityVector& b);

}  // namespace mixfair
