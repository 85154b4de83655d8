#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixfair {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Formats in lowest terms as "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);

// Accepts "p", "-p", "p/q"; anything else throws ParseError.
Rat rat_from_string(const std::string& s);

Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

Rat rat_pow(const Rat& base, long long exp);

// Least common multiple of all denominators; 1 for an empty list.
Int common_denominator(const std::vector<Rat>& values);

// Throws if v does not fit in long long.
long long to_int64(const Int& v);

}  // namespace mixfair
