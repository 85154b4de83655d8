#include "mixfair/rational.hpp"

#include <boost/integer/common_factor_rt.hpp>
#include <limits>

#include "mixfair/errors.hpp"

namespace mixfair {

std::string rat_to_string(const Rat& r) {
  Int num = numerator(r);
  Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat rat_from_string(const std::string& s) {
  auto bad = [&] { throw ParseError("not a rational: '" + s + "'"); };
  auto parse_int = [&](const std::string& t) -> Int {
    if (t.empty()) bad();
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) bad();
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) bad();
    return Int(t);
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den <= 0) bad();
  return Rat(num, den);
}

Int rat_floor(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

Rat rat_pow(const Rat& base, long long exp) {
  if (exp < 0) {
    if (base == 0) throw std::domain_error("0 to a negative power");
    return Rat(1) / rat_pow(base, -exp);
  }
  Rat result(1), b = base;
  long long e = exp;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

Int common_denominator(const std::vector<Rat>& values) {
  Int l = 1;
  for (const Rat& v : values) l = boost::integer::lcm(l, Int(denominator(v)));
  return l;
}

long long to_int64(const Int& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw std::overflow_error("value does not fit in 64 bits: " + v.str());
  return static_cast<long long>(v);
}

}  // namespace mixfair
