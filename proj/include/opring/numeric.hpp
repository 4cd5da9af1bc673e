#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace opring {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

std::string rat_to_string(const Rat& r);

// "p", "-p", "p/q"; throws ParseError on anything else (including q == 0).
Rat parse_rat(const std::string& text);

// n = s^2 * d with d squarefree carrying the sign of n.  Requires n != 0.
std::pair<Int, Int> squarefree_decompose(Int n);

Rat rat_abs(const Rat& r);
Int int_gcd(Int a, Int b);
Int int_lcm(const Int& a, const Int& b);

}  // namespace opring
