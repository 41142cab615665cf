#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace superq {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

/// Exact rational value of a finite double (every finite double is rational).
Rat rat_from_double(double x);

/// Parses "p", "p/q", or a plain decimal such as "-1.25" or "2.5e-3".
Rat rat_from_string(std::string_view s);

/// Canonical form "p/q", or "p" when the denominator is one.
std::string rat_to_string(const Rat& r);

}  // namespace superq
