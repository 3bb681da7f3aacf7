// Exact rational scalars: arbitrary-precision, always in lowest terms with a
// positive denominator (maintained by boost::multiprecision::cpp_rational).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ddx {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or "p" (optional sign, arbitrary precision). Throws
// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical text form: "p/q", with "/q" omitted when the denominator is 1.
std::string rational_str(const Rational& r);

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

}  // namespace ddx
