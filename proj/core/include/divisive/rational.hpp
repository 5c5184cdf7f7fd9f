#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace divisive {

/// Arbitrary-precision exact rational. Every exact-mode value in the library is one of these.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q", "-p/q" or an integer. Throws InputError on anything else or q = 0.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Six-significant-digit decimal rendering (advisory companion to the exact form).
std::string to_decimal(const Rational& value);

__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

BigInt from_int128(Int128 value);

}  // namespace divisive
