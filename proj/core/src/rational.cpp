#include "divisive/rational.hpp"

#include "divisive/errors.hpp"

#include <charconv>
#include <cstdio>

namespace divisive {
namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw InputError("malformed rational '" + std::string(whole) + "'");
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw InputError("malformed rational '" + std::string(whole) + "'");
  BigInt value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw InputError("malformed rational '" + std::string(whole) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  const BigInt& den = boost::multiprecision::denominator(value);
  std::string out = boost::multiprecision::numerator(value).str();
  if (den != 1) out += "/" + den.str();
  return out;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::string to_decimal(const Rational& value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", to_double(value));
  return buf;
}

BigInt from_int128(Int128 value) {
  const bool negative = value < 0;
  UInt128 magnitude =
      negative ? static_cast<UInt128>(-(value + 1)) + 1 : static_cast<UInt128>(value);
  BigInt out = static_cast<std::uint64_t>(magnitude >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(magnitude);
  return negative ? BigInt(-out) : out;
}

}  // namespace divisive
