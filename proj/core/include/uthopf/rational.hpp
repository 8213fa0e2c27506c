#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

// Boost 1.74 under C++20: the reversed-operand rewrite makes rational == int
// recurse forever.  Exact non-template overloads win overload resolution.
namespace boost {
inline bool operator==(const rational<std::int64_t> &a, int b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t> &a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
} // namespace boost

namespace uthopf {

using Rational = boost::rational<std::int64_t>;

/// Formats as "a/b" (always with a denominator, "3/1" for integers).
std::string to_string(const Rational &r);

/// Parses "a/b" or "a"; throws InvalidArgument on malformed input.
Rational parse_rational(std::string_view text);

} // namespace uthopf
