#include "uthopf/rational.hpp"

#include "uthopf/error.hpp"

#include <charconv>

namespace uthopf {

std::string to_string(const Rational &r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char *first = text.data();
  const char *last = text.data() + text.size();
  if (!text.empty() && text.front() == '+')
    ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw InvalidArgument("malformed rational component '" + std::string(text) + "'");
  return value;
}

} // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_int(text));
  const auto den = parse_int(text.substr(slash + 1));
  if (den == 0)
    throw InvalidArgument("rational with zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

} // namespace uthopf
