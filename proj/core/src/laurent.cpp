#include "uthopf/laurent.hpp"

#include "uthopf/error.hpp"

namespace uthopf {

Laurent::Laurent(Rational c) { add_term(0, c); }

Laurent Laurent::monomial(int exponent, Rational coeff) {
  Laurent out;
  out.add_term(exponent, coeff);
  return out;
}

void Laurent::add_term(int exponent, const Rational &c) {
  if (c == 0)
    return;
  auto [it, fresh] = terms_.emplace(exponent, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Rational Laurent::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Laurent::evaluate(const Rational &value) const {
  Rational out = 0;
  for (const auto &[e, c] : terms_) {
    if (e < 0 && value == 0)
      throw InvalidArgument("negative power of t evaluated at 0");
    Rational p = 1;
    const Rational base = e >= 0 ? value : Rational(1) / value;
    for (int k = 0; k < (e >= 0 ? e : -e); ++k)
      p *= base;
    out += c * p;
  }
  return out;
}

std::string Laurent::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    Rational mag = c < 0 ? -c : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    std::string num = mag.denominator() == 1 ? std::to_string(mag.numerator()) : uthopf::to_string(mag);
    if (e == 0) {
      out += num;
      continue;
    }
    if (mag != 1)
      out += num + "*";
    out += "t";
    if (e != 1)
      out += "^" + std::to_string(e);
  }
  return out;
}

Laurent &Laurent::operator+=(const Laurent &o) {
  for (const auto &[e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

Laurent &Laurent::operator-=(const Laurent &o) {
  for (const auto &[e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

Laurent &Laurent::operator*=(const Laurent &o) {
  Laurent out;
  for (const auto &[e1, c1] : terms_)
    for (const auto &[e2, c2] : o.terms_)
      out.add_term(e1 + e2, c1 * c2);
  terms_ = std::move(out.terms_);
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent out;
  for (const auto &[e, c] : terms_)
    out.add_term(e, -c);
  return out;
}

} // namespace uthopf
