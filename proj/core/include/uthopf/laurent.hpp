#pragma once

// Laurent polynomials in one variable t with exact rational coefficients.

#include "uthopf/rational.hpp"

#include <map>
#include <string>

namespace uthopf {

class Laurent {
public:
  Laurent() = default;
  Laurent(Rational c); // NOLINT: constants convert implicitly
  Laurent(int c) : Laurent(Rational(c)) {} // NOLINT

  static Laurent monomial(int exponent, Rational coeff = Rational(1));
  static Laurent t() { return monomial(1); }

  /// Exponent → nonzero coefficient.
  const std::map<int, Rational> &terms() const { return terms_; }
  Rational coeff(int exponent) const;
  bool is_zero() const { return terms_.empty(); }

  /// Value at t = value; throws InvalidArgument for t = 0 with a negative
  /// exponent present.
  Rational evaluate(const Rational &value) const;

  /// Human-readable form such as "t^2 + t" or "-1 + 3/2*t^-1".
  std::string to_string() const;

  Laurent &operator+=(const Laurent &o);
  Laurent &operator-=(const Laurent &o);
  Laurent &operator*=(const Laurent &o);
  Laurent operator-() const;

  friend Laurent operator+(Laurent a, const Laurent &b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent &b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Laurent &b) { return a *= b; }
  friend bool operator==(const Laurent &, const Laurent &) = default;

private:
  void add_term(int exponent, const Rational &c);

  std::map<int, Rational> terms_;
};

} // namespace uthopf
