#pragma once

#include <string>
#include <utility>
#include <vector>

#include "htr/rational.hpp"

namespace htr {

/// Dense univariate polynomial in the framing indeterminate f with rational
/// coefficients, stored in ascending degree. Trailing zeros are trimmed, so
/// the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Rational constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> ascending);

  /// The indeterminate f.
  static Polynomial indeterminate();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(int k) const;
  const Rational& leading() const;

  Rational evaluate(const Rational& at) const;
  Polynomial monic() const;

  /// Splits p = content * primitive where primitive has coprime integer
  /// coefficients and a positive leading coefficient.
  std::pair<Rational, Polynomial> content_and_primitive() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form in descending degree, e.g. "3*f^2-f+1/2".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder of Euclidean division; throws on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero only when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Element of Q(f): numerator / denominator with a monic denominator and
/// gcd(numerator, denominator) = 1. Canonical form makes equality structural.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(Rational constant);      // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial numerator);   // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial numerator, Polynomial denominator);

  static RationalFunction indeterminate() { return RationalFunction(Polynomial::indeterminate()); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  /// Substitutes a rational value for f; throws std::domain_error at a pole.
  Rational evaluate(const Rational& at) const;

  RationalFunction inverse() const;
  RationalFunction pow(int exponent) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  RationalFunction& operator*=(const Rational& s);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// Reduced form with explicit parentheses, e.g. "-(f^2+f)/24".
  std::string str() const;

 private:
  friend RationalFunction ratfunc_normalize(const Polynomial& num, const Polynomial& den);

  struct Canonical {};
  RationalFunction(Polynomial numerator, Polynomial denominator, Canonical)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}

  Polynomial num_;
  Polynomial den_;
};

/// gcd-reduces num/den and makes the denominator monic.
RationalFunction ratfunc_normalize(const Polynomial& num, const Polynomial& den);

}  // namespace htr
