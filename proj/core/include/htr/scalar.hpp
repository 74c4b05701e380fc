#pragma once

#include <string>
#include <variant>

#include "htr/errors.hpp"
#include "htr/rational.hpp"
#include "htr/rational_function.hpp"

namespace htr {

/// Coefficient field of a computation. Fixed when a computation starts:
/// Lambert runs live in Q, symbolic framed runs live in Q(f).
enum class Field { Rational, RationalFunction };

const char* field_name(Field field);

/// Element of Q or Q(f). Binary arithmetic between the two variants throws
/// FieldMismatch; scaling by a plain Rational is allowed in either field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Rational value) : v_(std::move(value)) {}           // NOLINT(google-explicit-constructor)
  Scalar(RationalFunction value) : v_(std::move(value)) {}   // NOLINT(google-explicit-constructor)

  static Scalar zero(Field field);
  static Scalar one(Field field) { return from_rational(field, Rational(1)); }
  static Scalar from_int(Field field, long value) { return from_rational(field, Rational(value)); }
  static Scalar from_rational(Field field, const Rational& value);

  Field field() const { return v_.index() == 0 ? Field::Rational : Field::RationalFunction; }
  bool is_zero() const;
  bool is_one() const;

  const Rational& as_rational() const;
  const RationalFunction& as_rational_function() const;

  /// Substitutes f = value. Rationals are returned unchanged.
  Scalar specialize(const Rational& value) const;

  Scalar inverse() const;
  Scalar pow(int exponent) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar& operator*=(const Rational& s);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator*(Scalar a, const Rational& s) { return a *= s; }
  friend Scalar operator*(const Rational& s, Scalar a) { return a *= s; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

  std::string str() const;

 private:
  void require_same_field(const Scalar& o, const char* op) const;
  std::variant<Rational, RationalFunction> v_;
};

}  // namespace htr
