#include "htr/scalar.hpp"

#include <string>

namespace htr {

const char* field_name(Field field) { return field == Field::Rational ? "Q" : "Q(f)"; }

Scalar Scalar::zero(Field field) {
  if (field == Field::Rational) return Scalar(Rational(0));
  return Scalar(RationalFunction());
}

Scalar Scalar::from_rational(Field field, const Rational& value) {
  if (field == Field::Rational) return Scalar(value);
  return Scalar(RationalFunction(value));
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

bool Scalar::is_one() const {
  if (const auto* q = std::get_if<Rational>(&v_)) return q->is_one();
  const auto& r = std::get<RationalFunction>(v_);
  return r.is_polynomial() && r.numerator() == Polynomial(Rational(1));
}

const Rational& Scalar::as_rational() const {
  if (const auto* q = std::get_if<Rational>(&v_)) return *q;
  throw FieldMismatch("Scalar: expected a rational, found an element of Q(f)");
}

const RationalFunction& Scalar::as_rational_function() const {
  if (const auto* r = std::get_if<RationalFunction>(&v_)) return *r;
  throw FieldMismatch("Scalar: expected an element of Q(f), found a rational");
}

Scalar Scalar::specialize(const Rational& value) const {
  if (const auto* r = std::get_if<RationalFunction>(&v_)) return Scalar(r->evaluate(value));
  return *this;
}

Scalar Scalar::inverse() const {
  return std::visit([](const auto& x) { return Scalar(x.inverse()); }, v_);
}

Scalar Scalar::pow(int exponent) const {
  return std::visit([exponent](const auto& x) { return Scalar(x.pow(exponent)); }, v_);
}

void Scalar::require_same_field(const Scalar& o, const char* op) const {
  if (v_.index() != o.v_.index()) {
    throw FieldMismatch(std::string("Scalar: ") + op + " mixes " + field_name(field()) + " and " +
                        field_name(o.field()));
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o, "+");
  if (auto* q = std::get_if<Rational>(&v_)) {
    *q += std::get<Rational>(o.v_);
  } else {
    std::get<RationalFunction>(v_) += std::get<RationalFunction>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o, "-");
  if (auto* q = std::get_if<Rational>(&v_)) {
    *q -= std::get<Rational>(o.v_);
  } else {
    std::get<RationalFunction>(v_) -= std::get<RationalFunction>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o, "*");
  if (auto* q = std::get_if<Rational>(&v_)) {
    *q *= std::get<Rational>(o.v_);
  } else {
    std::get<RationalFunction>(v_) *= std::get<RationalFunction>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o, "/");
  if (auto* q = std::get_if<Rational>(&v_)) {
    *q /= std::get<Rational>(o.v_);
  } else {
    std::get<RationalFunction>(v_) /= std::get<RationalFunction>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Rational& s) {
  std::visit([&s](auto& x) { x *= s; }, v_);
  return *this;
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& x) { return Scalar(-x); }, v_);
}

std::string Scalar::str() const {
  return std::visit([](const auto& x) { return x.str(); }, v_);
}

}  // namespace htr
