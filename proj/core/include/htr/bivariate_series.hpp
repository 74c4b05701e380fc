#pragma once

#include <vector>

#include "htr/scalar.hpp"

namespace htr {

/// Power series in x1, x2 known for total degree < order.
class BivariateSeries {
 public:
  BivariateSeries(Field field, int order);

  Field field() const { return field_; }
  int order() const { return order_; }

  /// Coefficient of x1^i x2^j; throws InsufficientTruncation when i + j >= order.
  const Scalar& coefficient(int i, int j) const;
  Scalar& coefficient(int i, int j);

  BivariateSeries truncated(int order) const;

  friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
  BivariateSeries inverse() const;
  /// Exact quotient by (x1 - x2); throws InvariantViolation on a remainder.
  BivariateSeries divide_by_difference() const;

 private:
  std::size_t index(int i, int j) const;
  Field field_;
  int order_;
  std::vector<Scalar> c_;  // grouped by total degree d, then by i
};

}  // namespace htr
