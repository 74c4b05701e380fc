#include "htr/bivariate_series.hpp"

#include <algorithm>

namespace htr {

BivariateSeries::BivariateSeries(Field field, int order)
    : field_(field), order_(std::max(order, 0)),
      c_(static_cast<std::size_t>(order_) * static_cast<std::size_t>(order_ + 1) / 2, Scalar::zero(field)) {}

std::size_t BivariateSeries::index(int i, int j) const {
  const int d = i + j;
  if (i < 0 || j < 0) throw std::out_of_range("BivariateSeries: negative exponent");
  if (d >= order_) throw InsufficientTruncation("BivariateSeries: total degree outside the window", d, order_);
  return static_cast<std::size_t>(d) * static_cast<std::size_t>(d + 1) / 2 + static_cast<std::size_t>(i);
}

const Scalar& BivariateSeries::coefficient(int i, int j) const { return c_[index(i, j)]; }
Scalar& BivariateSeries::coefficient(int i, int j) { return c_[index(i, j)]; }

BivariateSeries BivariateSeries::truncated(int order) const {
  BivariateSeries out(field_, std::min(order, order_));
  for (int d = 0; d < out.order_; ++d) {
    for (int i = 0; i <= d; ++i) out.coefficient(i, d - i) = coefficient(i, d - i);
  }
  return out;
}

BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries out(a.field_, std::min(a.order_, b.order_));
  for (int d = 0; d < out.order_; ++d) {
    for (int i = 0; i <= d; ++i) out.coefficient(i, d - i) = a.coefficient(i, d - i) - b.coefficient(i, d - i);
  }
  return out;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries out(a.field_, std::min(a.order_, b.order_));
  for (int da = 0; da < out.order_; ++da) {
    for (int ia = 0; ia <= da; ++ia) {
      const Scalar& ca = a.coefficient(ia, da - ia);
      if (ca.is_zero()) continue;
      for (int db = 0; da + db < out.order_; ++db) {
        for (int ib = 0; ib <= db; ++ib) {
          const Scalar& cb = b.coefficient(ib, db - ib);
          if (cb.is_zero()) continue;
          out.coefficient(ia + ib, da - ia + db - ib) += ca * cb;
        }
      }
    }
  }
  return out;
}

BivariateSeries BivariateSeries::inverse() const {
  if (order_ == 0) return *this;
  const Scalar& c0 = coefficient(0, 0);
  if (c0.is_zero()) throw std::domain_error("BivariateSeries: constant term is not invertible");
  const Scalar inv0 = c0.inverse();
  BivariateSeries out(field_, order_);
  out.coefficient(0, 0) = inv0;
  for (int d = 1; d < order_; ++d) {
    for (int i = 0; i <= d; ++i) {
      const int j = d - i;
      Scalar acc = Scalar::zero(field_);
      for (int a = 0; a <= i; ++a) {
        for (int b = 0; b <= j; ++b) {
          if (a == 0 && b == 0) continue;
          const Scalar& ca = coefficient(a, b);
          if (ca.is_zero()) continue;
          acc += ca * out.coefficient(i - a, j - b);
        }
      }
      out.coefficient(i, j) = -(acc * inv0);
    }
  }
  return out;
}

BivariateSeries BivariateSeries::divide_by_difference() const {
  // Degree-d part n_k x1^k x2^{d-k} = (x1 - x2) sum_k p_k x1^k x2^{d-1-k}
  // gives p_0 = -n_0 and p_k = p_{k-1} - n_k, with n_d = p_{d-1} as the check.
  if (order_ > 0 && !coefficient(0, 0).is_zero()) {
    throw InvariantViolation("BivariateSeries: constant term obstructs division by x1 - x2");
  }
  BivariateSeries out(field_, std::max(order_ - 1, 0));
  for (int d = 1; d < order_; ++d) {
    Scalar p = -coefficient(0, d);
    out.coefficient(0, d - 1) = p;
    for (int k = 1; k < d; ++k) {
      p = p - coefficient(k, d - k);
      out.coefficient(k, d - 1 - k) = p;
    }
    if (!(p == coefficient(d, 0))) {
      throw InvariantViolation("BivariateSeries: division by x1 - x2 leaves a remainder");
    }
  }
  return out;
}

}  // namespace htr
