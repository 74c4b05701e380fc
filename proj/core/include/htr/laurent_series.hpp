#pragma once

#include <limits>
#include <string>
#include <vector>

#include "htr/scalar.hpp"

namespace htr {

/// Truncated Laurent series  sum_{k} c_k z^k  over Q or Q(f).
///
/// Coefficients are stored densely starting at the valuation (`lowest`);
/// every coefficient with exponent below `trunc` is known exactly, nothing
/// at or above it is. `trunc == kExact` marks a finite, exactly known
/// Laurent polynomial. A series that is zero inside its window has no
/// stored coefficients and `lowest == trunc`.
///
/// Arithmetic propagates the window pessimistically, so asking for a
/// coefficient outside it throws InsufficientTruncation instead of
/// returning a silently wrong value.
class LaurentSeries {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max() / 4;

  explicit LaurentSeries(Field field = Field::Rational);
  LaurentSeries(Field field, int lowest, std::vector<Scalar> coeffs, int trunc = kExact);

  static LaurentSeries zero(Field field, int trunc = kExact);
  static LaurentSeries monomial(const Scalar& coeff, int exponent, int trunc = kExact);
  static LaurentSeries constant(const Scalar& value, int trunc = kExact) { return monomial(value, 0, trunc); }
  /// The coordinate z itself.
  static LaurentSeries variable(Field field) { return monomial(Scalar::one(field), 1); }

  Field field() const { return field_; }
  int lowest() const { return lowest_; }
  int trunc() const { return trunc_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_exact() const { return trunc_ >= kExact; }
  /// Exponent one past the last stored (nonzero) coefficient.
  int end() const { return lowest_ + static_cast<int>(coeffs_.size()); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  /// Coefficient of z^exponent; throws InsufficientTruncation outside the window.
  Scalar coefficient(int exponent) const;

  /// Same series with the window lowered to min(trunc, t).
  LaurentSeries truncated(int t) const;
  /// Declares the window to be t (>= trunc), treating the unknown
  /// coefficients as zero. Only for iterative solvers that control the
  /// resulting error themselves (Newton steps).
  LaurentSeries extended(int t) const;
  /// Multiplication by z^k.
  LaurentSeries shifted(int k) const;
  LaurentSeries derivative() const;
  LaurentSeries specialize(const Rational& f_value) const;

  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  LaurentSeries& operator*=(const Scalar& s);
  LaurentSeries& operator*=(const Rational& s);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(LaurentSeries a, const Scalar& s) { return a *= s; }
  friend LaurentSeries operator*(LaurentSeries a, const Rational& s) { return a *= s; }
  LaurentSeries operator-() const;

  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

  std::string str() const;

 private:
  void normalize();

  Field field_;
  int lowest_;
  std::vector<Scalar> coeffs_;
  int trunc_;
};

/// a + b saturating at LaurentSeries::kExact.
int add_trunc(int a, int b);

/// True when a and b have identical coefficients on their common window.
bool agree(const LaurentSeries& a, const LaurentSeries& b);

/// Product, valid below min(a.trunc + b.lowest, b.trunc + a.lowest).
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b);

/// Multiplicative inverse. `cap` bounds the window of the result; it is
/// required when `a` is an exact polynomial with more than one term.
LaurentSeries series_invert(const LaurentSeries& a, int cap = LaurentSeries::kExact);

/// a^k for any integer k (k < 0 goes through series_invert with `cap`).
LaurentSeries series_pow(const LaurentSeries& a, int k, int cap = LaurentSeries::kExact);

/// Formal composition outer(inner(z)).
LaurentSeries series_compose(const LaurentSeries& outer, const LaurentSeries& inner);

/// Compositional inverse b of a = c1 z + O(z^2): a(b(x)) = x below x^order.
/// Newton iteration, doubling the working precision each step.
LaurentSeries series_reversion(const LaurentSeries& a, int order);

/// Coefficient of z^-1.
Scalar laurent_residue(const LaurentSeries& a);

/// Truncated exp(z), log(1+z), 1/(1-z) below z^trunc.
LaurentSeries exp_series(Field field, int trunc);
LaurentSeries log1p_series(Field field, int trunc);
LaurentSeries geometric_series(Field field, int trunc);

}  // namespace htr
