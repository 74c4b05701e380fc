#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "htr/laurent_series.hpp"
#include "htr/scalar.hpp"

namespace htr {

enum class CurveKind { Lambert, FramedVertex };

/// Which spectral curve, and over which field. Cheap to copy; the heavy
/// local data lives in CurveModel.
class CurveSpec {
 public:
  static CurveSpec lambert();
  /// Framed vertex with f kept as the indeterminate of Q(f).
  static CurveSpec framed_symbolic();
  /// Framed vertex specialized at a rational framing; f must avoid 0 and -1.
  static CurveSpec framed(const Rational& f);

  CurveKind kind() const { return kind_; }
  Field field() const;
  bool symbolic() const { return kind_ == CurveKind::FramedVertex && !framing_value_; }
  /// f as a scalar of the curve's field (throws for Lambert).
  Scalar framing() const;
  const std::optional<Rational>& framing_value() const { return framing_value_; }

  /// y-coordinate of the ramification point: 1 or f/(f+1).
  Scalar branch_value() const;

  /// "lambert" or "framed".
  std::string name() const;
  /// Stable identifier used for cache keys and file names:
  /// lambert, framed, framed-f3, framed-f-1d2 ...
  std::string tag() const;

  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;

 private:
  CurveKind kind_ = CurveKind::Lambert;
  std::optional<Rational> framing_value_;
};

/// Local data of a spectral curve at its single ramification point, in the
/// coordinate z = y - branch_value.
struct CurveModel {
  CurveSpec spec;
  int trunc = 0;
  /// sigma(z): the local deck transformation, known below z^trunc.
  LaurentSeries involution;
  /// omega(z)/dz, lowest exponent 2.
  LaurentSeries omega;
  /// G(s) = log x(branch + s) - log x(branch), the log-x increment.
  LaurentSeries log_x_increment;
};

CurveModel make_curve_model(const CurveSpec& spec, int trunc);
CurveModel lambert_model(int trunc);
CurveModel framed_model(const Scalar& f, int trunc);

/// Lambert: log(1+s) - s. Framed: f log(1+s/b) + log(1-s/(1-b)).
LaurentSeries log_x_increment(const CurveSpec& spec, int trunc);

/// log(1 + s/b) with b the branch value, i.e. log y - log b.
LaurentSeries log_y_increment(const CurveSpec& spec, int trunc);

/// y(x) = sum mu^{mu-1}/mu! x^mu, the inverse of x = y e^{-y}.
LaurentSeries tree_series(int trunc);

/// y(x) = 1 - sum_n x^n prod_{j=0}^{n-2}(nf+j)/n!, the branch of the framed
/// curve through (0, 1).
LaurentSeries framed_y_series(const Scalar& f, int trunc);

/// The x-projection branch y(x) of either curve, as a series in x.
LaurentSeries curve_y_series(const CurveSpec& spec, int trunc);

/// Sum_k c_k dy/(y - branch)^k, keyed by pole order k.
using PoleForm = std::map<int, Scalar>;

/// Entry m is the z^m coefficient of dE_z(y) as a PoleForm:
/// (1/2) sum_j ([j == m] - [z^m] sigma^j) dy/(y-b)^{j+1}.
std::vector<PoleForm> kernel_coefficients(const CurveModel& curve, int z_order);

}  // namespace htr
