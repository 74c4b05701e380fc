#pragma once

#include <optional>

#include "htr/amplitude.hpp"
#include "htr/bivariate_series.hpp"
#include "htr/curve_model.hpp"
#include "htr/partition.hpp"

namespace htr {

class AmplitudeStore;

struct RecursionOptions {
  /// Curve truncation to start from; default_trunc(g, h) when unset.
  std::optional<int> trunc;
  /// Worker threads for table building and term accumulation.
  unsigned jobs = 1;
  /// Optional on-disk layer consulted on cache misses and fed new results.
  const AmplitudeStore* store = nullptr;
};

/// 6g + 2h + 6.
int default_trunc(int g, int h);

/// W_g(y_1..y_h) for stable (g, h), computed by the residue recursion at the
/// ramification point and memoized in `cache`. On InsufficientTruncation the
/// curve is rebuilt with twice the truncation and the computation restarts.
AmplitudeCache::Ptr w_amplitude(AmplitudeCache& cache, const CurveSpec& spec, int g, int h,
                                const RecursionOptions& options = {});

/// B(q, qbar)/dz^2 = sigma'(z)/(z - sigma(z))^2.
LaurentSeries bergman_self(const CurveModel& curve);

/// Disk amplitude in x below x^order: y(x)/x (Lambert) or log y(x)/x (framed).
LaurentSeries w_unstable_disk(const CurveSpec& spec, int order);

/// Annulus amplitude B(y1, y2)/dx1dx2 - 1/(x1 - x2)^2 for total degree < order.
BivariateSeries w_unstable_annulus(const CurveSpec& spec, int order);

/// F_g = Res Phi W_g, Phi = primitive_constant + integral of log(y/b) dlog x
/// pulled back to z. Requires g >= 2.
Scalar closed_amplitude(AmplitudeCache& cache, const CurveSpec& spec, int g, const Scalar& primitive_constant,
                        const RecursionOptions& options = {});

/// Coefficient of prod x_i^{mu_i - 1} in W_g(x_1..x_h), parts assigned to the
/// variables in order: sum over ordered index tuples of the tensor entry
/// times prod zeta_weight(n_i, mu_i).
Scalar w_as_x_coefficients(const WAmplitude& amp, const Partition& mu);

}  // namespace htr
