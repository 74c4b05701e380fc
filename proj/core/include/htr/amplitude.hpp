#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "htr/curve_model.hpp"

namespace htr {

/// W_g(y_1..y_h) as a symmetric tensor over the zeta basis. Only sorted
/// index tuples are stored; zero entries are omitted.
struct WAmplitude {
  CurveSpec spec;
  int g = 0;
  int h = 0;
  /// Truncation of the curve model the tensor was computed with.
  int trunc = 0;
  std::map<std::vector<int>, Scalar> coeffs;

  /// Coefficient of prod zeta_{n_i}(y_i) for an index tuple in any order.
  Scalar at(std::vector<int> indices) const;

  friend bool operator==(const WAmplitude& a, const WAmplitude& b) {
    return a.spec == b.spec && a.g == b.g && a.h == b.h && a.coeffs == b.coeffs;
  }
};

bool is_stable(int g, int h);

/// Memo table of computed amplitudes keyed by (curve tag, g, h). Entries are
/// immutable once inserted; concurrent readers are allowed.
class AmplitudeCache {
 public:
  using Ptr = std::shared_ptr<const WAmplitude>;

  Ptr find(const CurveSpec& spec, int g, int h) const;
  /// Inserts unless present; returns the stored entry either way.
  Ptr insert(WAmplitude amp);
  std::size_t size() const;
  void clear();

 private:
  using Key = std::tuple<std::string, int, int>;
  mutable std::shared_mutex mutex_;
  std::map<Key, Ptr> entries_;
};

}  // namespace htr
