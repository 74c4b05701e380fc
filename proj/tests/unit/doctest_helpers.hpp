#pragma once

#include <doctest.h>

#include <ostream>

#include "htr/laurent_series.hpp"

namespace htr {

inline std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }
inline std::ostream& operator<<(std::ostream& os, const RationalFunction& v) { return os << v.str(); }
inline std::ostream& operator<<(std::ostream& os, const Scalar& v) { return os << v.str(); }
inline std::ostream& operator<<(std::ostream& os, const LaurentSeries& v) { return os << v.str(); }

}  // namespace htr
