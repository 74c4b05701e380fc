#pragma once

#include <nlohmann/json.hpp>

#include "htr/amplitude.hpp"
#include "htr/curve_model.hpp"

namespace htr {

using Json = nlohmann::ordered_json;

/// "p/q", or "p" when q = 1.
Json to_json(const Rational& q);
/// {"num": [...], "den": [...]} with ascending-degree rational strings.
Json to_json(const RationalFunction& r);
/// Rationals as strings, rational functions as objects.
Json to_json(const Scalar& s);
Json to_json(const LaurentSeries& s);

Rational rational_from_json(const Json& j);
RationalFunction rational_function_from_json(const Json& j);
Scalar scalar_from_json(Field field, const Json& j);

/// {"curve": "lambert"|"framed", "framing": null | "p/q" | "f"}
Json curve_spec_to_json(const CurveSpec& spec);
CurveSpec curve_spec_from_json(const Json& j);

/// {"curve", "framing", "trunc", "involution": [...], "omega": {"lowest", "coeffs"}}
Json to_json(const CurveModel& model);

/// {"curve", "framing", "g", "h", "basis": "zeta", "coeffs": [{"n": [...], "value": ...}]}
Json to_json(const WAmplitude& amp);
WAmplitude amplitude_from_json(const Json& j);

}  // namespace htr
