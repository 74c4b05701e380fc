#include "htr/serialization.hpp"

#include <stdexcept>

namespace htr {

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const RationalFunction& r) {
  Json num = Json::array(), den = Json::array();
  for (const auto& c : r.numerator().coefficients()) num.push_back(c.str());
  for (const auto& c : r.denominator().coefficients()) den.push_back(c.str());
  return Json{{"num", std::move(num)}, {"den", std::move(den)}};
}

Json to_json(const Scalar& s) {
  if (s.field() == Field::Rational) return to_json(s.as_rational());
  return to_json(s.as_rational_function());
}

Json to_json(const LaurentSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_json(c));
  Json out{{"lowest", s.lowest()}, {"coeffs", std::move(coeffs)}};
  if (!s.is_exact()) out["trunc"] = s.trunc();
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("expected a rational string");
  return Rational::parse(j.get<std::string>());
}

RationalFunction rational_function_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return RationalFunction(rational_from_json(j));
  auto poly = [](const Json& a) {
    std::vector<Rational> c;
    for (const auto& x : a) c.push_back(rational_from_json(x));
    return Polynomial(std::move(c));
  };
  return RationalFunction(poly(j.at("num")), poly(j.at("den")));
}

Scalar scalar_from_json(Field field, const Json& j) {
  if (field == Field::Rational) return Scalar(rational_from_json(j));
  return Scalar(rational_function_from_json(j));
}

Json curve_spec_to_json(const CurveSpec& spec) {
  Json out{{"curve", spec.name()}, {"framing", nullptr}};
  if (spec.kind() == CurveKind::FramedVertex) {
    out["framing"] = spec.framing_value() ? Json(spec.framing_value()->str()) : Json("f");
  }
  return out;
}

CurveSpec curve_spec_from_json(const Json& j) {
  const std::string name = j.at("curve").get<std::string>();
  if (name == "lambert") return CurveSpec::lambert();
  if (name != "framed") throw std::invalid_argument("unknown curve '" + name + "'");
  const Json& f = j.at("framing");
  if (f.is_null() || (f.is_string() && f.get<std::string>() == "f")) return CurveSpec::framed_symbolic();
  return CurveSpec::framed(rational_from_json(f));
}

Json to_json(const CurveModel& model) {
  Json out = curve_spec_to_json(model.spec);
  out["trunc"] = model.trunc;
  Json inv = Json::array();
  for (int k = 1; k < model.involution.trunc(); ++k) inv.push_back(to_json(model.involution.coefficient(k)));
  out["involution"] = std::move(inv);
  Json coeffs = Json::array();
  for (const auto& c : model.omega.coefficients()) coeffs.push_back(to_json(c));
  out["omega"] = Json{{"lowest", model.omega.lowest()}, {"coeffs", std::move(coeffs)}};
  return out;
}

Json to_json(const WAmplitude& amp) {
  Json out = curve_spec_to_json(amp.spec);
  out["g"] = amp.g;
  out["h"] = amp.h;
  out["basis"] = "zeta";
  Json coeffs = Json::array();
  for (const auto& [n, c] : amp.coeffs) coeffs.push_back(Json{{"n", n}, {"value", to_json(c)}});
  out["coeffs"] = std::move(coeffs);
  return out;
}

WAmplitude amplitude_from_json(const Json& j) {
  WAmplitude amp;
  amp.spec = curve_spec_from_json(j);
  amp.g = j.at("g").get<int>();
  amp.h = j.at("h").get<int>();
  if (j.value("basis", "zeta") != "zeta") throw std::invalid_argument("amplitude JSON: unsupported basis");
  for (const auto& e : j.at("coeffs")) {
    auto n = e.at("n").get<std::vector<int>>();
    if (static_cast<int>(n.size()) != amp.h || !std::is_sorted(n.begin(), n.end())) {
      throw std::invalid_argument("amplitude JSON: index tuples must be sorted and of length h");
    }
    Scalar v = scalar_from_json(amp.spec.field(), e.at("value"));
    if (!v.is_zero()) amp.coeffs.emplace(std::move(n), std::move(v));
  }
  return amp;
}

}  // namespace htr
