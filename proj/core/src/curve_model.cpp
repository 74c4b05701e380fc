#include "htr/curve_model.hpp"

#include <stdexcept>

namespace htr {

CurveSpec CurveSpec::lambert() { return CurveSpec{}; }

CurveSpec CurveSpec::framed_symbolic() {
  CurveSpec s;
  s.kind_ = CurveKind::FramedVertex;
  return s;
}

CurveSpec CurveSpec::framed(const Rational& f) {
  if (f.is_zero() || f == Rational(-1)) {
    throw std::domain_error("framed curve: framing " + f.str() + " degenerates the branch point");
  }
  CurveSpec s;
  s.kind_ = CurveKind::FramedVertex;
  s.framing_value_ = f;
  return s;
}

Field CurveSpec::field() const { return symbolic() ? Field::RationalFunction : Field::Rational; }

Scalar CurveSpec::framing() const {
  if (kind_ == CurveKind::Lambert) throw std::logic_error("Lambert curve has no framing");
  if (framing_value_) return Scalar(*framing_value_);
  return Scalar(RationalFunction::indeterminate());
}

Scalar CurveSpec::branch_value() const {
  if (kind_ == CurveKind::Lambert) return Scalar::one(Field::Rational);
  const Scalar f = framing();
  return f / (f + Scalar::one(field()));
}

std::string CurveSpec::name() const { return kind_ == CurveKind::Lambert ? "lambert" : "framed"; }

std::string CurveSpec::tag() const {
  if (kind_ == CurveKind::Lambert) return "lambert";
  if (!framing_value_) return "framed";
  std::string v = framing_value_->str();
  for (auto& c : v) {
    if (c == '/') c = 'd';
  }
  return "framed-f" + v;
}

namespace {

// log(1 + c s) below s^trunc.
LaurentSeries scaled_log1p(const Scalar& c, int trunc) {
  const Field field = c.field();
  std::vector<Scalar> out;
  Scalar power = c;
  for (int n = 1; n < trunc; ++n) {
    out.push_back(power * Rational(n % 2 ? 1 : -1, n));
    power *= c;
  }
  return LaurentSeries(field, 1, std::move(out), trunc);
}

// Newton iteration for sigma with G(sigma) = G(z), seeded at -z.
LaurentSeries solve_involution(const LaurentSeries& G, int trunc) {
  const Field field = G.field();
  const int work = trunc + 1;
  const LaurentSeries z = LaurentSeries::variable(field);
  const LaurentSeries Gz = G.truncated(work + 1);
  const LaurentSeries dG = G.derivative();
  LaurentSeries sigma = LaurentSeries::monomial(-Scalar::one(field), 1).truncated(2);
  for (int iter = 0; iter < 64; ++iter) {
    const LaurentSeries s = sigma.extended(work);
    const LaurentSeries F = series_compose(G.truncated(work + 1), s) - Gz;
    const LaurentSeries slope = series_compose(dG.truncated(work + 1), s);
    const LaurentSeries delta = series_mul(F, series_invert(slope)).truncated(trunc);
    if (delta.trunc() < trunc) {
      throw InvariantViolation("involution solver lost precision");
    }
    sigma = (s - delta).truncated(trunc);
    if (delta.is_zero()) return sigma;
  }
  throw InvariantViolation("involution solver did not converge");
}

}  // namespace

LaurentSeries log_y_increment(const CurveSpec& spec, int trunc) {
  const Scalar b = spec.branch_value();
  return scaled_log1p(b.inverse(), trunc);
}

LaurentSeries log_x_increment(const CurveSpec& spec, int trunc) {
  const Field field = spec.field();
  if (spec.kind() == CurveKind::Lambert) {
    return log1p_series(field, trunc) - LaurentSeries::variable(field);
  }
  const Scalar one = Scalar::one(field);
  const Scalar b = spec.branch_value();
  return log_y_increment(spec, trunc) * spec.framing() + scaled_log1p(-(one - b).inverse(), trunc);
}

CurveModel make_curve_model(const CurveSpec& spec, int trunc) {
  if (trunc < 3) throw std::invalid_argument("curve model: trunc must be at least 3");
  CurveModel m;
  m.spec = spec;
  m.trunc = trunc;
  const int n = trunc + 3;
  m.log_x_increment = log_x_increment(spec, n);
  m.involution = solve_involution(m.log_x_increment, trunc);
  // omega = (log y(q) - log y(qbar)) dlog x(q).
  const LaurentSeries L = log_y_increment(spec, n);
  const LaurentSeries dlogx = m.log_x_increment.derivative();
  m.omega = series_mul(L - series_compose(L, m.involution), dlogx).truncated(trunc + 1);
  return m;
}

CurveModel lambert_model(int trunc) { return make_curve_model(CurveSpec::lambert(), trunc); }

CurveModel framed_model(const Scalar& f, int trunc) {
  if (f.field() == Field::Rational) return make_curve_model(CurveSpec::framed(f.as_rational()), trunc);
  if (!(f.as_rational_function() == RationalFunction::indeterminate())) {
    throw std::invalid_argument("framed_model: symbolic framing must be the indeterminate f");
  }
  return make_curve_model(CurveSpec::framed_symbolic(), trunc);
}

LaurentSeries tree_series(int trunc) {
  std::vector<Scalar> c;
  for (int mu = 1; mu < trunc; ++mu) {
    c.emplace_back(Rational(Rational(mu).pow(mu - 1).numerator(), factorial(static_cast<unsigned>(mu))));
  }
  return LaurentSeries(Field::Rational, 1, std::move(c), trunc);
}

LaurentSeries framed_y_series(const Scalar& f, int trunc) {
  const Field field = f.field();
  if (field == Field::Rational && (f.is_zero() || f == Scalar(Rational(-1)))) {
    throw std::domain_error("framed_y_series: framing must avoid 0 and -1");
  }
  std::vector<Scalar> c{Scalar::one(field)};
  for (int n = 1; n < trunc; ++n) {
    Scalar prod = Scalar::one(field);
    for (int j = 0; j <= n - 2; ++j) prod *= f * Rational(n) + Scalar::from_int(field, j);
    c.push_back(-(prod * Rational(mpz_class(1), factorial(static_cast<unsigned>(n)))));
  }
  return LaurentSeries(field, 0, std::move(c), trunc);
}

LaurentSeries curve_y_series(const CurveSpec& spec, int trunc) {
  if (spec.kind() == CurveKind::Lambert) return tree_series(trunc);
  return framed_y_series(spec.framing(), trunc);
}

std::vector<PoleForm> kernel_coefficients(const CurveModel& curve, int z_order) {
  if (z_order >= curve.trunc) {
    throw InsufficientTruncation("kernel_coefficients: curve not known to this order", z_order, curve.trunc);
  }
  const Field field = curve.spec.field();
  std::vector<PoleForm> out(static_cast<std::size_t>(z_order + 1));
  LaurentSeries power = LaurentSeries::constant(Scalar::one(field));
  for (int j = 1; j <= z_order; ++j) {
    power = series_mul(power, curve.involution);
    for (int m = j; m <= z_order; ++m) {
      Scalar c = -power.coefficient(m);
      if (m == j) c += Scalar::one(field);
      if (!c.is_zero()) out[static_cast<std::size_t>(m)][j + 1] = c * Rational(1, 2);
    }
  }
  return out;
}

}  // namespace htr
