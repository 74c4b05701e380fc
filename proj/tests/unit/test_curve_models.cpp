#include "doctest_helpers.hpp"

#include "htr/curve_model.hpp"
#include "htr/zeta_basis.hpp"

using namespace htr;

namespace {

const Field Q = Field::Rational;
const Field QF = Field::RationalFunction;

Rational q(const char* s) { return Rational::parse(s); }

Scalar fsym() { return Scalar(RationalFunction::indeterminate()); }

RationalFunction poly(std::vector<Rational> c) { return RationalFunction(Polynomial(std::move(c))); }

// sqrt(1 + t) as a power series, from the binomial coefficients.
LaurentSeries sqrt1p(Field field, int trunc) {
  std::vector<Scalar> c;
  Rational coef(1);
  for (int n = 0; n < trunc; ++n) {
    c.push_back(Scalar::from_rational(field, coef));
    coef *= Rational(1, 2) - Rational(n);
    coef /= Rational(n + 1);
  }
  return LaurentSeries(field, 0, std::move(c), trunc);
}

// Independent route to the involution: with G(s) = c2 s^2 phi(s) and
// psi(s) = s sqrt(phi(s)), G(a) = G(b) on different sheets means
// psi(sigma) = -psi(z).
LaurentSeries involution_by_square_root(const CurveSpec& spec, int trunc) {
  const Field field = spec.field();
  const LaurentSeries G = log_x_increment(spec, trunc + 3);
  const Scalar c2 = G.coefficient(2);
  const LaurentSeries phi = (G * c2.inverse()).shifted(-2);
  const LaurentSeries root = series_compose(sqrt1p(field, trunc + 1), phi - LaurentSeries::constant(Scalar::one(field)));
  const LaurentSeries psi = series_mul(LaurentSeries::variable(field), root);
  const LaurentSeries psi_inv = series_reversion(psi, trunc);
  return series_compose(psi_inv, -psi).truncated(trunc);
}

}  // namespace

TEST_CASE("Lambert involution matches the displayed S(z)") {
  const CurveModel m = lambert_model(8);
  const std::vector<const char*> expect{"-1", "2/3", "-4/9", "44/135", "-104/405", "40/189", "-7648/42525"};
  for (int k = 1; k <= 7; ++k) CHECK(m.involution.coefficient(k) == Scalar(q(expect[static_cast<std::size_t>(k - 1)])));
  CHECK(m.involution.trunc() == 8);
  CHECK(agree(m.involution, involution_by_square_root(CurveSpec::lambert(), 8)));
}

TEST_CASE("Lambert omega and its simplified form") {
  const CurveModel m = lambert_model(10);
  CHECK(m.omega.lowest() == 2);
  CHECK(m.omega.coefficient(2) == Scalar(Rational(-2)));
  // (S - z) z / (1 + z)
  const LaurentSeries z = LaurentSeries::variable(Q);
  std::vector<Scalar> alt;
  for (int n = 0; n < 12; ++n) alt.emplace_back(Rational(n % 2 ? -1 : 1));
  const LaurentSeries inv1pz(Q, 0, alt, 12);
  const LaurentSeries simple = series_mul(series_mul(m.involution - z, z), inv1pz);
  CHECK(agree(m.omega, simple));
  CHECK(series_mul(m.omega, series_invert(m.omega)).coefficient(0) == Scalar(Rational(1)));
}

TEST_CASE("framed involution matches the displayed P(z)") {
  const CurveModel m = framed_model(fsym(), 5);
  const RationalFunction f = RationalFunction::indeterminate();
  const RationalFunction one(Rational(1));
  const RationalFunction f2m1 = f * f - one;
  CHECK(m.involution.coefficient(1) == Scalar(RationalFunction(Rational(-1))));
  CHECK(m.involution.coefficient(2) == Scalar(RationalFunction(Rational(-2, 3)) * f2m1 / f));
  CHECK(m.involution.coefficient(3) == Scalar(RationalFunction(Rational(-4, 9)) * f2m1 * f2m1 / (f * f)));
  const RationalFunction cubic = poly({-22, 57, -57, 22});
  const RationalFunction c4 = RationalFunction(Rational(-2, 135)) * (one + f).pow(3) * cubic / f.pow(3);
  CHECK(m.involution.coefficient(4) == Scalar(c4));
  CHECK(agree(make_curve_model(CurveSpec::framed_symbolic(), 9).involution,
              involution_by_square_root(CurveSpec::framed_symbolic(), 9)));
}

TEST_CASE("framed model specializes consistently") {
  const CurveModel sym = framed_model(fsym(), 8);
  const CurveModel two = framed_model(Scalar(Rational(2)), 8);
  CHECK(two.spec.field() == Q);
  CHECK(sym.involution.specialize(Rational(2)) == two.involution);
  CHECK(sym.omega.specialize(Rational(2)) == two.omega);
  CHECK_THROWS_AS(framed_model(Scalar(Rational(0)), 5), std::domain_error);
  CHECK_THROWS_AS(framed_model(Scalar(Rational(-1)), 5), std::domain_error);
}

TEST_CASE("involutions are involutions and respect the curve equation") {
  for (const CurveSpec& spec : {CurveSpec::lambert(), CurveSpec::framed_symbolic(), CurveSpec::framed(q("-1/2"))}) {
    const CurveModel m = make_curve_model(spec, 9);
    const LaurentSeries twice = series_compose(m.involution, m.involution);
    CHECK(agree(twice, LaurentSeries::variable(spec.field())));
    CHECK(twice.trunc() == 9);
    const LaurentSeries G = log_x_increment(spec, 12);
    const LaurentSeries diff = series_compose(G, m.involution) - G;
    CHECK(diff.is_zero());
    CHECK(diff.trunc() >= 9);
  }
  // Lambert curve equation with exponentials: (1+z)e^{-z} = (1+S)e^{-S}.
  const CurveModel m = lambert_model(9);
  const LaurentSeries one = LaurentSeries::constant(Scalar::one(Q));
  const LaurentSeries z = LaurentSeries::variable(Q);
  const LaurentSeries e = exp_series(Q, 12);
  const LaurentSeries lhs = series_mul(one + z, series_compose(e, -z));
  const LaurentSeries rhs = series_mul(one + m.involution, series_compose(e, -m.involution));
  CHECK((lhs - rhs).is_zero());
}

TEST_CASE("tree function coefficients") {
  const LaurentSeries t = tree_series(21);
  for (int mu = 1; mu <= 20; ++mu) {
    CHECK(t.coefficient(mu) == Scalar(Rational(Rational(mu).pow(mu - 1).numerator(), factorial(static_cast<unsigned>(mu)))));
  }
  CHECK(t.coefficient(3) == Scalar(q("3/2")));
  // x(y(x)) = x
  const LaurentSeries x = series_mul(t, series_compose(exp_series(Q, 21), -t));
  CHECK(agree(x, LaurentSeries::variable(Q)));
}

TEST_CASE("framed y(x)") {
  const LaurentSeries y = framed_y_series(fsym(), 8);
  CHECK(y.coefficient(1) == Scalar(RationalFunction(Rational(-1))));
  CHECK(y.coefficient(2) == Scalar(-RationalFunction::indeterminate()));
  // f = 1: y - y^2 = x.
  const LaurentSeries y1 = framed_y_series(Scalar(Rational(1)), 12);
  const LaurentSeries lhs = y1 - series_mul(y1, y1);
  CHECK(agree(lhs, LaurentSeries::variable(Q)));
  // Specialization commutes with construction.
  CHECK(y.specialize(Rational(3)) == framed_y_series(Scalar(Rational(3)), 8));
}

TEST_CASE("zeta forms") {
  const ZetaBasis L(CurveSpec::lambert(), 10);
  CHECK(zeta_form(L, 0) == PoleForm{{2, Scalar(Rational(1))}});
  // (1+2y)/(1-y)^4 = 3/(y-1)^4 + 2/(y-1)^3
  CHECK(zeta_form(L, 1) == PoleForm{{3, Scalar(Rational(2))}, {4, Scalar(Rational(3))}});
  const ZetaBasis F(CurveSpec::framed_symbolic(), 6);
  const RationalFunction f = RationalFunction::indeterminate();
  const RationalFunction f1 = f + RationalFunction(Rational(1));
  CHECK(zeta_form(F, 0) == PoleForm{{2, Scalar(-f1.pow(-2))}});
  // zeta_1(y,f) = (-f + y(y-2) + f y^2)/(y + f(y-1))^4
  const PoleForm z1 = zeta_form(F, 1);
  CHECK(z1.at(2) == Scalar(f1.pow(-3)));
  CHECK(z1.at(3) == Scalar(RationalFunction(Rational(2)) * (f - RationalFunction(Rational(1))) * f1.pow(-4)));
  CHECK(z1.at(4) == Scalar(RationalFunction(Rational(-3)) * f * f1.pow(-5)));
  for (int n = 0; n <= 10; ++n) {
    const PoleForm& z = zeta_form(L, n);
    CHECK(z.begin()->first == n + 2);
    CHECK(std::prev(z.end())->first == 2 * n + 2);
    CHECK(!z.count(1));
    CHECK(!std::prev(z.end())->second.is_zero());
    CHECK(pole_to_zeta(L, z) == std::map<int, Scalar>{{n, Scalar(Rational(1))}});
  }
}

TEST_CASE("pole_to_zeta") {
  const ZetaBasis L(CurveSpec::lambert(), 6);
  // Pole part of -zeta_0/24 + zeta_1/24.
  const PoleForm w1{{2, Scalar(q("-1/24"))}, {3, Scalar(q("1/12"))}, {4, Scalar(q("1/8"))}};
  const auto c = pole_to_zeta(L, w1);
  CHECK(c == std::map<int, Scalar>{{0, Scalar(q("-1/24"))}, {1, Scalar(q("1/24"))}});
  CHECK(pole_to_zeta(L, {}).empty());
  CHECK_THROWS_AS(pole_to_zeta(L, {{1, Scalar(Rational(1))}}), InvariantViolation);
  CHECK_THROWS_AS(pole_to_zeta(L, {{3, Scalar(Rational(1))}}), InvariantViolation);
  CHECK(zeta_to_pole(L, pole_to_zeta(L, zeta_form(L, 3))) == zeta_form(L, 3));
}

TEST_CASE("zeta forms expanded in x reproduce the weights") {
  for (const CurveSpec& spec : {CurveSpec::lambert(), CurveSpec::framed_symbolic()}) {
    const Field field = spec.field();
    const int order = spec.symbolic() ? 9 : 13;
    const int nmax = spec.symbolic() ? 3 : 6;
    const ZetaBasis basis(spec, nmax);
    const LaurentSeries y = curve_y_series(spec, order + 1);
    const LaurentSeries u = y - LaurentSeries::constant(spec.branch_value());
    const LaurentSeries uinv = series_invert(u);
    const LaurentSeries dy = y.derivative();
    for (int n = 0; n <= nmax; ++n) {
      LaurentSeries form = LaurentSeries::zero(field, order);
      for (const auto& [k, c] : zeta_form(basis, n)) form += series_pow(uinv, k) * c;
      const LaurentSeries in_x = series_mul(form, dy);
      for (int mu = 1; mu < order; ++mu) CHECK(in_x.coefficient(mu - 1) == zeta_weight(spec, n, mu));
    }
  }
  CHECK(zeta_weight(CurveSpec::lambert(), 0, 2) == Scalar(Rational(4)));
  CHECK(zeta_weight(CurveSpec::lambert(), 2, 1) == Scalar(Rational(1)));
  const RationalFunction f = RationalFunction::indeterminate();
  CHECK(zeta_weight(CurveSpec::framed_symbolic(), 0, 2) ==
        Scalar(RationalFunction(Rational(2)) * (RationalFunction(Rational(2)) * f + RationalFunction(Rational(1)))));
}

TEST_CASE("kernel coefficients") {
  const CurveModel m = lambert_model(8);
  const auto k = kernel_coefficients(m, 3);
  CHECK(k[0].empty());
  CHECK(k[1] == PoleForm{{2, Scalar(Rational(1))}});
  // m = 2: order 2 carries -(1/2)(2/3), order 3 cancels (z^2 - S^2 starts at z^3).
  CHECK(k[2] == PoleForm{{2, Scalar(q("-1/3"))}});
  CHECK_THROWS_AS(kernel_coefficients(m, 8), InsufficientTruncation);
  const auto kf = kernel_coefficients(framed_model(fsym(), 6), 2);
  CHECK(kf[1] == PoleForm{{2, Scalar(RationalFunction(Rational(1)))}});
}

TEST_CASE("curve tags") {
  CHECK(CurveSpec::lambert().tag() == "lambert");
  CHECK(CurveSpec::framed_symbolic().tag() == "framed");
  CHECK(CurveSpec::framed(Rational(3)).tag() == "framed-f3");
  CHECK(CurveSpec::framed(q("-1/2")).tag() == "framed-f-1d2");
  CHECK(CurveSpec::framed_symbolic().field() == QF);
  CHECK(CurveSpec::framed_symbolic().branch_value() ==
        Scalar(RationalFunction::indeterminate() / (RationalFunction::indeterminate() + RationalFunction(Rational(1)))));
}
