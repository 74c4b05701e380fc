#include "doctest_helpers.hpp"

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "htr/laurent_series.hpp"
#include "htr/rational.hpp"
#include "htr/rational_function.hpp"
#include "htr/scalar.hpp"

using namespace htr;
using boost::multiprecision::cpp_int;

namespace {

const Field Q = Field::Rational;
const Field QF = Field::RationalFunction;

LaurentSeries qseries(int lowest, std::vector<long> coeffs, int trunc = LaurentSeries::kExact) {
  std::vector<Scalar> c;
  for (long v : coeffs) c.emplace_back(Rational(v));
  return LaurentSeries(Q, lowest, std::move(c), trunc);
}

Rational q(const char* text) { return Rational::parse(text); }

RationalFunction f_poly(std::vector<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return RationalFunction(Polynomial(std::move(c)));
}

cpp_int to_cpp(const mpz_class& z) { return cpp_int(z.get_str()); }

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("rational addition agrees with a cross-multiplication oracle") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> num(-1000000000L, 1000000000L);
  std::uniform_int_distribution<long> den(1, 1000000000L);
  for (int i = 0; i < 1000; ++i) {
    const long p = num(rng), qd = den(rng), r = num(rng), s = den(rng);
    const Rational sum = Rational(p, qd) + Rational(r, s);
    const Rational prod = Rational(p, qd) * Rational(r, s);
    // sum = (p s + r q) / (q s); compare by cross multiplication in cpp_int.
    const cpp_int lhs_num = cpp_int(p) * s + cpp_int(r) * qd;
    const cpp_int lhs_den = cpp_int(qd) * s;
    CHECK(to_cpp(sum.numerator()) * lhs_den == lhs_num * to_cpp(sum.denominator()));
    CHECK(to_cpp(prod.numerator()) * lhs_den == cpp_int(p) * r * to_cpp(prod.denominator()));
    CHECK(gcd(to_cpp(sum.numerator()), to_cpp(sum.denominator())) == 1);
    CHECK(sum.denominator() > 0);
  }
}

TEST_CASE("ratfunc_normalize") {
  const RationalFunction a = ratfunc_normalize(Polynomial(std::vector<Rational>{-1, 0, 1}),
                                               Polynomial(std::vector<Rational>{-1, 1}));
  CHECK(a == f_poly({1, 1}));
  const RationalFunction b = ratfunc_normalize(Polynomial(std::vector<Rational>{0, 2}),
                                               Polynomial(std::vector<Rational>{2}));
  CHECK(b == RationalFunction::indeterminate());
  CHECK(b.str() == "f");
  // -2(f^2-1)/(3f)
  const RationalFunction c = ratfunc_normalize(Polynomial(std::vector<Rational>{2, 0, -2}),
                                               Polynomial(std::vector<Rational>{0, 3}));
  CHECK(c.denominator() == Polynomial(std::vector<Rational>{0, 1}));
  CHECK(c.numerator() == Polynomial(std::vector<Rational>{q("2/3"), 0, q("-2/3")}));
  CHECK_THROWS_AS(ratfunc_normalize(Polynomial(Rational(1)), Polynomial()), std::domain_error);
  CHECK(f_poly({1, 1, 1}) * RationalFunction(Rational(1, 24)) == RationalFunction(
                                                                      Polynomial(std::vector<Rational>{q("1/24"), q("1/24"), q("1/24")})));
  CHECK((f_poly({1, 1, 1}) * RationalFunction(Rational(1, 24))).str() == "(f^2+f+1)/24");
  CHECK((f_poly({0, -1, -1}) * RationalFunction(Rational(1, 24))).str() == "-(f^2+f)/24");
}

TEST_CASE("rational function specialization is a homomorphism") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> coef(-9, 9);
  auto random_poly = [&](int deg) {
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(coef(rng), 1 + std::abs(coef(rng)));
    if (c.back().is_zero()) c.back() = Rational(1);
    return Polynomial(std::move(c));
  };
  const std::vector<Rational> points{q("1/3"), q("-5/7"), q("2"), q("11/4"), q("-3")};
  for (int trial = 0; trial < 40; ++trial) {
    const RationalFunction a(random_poly(2), random_poly(2));
    const RationalFunction b(random_poly(3), random_poly(1));
    for (const auto& x : points) {
      Rational ax, bx;
      try {
        ax = a.evaluate(x);
        bx = b.evaluate(x);
      } catch (const std::domain_error&) {
        continue;
      }
      CHECK((a + b).evaluate(x) == ax + bx);
      CHECK((a - b).evaluate(x) == ax - bx);
      CHECK((a * b).evaluate(x) == ax * bx);
      if (!bx.is_zero() && !b.is_zero()) CHECK((a / b).evaluate(x) == ax / bx);
    }
  }
}

TEST_CASE("scalar fields never mix") {
  const Scalar a = Scalar::one(Q);
  const Scalar b = Scalar::one(QF);
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_NOTHROW(b * Rational(3));
  CHECK((b * Rational(3)).str() == "3");
  CHECK_THROWS_AS(qseries(0, {1}) + LaurentSeries::constant(b), FieldMismatch);
}

TEST_CASE("series_mul") {
  CHECK(series_mul(qseries(1, {1}), qseries(-1, {1})) == qseries(0, {1}));
  const LaurentSeries p = series_mul(qseries(0, {1, 1}, 3), qseries(0, {1, -1}, 3));
  CHECK(p == qseries(0, {1, 0, -1}, 3));
  CHECK(p.trunc() == 3);
  // Window rule: trunc = min(a.trunc + b.lowest, b.trunc + a.lowest).
  const LaurentSeries r = series_mul(qseries(-2, {1, 1}, 4), qseries(1, {1}, 6));
  CHECK(r.trunc() == 4);
}

TEST_CASE("series_invert") {
  const LaurentSeries g = series_invert(qseries(0, {1, -1}, 8));
  CHECK(g == qseries(0, {1, 1, 1, 1, 1, 1, 1, 1}, 8));
  CHECK(series_invert(qseries(2, {1})) == qseries(-2, {1}));
  CHECK_THROWS_AS(series_invert(LaurentSeries::zero(Q)), std::domain_error);
  CHECK_THROWS_AS(series_invert(qseries(0, {1, 1})), std::invalid_argument);
  const LaurentSeries a = qseries(2, {-2, 3, 5, -7, 1}, 9);
  const LaurentSeries inv = series_invert(a);
  CHECK(inv.lowest() == -2);
  const LaurentSeries one = series_mul(a, inv);
  CHECK(agree(one, LaurentSeries::constant(Scalar::one(Q))));
  CHECK(one.trunc() == 7);
}

TEST_CASE("series_compose") {
  // exp(-z)
  const LaurentSeries e = series_compose(exp_series(Q, 8), qseries(1, {-1}));
  for (int n = 0; n < 8; ++n) {
    CHECK(e.coefficient(n) == Scalar(Rational(n % 2 ? -1 : 1) / Rational(factorial(n))));
  }
  // Geometric series at zero gives 1.
  const LaurentSeries one = series_compose(geometric_series(Q, 6), LaurentSeries::zero(Q));
  CHECK(one.coefficient(0) == Scalar(Rational(1)));
  // Polynomial outer with a non-vanishing inner.
  const LaurentSeries sq = series_compose(qseries(2, {1}), qseries(0, {1, 1}));
  CHECK(sq == qseries(0, {1, 2, 1}));
  // Negative powers of a series with positive valuation.
  const LaurentSeries inv = series_compose(qseries(-1, {1}), qseries(1, {1, -1}, 6));
  CHECK(agree(inv, qseries(-1, {1, 1, 1, 1, 1}, 4)));
  CHECK(inv.trunc() == 4);
  CHECK_THROWS_AS(series_compose(exp_series(Q, 5), qseries(0, {1, 1})), std::domain_error);
}

TEST_CASE("series_reversion") {
  CHECK(series_reversion(qseries(1, {1}), 10) == qseries(1, {1}, 10));
  // Catalan numbers from z - z^2.
  const LaurentSeries c = series_reversion(qseries(1, {1, -1}), 9);
  const std::vector<long> catalan{1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 1; n < 9; ++n) CHECK(c.coefficient(n) == Scalar(Rational(catalan[n - 1])));
  // Tree function from y e^{-y}.
  const int order = 13;
  const LaurentSeries x = series_mul(qseries(1, {1}), series_compose(exp_series(Q, order), qseries(1, {-1})));
  const LaurentSeries y = series_reversion(x, order);
  for (int mu = 1; mu < order; ++mu) {
    const Rational expect(Rational(mu).pow(mu - 1).numerator(), factorial(mu));
    CHECK(y.coefficient(mu) == Scalar(expect));
  }
  CHECK(agree(series_compose(x, y), qseries(1, {1}, order)));
  CHECK_THROWS_AS(series_reversion(qseries(2, {1}), 5), std::domain_error);
  CHECK_THROWS_AS(series_reversion(qseries(1, {1, 1}, 4), 6), InsufficientTruncation);
}

TEST_CASE("laurent_residue") {
  CHECK(laurent_residue(qseries(-1, {1})) == Scalar(Rational(1)));
  CHECK(laurent_residue(qseries(-2, {1, 3, 5})) == Scalar(Rational(3)));
  CHECK(laurent_residue(qseries(0, {1}, 4)) == Scalar(Rational(0)));
  CHECK_THROWS_AS(laurent_residue(qseries(-3, {1}, -1)), InsufficientTruncation);
  const LaurentSeries a = qseries(-3, {2, 7, -4, 9}, 5);
  const LaurentSeries b = qseries(-2, {5, 1, 1}, 3);
  const Rational alpha(3, 7), beta(-2, 5);
  CHECK(laurent_residue(a * alpha + b * beta) ==
        laurent_residue(a) * alpha + laurent_residue(b) * beta);
}

TEST_CASE("coefficient outside the window throws") {
  const LaurentSeries a = qseries(0, {1, 2}, 3);
  CHECK(a.coefficient(2) == Scalar(Rational(0)));
  CHECK_THROWS_AS(a.coefficient(3), InsufficientTruncation);
  CHECK(a.derivative() == qseries(0, {2}, 2));
}
