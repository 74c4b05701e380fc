#include "doctest_helpers.hpp"

#include <filesystem>
#include <random>

#include "htr/amplitude_store.hpp"
#include "htr/hodge.hpp"
#include "htr/hurwitz_oracle.hpp"
#include "htr/recursion.hpp"
#include "htr/serialization.hpp"

using namespace htr;

namespace {

using Tensor = std::map<std::vector<int>, Scalar>;

Scalar q(const char* s) { return Scalar(Rational::parse(s)); }

RationalFunction F() { return RationalFunction::indeterminate(); }
RationalFunction R(long n, long d = 1) { return RationalFunction(Rational(n, d)); }

AmplitudeCache& lambert_cache() {
  static AmplitudeCache cache;
  return cache;
}

AmplitudeCache& framed_cache() {
  static AmplitudeCache cache;
  return cache;
}

const WAmplitude& lambert(int g, int h) { return *w_amplitude(lambert_cache(), CurveSpec::lambert(), g, h); }
const WAmplitude& framed(int g, int h) { return *w_amplitude(framed_cache(), CurveSpec::framed_symbolic(), g, h); }

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    std::random_device rd;
    path = std::filesystem::temp_directory_path() / ("htr-test-" + std::to_string(rd()));
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("Lambert amplitudes of low order") {
  CHECK(lambert(1, 1).coeffs == Tensor{{{0}, q("-1/24")}, {{1}, q("1/24")}});
  CHECK(lambert(0, 3).coeffs == Tensor{{{0, 0, 0}, q("1")}});
  CHECK(lambert(0, 4).coeffs == Tensor{{{0, 0, 0, 1}, q("1")}});
  CHECK(lambert(2, 1).coeffs == Tensor{{{2}, q("7/5760")}, {{3}, q("-12/5760")}, {{4}, q("5/5760")}});
  CHECK(lambert(3, 1).coeffs == Tensor{{{4}, q("-93/2903040")},
                                       {{5}, q("205/2903040")},
                                       {{6}, q("-147/2903040")},
                                       {{7}, q("35/2903040")}});
}

TEST_CASE("Lambert two-point amplitudes") {
  const Tensor w12{{{0, 1}, q("-1/24")}, {{0, 2}, q("1/24")}, {{1, 1}, q("1/24")}};
  CHECK(lambert(1, 2).coeffs == w12);
  const WAmplitude& w22 = lambert(2, 2);
  CHECK(w22.at({0, 3}) == q("7/5760"));
  CHECK(w22.at({4, 0}) == q("-12/5760"));
  CHECK(w22.at({0, 5}) == q("5/5760"));
  CHECK(w22.at({1, 2}) == q("7/1920"));
  CHECK(w22.at({1, 3}) == q("-1/160"));
  CHECK(w22.at({4, 1}) == q("1/384"));
  CHECK(w22.at({2, 2}) == q("-5/576"));
  CHECK(w22.at({2, 3}) == q("29/5760"));
}

TEST_CASE("framed amplitudes over Q(f)") {
  const RationalFunction ff = F() * (F() + R(1));
  const RationalFunction p = R(1) + F() + F() * F();
  CHECK(framed(1, 1).coeffs == Tensor{{{0}, Scalar(p * R(1, 24))}, {{1}, Scalar(-ff * R(1, 24))}});
  CHECK(framed(0, 3).coeffs == Tensor{{{0, 0, 0}, Scalar(-ff.pow(2))}});
  CHECK(framed(0, 4).coeffs == Tensor{{{0, 0, 0, 1}, Scalar(ff.pow(3))}});
  const WAmplitude& w2 = framed(2, 1);
  CHECK(w2.at({1}) == Scalar(ff * R(1, 2880)));
  CHECK(w2.at({2}) == Scalar(p.pow(2) * R(-7, 5760)));
  CHECK(w2.at({3}) == Scalar(ff * (R(1) + F() + F() * F()) * R(1, 480)));
  CHECK(w2.at({4}) == Scalar(ff.pow(2) * R(-1, 1152)));
  CHECK(framed(1, 2).coeffs == Tensor{{{0, 1}, Scalar(-ff * p * R(1, 24))},
                                      {{0, 2}, Scalar(ff.pow(2) * R(1, 24))},
                                      {{1, 1}, Scalar(ff.pow(2) * R(1, 24))}});
}

TEST_CASE("tensors are symmetric and obey the dimension bound") {
  for (auto [g, h] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}}) {
    const WAmplitude& w = lambert(g, h);
    for (const auto& [key, v] : w.coeffs) {
      CHECK(std::is_sorted(key.begin(), key.end()));
      CHECK(static_cast<int>(key.size()) == h);
      int total = 0;
      for (int n : key) total += n;
      CHECK(total <= 3 * g - 3 + h);
      std::vector<int> perm = key;
      std::reverse(perm.begin(), perm.end());
      CHECK(w.at(perm) == v);
    }
  }
  CHECK(lambert(1, 1).at({7}).is_zero());
}

TEST_CASE("truncation +4 leaves every tensor unchanged") {
  for (const CurveSpec& spec : {CurveSpec::lambert(), CurveSpec::framed(Rational(2))}) {
    for (auto [g, h] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {1, 2}, {2, 1}, {0, 4}}) {
      AmplitudeCache a, b;
      RecursionOptions more;
      more.trunc = default_trunc(g, h) + 4;
      CHECK(*w_amplitude(a, spec, g, h) == *w_amplitude(b, spec, g, h, more));
    }
  }
}

TEST_CASE("a short starting truncation is recovered by doubling") {
  AmplitudeCache a, b;
  RecursionOptions tight;
  tight.trunc = 3;
  const auto w = w_amplitude(a, CurveSpec::lambert(), 2, 1, tight);
  CHECK(w->coeffs == w_amplitude(b, CurveSpec::lambert(), 2, 1)->coeffs);
  CHECK(w->trunc > 3);
}

TEST_CASE("framed amplitudes specialize to runs over Q") {
  for (const char* value : {"3", "-1/2", "2/5"}) {
    const Rational f = Rational::parse(value);
    AmplitudeCache cache;
    for (auto [g, h] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {1, 2}, {2, 1}}) {
      const WAmplitude& sym = framed(g, h);
      const WAmplitude& num = *w_amplitude(cache, CurveSpec::framed(f), g, h);
      Tensor specialized;
      for (const auto& [k, v] : sym.coeffs) {
        Scalar s = v.specialize(f);
        if (!s.is_zero()) specialized.emplace(k, std::move(s));
      }
      CHECK_MESSAGE(specialized == num.coeffs, "f = " << value << " (g, h) = " << g << "," << h);
    }
  }
}

TEST_CASE("framed entries are polynomial after removing the f(f+1) prefactor") {
  const RationalFunction ff = F() * (F() + R(1));
  for (auto [g, h] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 1}}) {
    for (const auto& [k, v] : framed(g, h).coeffs) {
      const RationalFunction t = v.as_rational_function() / ff.pow(h - 1);
      CHECK(t.is_polynomial());
    }
  }
}

TEST_CASE("Bergman kernel at conjugate points") {
  const LaurentSeries b = bergman_self(lambert_model(8));
  CHECK(b.lowest() == -2);
  CHECK(b.coefficient(-2) == q("-1/4"));
  CHECK(b.coefficient(-1) == q("1/6"));
  const LaurentSeries bf = bergman_self(framed_model(Scalar(F()), 6));
  CHECK(bf.coefficient(-2) == Scalar(R(-1, 4)));
  CHECK(bf.specialize(Rational(3)) == bergman_self(framed_model(Scalar(Rational(3)), 6)));
}

TEST_CASE("disk amplitudes") {
  const LaurentSeries d = w_unstable_disk(CurveSpec::lambert(), 9);
  for (int mu = 1; mu <= 8; ++mu) {
    CHECK(d.coefficient(mu - 1) == Scalar(Rational(Rational(mu).pow(mu - 1).numerator(), factorial(static_cast<unsigned>(mu)))));
  }
  const LaurentSeries d1 = w_unstable_disk(CurveSpec::framed(Rational(1)), 4);
  CHECK(d1.coefficient(0) == q("-1"));
  CHECK(w_unstable_disk(CurveSpec::framed_symbolic(), 5).specialize(Rational(1)) == w_unstable_disk(CurveSpec::framed(Rational(1)), 5));
  AmplitudeCache cache;
  CHECK(hurwitz_from_recursion(cache, 0, Partition({1})).value == Rational(1));
}

TEST_CASE("annulus amplitude") {
  const BivariateSeries a = w_unstable_annulus(CurveSpec::lambert(), 7);
  CHECK(a.coefficient(0, 0) == q("1/2"));
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; i + j < 7; ++j) CHECK(a.coefficient(i, j) == a.coefficient(j, i));
  }
  CHECK_THROWS_AS(a.coefficient(4, 3), InsufficientTruncation);
  AmplitudeCache cache;
  for (const char* mu : {"1,1", "2,1", "2,2", "3,1", "3,2"}) {
    const Partition p = Partition::parse(mu);
    CHECK_MESSAGE(hurwitz_from_recursion(cache, 0, p).value == connected_hurwitz(0, p), mu);
  }
}

TEST_CASE("x-coefficients") {
  const WAmplitude& w1 = lambert(1, 1);
  CHECK(w_as_x_coefficients(w1, Partition({1})) == q("0"));
  CHECK(w_as_x_coefficients(w1, Partition({2})) == q("1/6"));
  CHECK_THROWS_AS(w_as_x_coefficients(w1, Partition({1, 1})), std::invalid_argument);
}

TEST_CASE("closed amplitudes") {
  AmplitudeCache cache;
  const CurveSpec L = CurveSpec::lambert();
  CHECK(closed_amplitude(cache, L, 2, q("0")) == closed_amplitude(cache, L, 2, q("7")));
  // Every zeta_n with n >= 2 is exact against log y dlog x, so the Lambert
  // value is zero for all g >= 2; pinned at two truncations.
  RecursionOptions wide;
  wide.trunc = 24;
  AmplitudeCache other;
  CHECK(closed_amplitude(cache, L, 2, q("0")).is_zero());
  CHECK(closed_amplitude(other, L, 2, q("0"), wide).is_zero());
  CHECK(closed_amplitude(cache, L, 3, q("-5/3")).is_zero());

  const CurveSpec Fs = CurveSpec::framed_symbolic();
  const Scalar fsym = closed_amplitude(framed_cache(), Fs, 2, Scalar(R(0)));
  CHECK(fsym == Scalar(R(1, 2880)));
  CHECK(closed_amplitude(framed_cache(), Fs, 2, Scalar(F() * R(7))) == fsym);
  CHECK(closed_amplitude(cache, CurveSpec::framed(Rational(1)), 2, q("3")) == fsym.specialize(Rational(1)));
  CHECK(closed_amplitude(other, CurveSpec::framed(Rational(1)), 2, q("0"), wide) == q("1/2880"));

  CHECK_THROWS_AS(closed_amplitude(cache, L, 1, q("0")), std::domain_error);
  CHECK_THROWS_AS(closed_amplitude(cache, L, 2, Scalar(R(0))), FieldMismatch);
}

TEST_CASE("unstable requests are rejected") {
  AmplitudeCache cache;
  CHECK_THROWS_AS(w_amplitude(cache, CurveSpec::lambert(), 0, 2), std::domain_error);
  CHECK_THROWS_AS(w_amplitude(cache, CurveSpec::lambert(), 0, 1), std::domain_error);
}

TEST_CASE("parallel evaluation is deterministic") {
  for (const CurveSpec& spec : {CurveSpec::lambert(), CurveSpec::framed(Rational(3))}) {
    AmplitudeCache serial, parallel;
    RecursionOptions jobs;
    jobs.jobs = 4;
    for (auto [g, h] : std::vector<std::pair<int, int>>{{2, 2}, {1, 3}, {3, 1}}) {
      const auto a = w_amplitude(serial, spec, g, h);
      const auto b = w_amplitude(parallel, spec, g, h, jobs);
      CHECK(*a == *b);
      CHECK(to_json(*a).dump() == to_json(*b).dump());
    }
  }
}

TEST_CASE("amplitude store reload equals recompute") {
  TempDir dir;
  const AmplitudeStore store(dir.path);
  RecursionOptions opts;
  opts.store = &store;
  AmplitudeCache first;
  const auto computed = w_amplitude(first, CurveSpec::framed_symbolic(), 1, 2, opts);
  w_amplitude(first, CurveSpec::lambert(), 2, 1, opts);
  CHECK(std::filesystem::exists(store.path_for(CurveSpec::framed_symbolic(), 1, 2)));
  CHECK(store.path_for(CurveSpec::lambert(), 2, 1).filename() == "lambert_g2_h1.json");

  const auto loaded = store.load(CurveSpec::framed_symbolic(), 1, 2);
  REQUIRE(loaded);
  CHECK(*loaded == *computed);
  AmplitudeCache second;
  CHECK(*w_amplitude(second, CurveSpec::framed_symbolic(), 1, 2, opts) == *computed);

  bool saw_lambert = false;
  for (const auto& l : store.list()) saw_lambert = saw_lambert || (l.curve == "lambert" && l.g == 2 && l.h == 1);
  CHECK(saw_lambert);
  CHECK(!store.load(CurveSpec::framed(Rational(3)), 1, 2));
  CHECK(store.clear() >= 2);
  CHECK(store.list().empty());
}

TEST_CASE("serialization round trips") {
  for (auto [g, h] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {0, 4}}) {
    const WAmplitude& a = lambert(g, h);
    CHECK(amplitude_from_json(Json::parse(to_json(a).dump())) == a);
    const WAmplitude& b = framed(g, h);
    CHECK(amplitude_from_json(Json::parse(to_json(b).dump())) == b);
  }
  for (const CurveSpec& spec : {CurveSpec::lambert(), CurveSpec::framed_symbolic(), CurveSpec::framed(Rational(-1, 2))}) {
    CHECK(curve_spec_from_json(curve_spec_to_json(spec)) == spec);
  }
  const RationalFunction r = (F() * F() + R(1, 3)) / (F() * R(2) + R(5));
  CHECK(rational_function_from_json(to_json(r)) == r);
  CHECK(rational_from_json(to_json(Rational(-7, 12))) == Rational(-7, 12));
  CHECK(to_json(Rational(-7, 12)) == "-7/12");
  CHECK(scalar_from_json(Field::RationalFunction, to_json(Scalar(r))) == Scalar(r));
}
