#include "htr/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <regex>
#include <stdexcept>

#include "htr/hurwitz_oracle.hpp"
#include "htr/zeta_basis.hpp"

namespace htr {

namespace {

using Tensor = std::map<std::vector<int>, Scalar>;

struct Recorder {
  SuiteResult& r;
  void check(bool ok, const std::string& what) {
    ++r.checks;
    if (!ok) r.failures.push_back(what);
  }
};

SuiteResult timed(int id, std::string name, double limit, const std::function<void(Recorder&)>& body) {
  SuiteResult r;
  r.id = id;
  r.name = std::move(name);
  r.limit_seconds = limit;
  Recorder rec{r};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(rec);
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.correct = r.failures.empty();
  return r;
}

Scalar q(const char* s) { return Scalar(Rational::parse(s)); }
RationalFunction F() { return RationalFunction::indeterminate(); }
RationalFunction R(long n, long d = 1) { return RationalFunction(Rational(n, d)); }

std::string label(const CurveSpec& spec, int g, int h) {
  return spec.tag() + " (" + std::to_string(g) + "," + std::to_string(h) + ")";
}

void compare_tensor(Recorder& rec, const WAmplitude& w, const Tensor& expect) {
  rec.check(w.coeffs == expect, label(w.spec, w.g, w.h) + " tensor");
}

const std::vector<std::pair<int, int>> kSmallTopologies{{0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 1}};

}  // namespace

SweepBounds parse_sweep_bounds(const std::string& text) {
  SweepBounds b;
  static const std::regex item(R"(\s*(g|\|mu\||mu|l|len)\s*<=\s*(\d+)\s*)");
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::smatch m;
    if (!std::regex_match(part, m, item)) throw std::invalid_argument("bad sweep bound '" + part + "'");
    const int v = std::stoi(m[2].str());
    const std::string key = m[1].str();
    if (key == "g") {
      b.max_g = v;
    } else if (key == "l" || key == "len") {
      b.max_length = v;
    } else {
      b.max_size = v;
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return b;
}

std::vector<SweepRow> oracle_sweep(AmplitudeCache& cache, const SweepBounds& bounds, const RecursionOptions& options) {
  std::vector<std::pair<int, Partition>> cases;
  for (int g = 0; g <= bounds.max_g; ++g) {
    for (int n = 1; n <= bounds.max_size; ++n) {
      for (const auto& mu : partitions_of(n)) {
        if (mu.length() <= bounds.max_length) cases.emplace_back(g, mu);
      }
    }
  }
  for (const auto& e : bounds.extra) {
    if (std::find(cases.begin(), cases.end(), e) == cases.end()) cases.push_back(e);
  }
  int max_b = 0;
  int max_size = 0;
  for (const auto& [g, mu] : cases) {
    max_b = std::max(max_b, 2 * g - 2 + mu.length() + mu.size());
    max_size = std::max(max_size, mu.size());
  }
  const HurwitzSeries free_energy = HurwitzSeries::partition_function(max_b, max_size).log();
  std::vector<SweepRow> rows;
  for (const auto& [g, mu] : cases) {
    rows.push_back({g, mu, hurwitz_from_recursion(cache, g, mu, options).value, connected_hurwitz(free_energy, g, mu)});
  }
  return rows;
}

SuiteResult suite_involution() {
  return timed(1, "involution series", 1.0, [](Recorder& rec) {
    const CurveModel L = lambert_model(8);
    const std::vector<const char*> s{"-1", "2/3", "-4/9", "44/135", "-104/405", "40/189", "-7648/42525"};
    for (int k = 1; k <= 7; ++k) {
      rec.check(L.involution.coefficient(k) == q(s[static_cast<std::size_t>(k - 1)]), "S z^" + std::to_string(k));
    }
    const CurveModel P = framed_model(Scalar(F()), 5);
    const RationalFunction f = F();
    const RationalFunction f2m1 = f * f - R(1);
    const std::vector<RationalFunction> p{
        R(-1), R(-2, 3) * f2m1 / f, R(-4, 9) * f2m1.pow(2) / f.pow(2),
        R(-2, 135) * (f + R(1)).pow(3) * RationalFunction(Polynomial({-22, 57, -57, 22})) / f.pow(3)};
    for (int k = 1; k <= 4; ++k) {
      rec.check(P.involution.coefficient(k) == Scalar(p[static_cast<std::size_t>(k - 1)]), "P z^" + std::to_string(k));
    }
  });
}

SuiteResult suite_tree_function() {
  return timed(2, "tree function", 1.0, [](Recorder& rec) {
    const LaurentSeries t = tree_series(21);
    for (int mu = 1; mu <= 20; ++mu) {
      const Rational expect(Rational(mu).pow(mu - 1).numerator(), factorial(static_cast<unsigned>(mu)));
      rec.check(t.coefficient(mu) == Scalar(expect), "mu=" + std::to_string(mu));
    }
  });
}

SuiteResult suite_lambert_table(AmplitudeCache& cache, const RecursionOptions& opts) {
  return timed(3, "Lambert amplitude table", 30.0, [&](Recorder& rec) {
    const CurveSpec L = CurveSpec::lambert();
    auto w = [&](int g, int h) { return w_amplitude(cache, L, g, h, opts); };
    compare_tensor(rec, *w(1, 1), {{{0}, q("-1/24")}, {{1}, q("1/24")}});
    compare_tensor(rec, *w(0, 3), {{{0, 0, 0}, q("1")}});
    compare_tensor(rec, *w(0, 4), {{{0, 0, 0, 1}, q("1")}});
    compare_tensor(rec, *w(1, 2), {{{0, 1}, q("-1/24")}, {{0, 2}, q("1/24")}, {{1, 1}, q("1/24")}});
    compare_tensor(rec, *w(2, 1), {{{2}, q("7/5760")}, {{3}, q("-12/5760")}, {{4}, q("5/5760")}});
    compare_tensor(rec, *w(2, 2),
                   {{{0, 3}, q("7/5760")},
                    {{0, 4}, q("-12/5760")},
                    {{0, 5}, q("5/5760")},
                    {{1, 2}, q("21/5760")},
                    {{1, 3}, q("-36/5760")},
                    {{1, 4}, q("15/5760")},
                    {{2, 2}, q("-50/5760")},
                    {{2, 3}, q("29/5760")}});
    compare_tensor(rec, *w(3, 1),
                   {{{4}, q("-93/2903040")}, {{5}, q("205/2903040")}, {{6}, q("-147/2903040")}, {{7}, q("35/2903040")}});
  });
}

SuiteResult suite_framed_table(AmplitudeCache& cache, const RecursionOptions& opts) {
  return timed(4, "framed amplitude table", 120.0, [&](Recorder& rec) {
    const CurveSpec Fs = CurveSpec::framed_symbolic();
    auto w = [&](int g, int h) { return w_amplitude(cache, Fs, g, h, opts); };
    const RationalFunction f = F();
    const RationalFunction ff = f * (f + R(1));
    const RationalFunction p = R(1) + f + f * f;
    compare_tensor(rec, *w(0, 3), {{{0, 0, 0}, Scalar(-ff.pow(2))}});
    compare_tensor(rec, *w(0, 4), {{{0, 0, 0, 1}, Scalar(ff.pow(3))}});
    compare_tensor(rec, *w(1, 1), {{{0}, Scalar(p * R(1, 24))}, {{1}, Scalar(-ff * R(1, 24))}});
    compare_tensor(rec, *w(1, 2),
                   {{{0, 1}, Scalar(-ff * p * R(1, 24))},
                    {{0, 2}, Scalar(ff.pow(2) * R(1, 24))},
                    {{1, 1}, Scalar(ff.pow(2) * R(1, 24))}});
    compare_tensor(rec, *w(2, 1),
                   {{{1}, Scalar(ff * R(2, 5760))},
                    {{2}, Scalar(p.pow(2) * R(-7, 5760))},
                    {{3}, Scalar(f * (R(1) + f * R(2) + f.pow(2) * R(2) + f.pow(3)) * R(12, 5760))},
                    {{4}, Scalar(ff.pow(2) * R(-5, 5760))}});
  });
}

SuiteResult suite_oracle_sweep(AmplitudeCache& cache, const SweepBounds& bounds, const RecursionOptions& opts) {
  return timed(5, "oracle equality sweep", 300.0, [&](Recorder& rec) {
    for (const auto& row : oracle_sweep(cache, bounds, opts)) {
      rec.check(row.recursion == row.oracle, "g=" + std::to_string(row.g) + " mu=" + row.mu.str() + ": " +
                                                 row.recursion.str() + " vs " + row.oracle.str());
    }
  });
}

SuiteResult suite_framing_limits(AmplitudeCache& cache, const RecursionOptions& opts) {
  return timed(6, "framing limits", 120.0, [&](Recorder& rec) {
    for (auto [g, h] : kSmallTopologies) {
      const LimitReport r = framing_limit_check(cache, g, h, opts);
      for (const auto& row : r.rows) {
        std::string key;
        for (int n : row.indices) key += std::to_string(n);
        rec.check(row.ok(), "(" + std::to_string(g) + "," + std::to_string(h) + ") [" + key + "]");
      }
    }
    const ZetaWeightLimitReport z = zeta_weight_limit_check(4, 8);
    rec.r.checks += z.checked;
    for (const auto& f : z.failures) rec.r.failures.push_back("zeta weight " + f);
  });
}

SuiteResult suite_properties(AmplitudeCache& cache, const RecursionOptions& opts) {
  return timed(7, "property suites", 300.0, [&](Recorder& rec) {
    const CurveSpec L = CurveSpec::lambert();
    const CurveSpec Fs = CurveSpec::framed_symbolic();
    // Symmetry and the residue-free pole forms are enforced inside the
    // engine (a violation throws); here every tensor is rechecked for the
    // stored shape and the dimension bound.
    for (const CurveSpec& spec : {L, Fs}) {
      for (auto [g, h] : kSmallTopologies) {
        const auto w = w_amplitude(cache, spec, g, h, opts);
        for (const auto& [key, v] : w->coeffs) {
          int total = 0;
          for (int n : key) total += n;
          std::vector<int> rev(key.rbegin(), key.rend());
          rec.check(std::is_sorted(key.begin(), key.end()) && w->at(rev) == v, label(spec, g, h) + " symmetry");
          rec.check(total <= 3 * g - 3 + h, label(spec, g, h) + " dimension bound");
        }
      }
    }
    for (const CurveSpec& spec : {L, CurveSpec::framed(Rational(2))}) {
      for (auto [g, h] : kSmallTopologies) {
        AmplitudeCache fresh, wide;
        RecursionOptions more = opts;
        more.trunc = default_trunc(g, h) + 4;
        rec.check(*w_amplitude(fresh, spec, g, h, opts) == *w_amplitude(wide, spec, g, h, more),
                  label(spec, g, h) + " truncation +4");
      }
    }
    for (const char* value : {"3", "-1/2", "2/5"}) {
      const Rational f = Rational::parse(value);
      AmplitudeCache numeric;
      for (auto [g, h] : kSmallTopologies) {
        const auto sym = w_amplitude(cache, Fs, g, h, opts);
        const auto num = w_amplitude(numeric, CurveSpec::framed(f), g, h, opts);
        Tensor specialized;
        for (const auto& [k, v] : sym->coeffs) {
          Scalar s = v.specialize(f);
          if (!s.is_zero()) specialized.emplace(k, std::move(s));
        }
        rec.check(specialized == num->coeffs, label(CurveSpec::framed(f), g, h) + " specialization");
      }
    }
    rec.check(closed_amplitude(cache, L, 2, q("0"), opts) == closed_amplitude(cache, L, 2, q("7"), opts),
              "Lambert F_2 constant");
    rec.check(closed_amplitude(cache, Fs, 2, Scalar(R(0)), opts) == closed_amplitude(cache, Fs, 2, Scalar(F()), opts),
              "framed F_2 constant");
    for (int n = 1; n <= 6; ++n) {
      const auto parts = partitions_of(n);
      for (const auto& mu : parts) {
        for (const auto& nu : parts) {
          mpz_class s = 0;
          for (const auto& Rt : parts) s += mn_character(Rt, mu) * mn_character(Rt, nu);
          rec.check(s == (mu == nu ? mu.z() : mpz_class(0)), "orthogonality " + mu.str() + " " + nu.str());
        }
      }
    }
    const HurwitzSeries Z = HurwitzSeries::partition_function(6, 5);
    rec.check(Z.log().exp() == Z, "exp(log Z) = Z");
    const SchurCheckReport schur = schur_partition_function_check(4, 4);
    rec.r.checks += schur.checked;
    for (const auto& f : schur.literal_failures) rec.r.failures.push_back("Schur (literal, sign (-1)^b) " + f);
    for (const auto& f : schur.transposed_failures) rec.r.failures.push_back("Schur (transposed) " + f);
  });
}

SuiteResult suite_unstable() {
  return timed(8, "unstable cases", 60.0, [](Recorder& rec) {
    const BivariateSeries a = w_unstable_annulus(CurveSpec::lambert(), 4);
    // b = 2, z_mu = 2 for mu = (1,1): H = 2!/2 times the constant term.
    rec.check(a.coefficient(0, 0) == q("1/2"), "annulus constant term");
    const Partition mu({1, 1});
    const Rational h = a.coefficient(0, 0).as_rational() * Rational(factorial(2), mu.z());
    rec.check(h == connected_hurwitz(0, mu), "annulus vs oracle");
    const LaurentSeries d = w_unstable_disk(CurveSpec::lambert(), 21);
    for (int mu = 1; mu <= 20; ++mu) {
      const Rational expect(Rational(mu).pow(mu - 1).numerator(), factorial(static_cast<unsigned>(mu)));
      rec.check(d.coefficient(mu - 1) == Scalar(expect), "disk mu=" + std::to_string(mu));
    }
  });
}

std::vector<SuiteResult> run_all_suites(const RecursionOptions& opts) {
  // Every suite starts cold so its timing stands on its own.
  std::vector<SuiteResult> out;
  out.push_back(suite_involution());
  out.push_back(suite_tree_function());
  AmplitudeCache c3, c4, c5, c6, c7;
  out.push_back(suite_lambert_table(c3, opts));
  out.push_back(suite_framed_table(c4, opts));
  out.push_back(suite_oracle_sweep(c5, SweepBounds{}, opts));
  out.push_back(suite_framing_limits(c6, opts));
  out.push_back(suite_properties(c7, opts));
  out.push_back(suite_unstable());
  return out;
}

}  // namespace htr
