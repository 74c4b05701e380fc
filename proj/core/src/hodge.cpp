#include "htr/hodge.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "htr/zeta_basis.hpp"

namespace htr {

namespace {

void require_stable(int g, int h, const char* who) {
  if (!is_stable(g, h)) {
    throw std::domain_error(std::string(who) + ": (g, h) = (" + std::to_string(g) + ", " + std::to_string(h) +
                            ") is unstable");
  }
}

// (-1)^{g+h} (f(f+1))^{h-1}
RationalFunction framed_prefactor(int g, int h) {
  const RationalFunction f = RationalFunction::indeterminate();
  RationalFunction p = (f * (f + RationalFunction(Rational(1)))).pow(h - 1);
  return (g + h) % 2 ? -p : p;
}

Scalar framed_entry_to_bracket(const Scalar& entry, int g, int h) {
  return Scalar(entry.as_rational_function() / framed_prefactor(g, h));
}

}  // namespace

HodgeBracket hodge_bracket(AmplitudeCache& cache, int g, std::vector<int> indices, const RecursionOptions& options) {
  const int h = static_cast<int>(indices.size());
  require_stable(g, h, "hodge_bracket");
  std::sort(indices.begin(), indices.end());
  const auto amp = w_amplitude(cache, CurveSpec::lambert(), g, h, options);
  return {g, indices, BracketKind::SingleLambda, amp->at(indices)};
}

HodgeBracket framed_bracket(AmplitudeCache& cache, int g, std::vector<int> indices, const RecursionOptions& options) {
  const int h = static_cast<int>(indices.size());
  require_stable(g, h, "framed_bracket");
  std::sort(indices.begin(), indices.end());
  const auto amp = w_amplitude(cache, CurveSpec::framed_symbolic(), g, h, options);
  return {g, indices, BracketKind::TripleLambda, framed_entry_to_bracket(amp->at(indices), g, h)};
}

HurwitzValue hurwitz_from_recursion(AmplitudeCache& cache, int g, const Partition& mu, const RecursionOptions& options) {
  if (mu.empty()) throw std::invalid_argument("hurwitz_from_recursion: empty partition");
  const int h = mu.length();
  const int b = 2 * g - 2 + h + mu.size();
  if (g < 0 || b < 0) throw std::invalid_argument("hurwitz_from_recursion: negative branch point count");
  const CurveSpec spec = CurveSpec::lambert();
  Scalar coeff;
  if (g == 0 && h == 1) {
    coeff = w_unstable_disk(spec, mu[0]).coefficient(mu[0] - 1);
  } else if (g == 0 && h == 2) {
    const auto series = w_unstable_annulus(spec, mu[0] + mu[1] - 1);
    coeff = series.coefficient(mu[0] - 1, mu[1] - 1);
  } else {
    coeff = w_as_x_coefficients(*w_amplitude(cache, spec, g, h, options), mu);
  }
  const Rational value = coeff.as_rational() * Rational(factorial(static_cast<unsigned>(b)), mu.z());
  return {g, mu, b, value};
}

bool LimitReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.ok(); });
}

LimitReport framing_limit_check(AmplitudeCache& cache, int g, int h, const RecursionOptions& options) {
  require_stable(g, h, "framing_limit_check");
  const auto lambert = w_amplitude(cache, CurveSpec::lambert(), g, h, options);
  const auto framed = w_amplitude(cache, CurveSpec::framed_symbolic(), g, h, options);
  std::set<std::vector<int>> keys;
  for (const auto& [k, v] : lambert->coeffs) keys.insert(k);
  for (const auto& [k, v] : framed->coeffs) keys.insert(k);

  LimitReport report{g, h, {}};
  for (const auto& key : keys) {
    LimitReport::Row row;
    row.indices = key;
    row.single = lambert->at(key).as_rational();
    row.triple = framed_entry_to_bracket(framed->at(key), g, h);
    const RationalFunction& t = row.triple.as_rational_function();
    row.polynomial = t.is_polynomial();
    row.degree = t.numerator().degree();
    row.degree_ok = row.polynomial && row.degree <= 2 * g;
    const Rational lead = row.polynomial ? t.numerator().coefficient(2 * g) / t.denominator().leading() : Rational(0);
    row.leading_ok = row.polynomial && lead == (g % 2 ? -row.single : row.single);
    report.rows.push_back(std::move(row));
  }
  return report;
}

ZetaWeightLimitReport zeta_weight_limit_check(int nmax, int mumax) {
  ZetaWeightLimitReport report;
  const CurveSpec framed = CurveSpec::framed_symbolic();
  const CurveSpec lambert = CurveSpec::lambert();
  for (int n = 0; n <= nmax; ++n) {
    for (int mu = 1; mu <= mumax; ++mu) {
      const RationalFunction w = zeta_weight(framed, n, mu).as_rational_function();
      const Rational target = zeta_weight(lambert, n, mu).as_rational();
      const bool ok = w.is_polynomial() && w.numerator().degree() == mu - 1 &&
                      w.numerator().leading() / w.denominator().leading() == target;
      if (!ok) report.failures.push_back("n=" + std::to_string(n) + " mu=" + std::to_string(mu));
      ++report.checked;
    }
  }
  return report;
}

MumfordReport mumford_consistency(AmplitudeCache& cache, int g, int hmax, const RecursionOptions& options) {
  MumfordReport report{g, -1, true};
  for (int h = 1; h <= hmax; ++h) {
    if (!is_stable(g, h)) continue;
    const auto framed = w_amplitude(cache, CurveSpec::framed_symbolic(), g, h, options);
    for (const auto& [key, v] : framed->coeffs) {
      const RationalFunction t = framed_entry_to_bracket(v, g, h).as_rational_function();
      if (!t.is_polynomial()) {
        report.ok = false;
        continue;
      }
      report.max_degree = std::max(report.max_degree, t.numerator().degree());
    }
  }
  report.ok = report.ok && report.max_degree <= 2 * g;
  return report;
}

}  // namespace htr
