#include "htr/laurent_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace htr {

int add_trunc(int a, int b) {
  if (a >= LaurentSeries::kExact || b >= LaurentSeries::kExact) return LaurentSeries::kExact;
  const long sum = static_cast<long>(a) + static_cast<long>(b);
  return static_cast<int>(std::min<long>(sum, LaurentSeries::kExact));
}

namespace {

int mul_trunc(int t, int k) {
  if (t >= LaurentSeries::kExact) return LaurentSeries::kExact;
  const long prod = static_cast<long>(t) * static_cast<long>(k);
  return static_cast<int>(std::clamp<long>(prod, -LaurentSeries::kExact, LaurentSeries::kExact));
}

void require_same_field(const LaurentSeries& a, const LaurentSeries& b, const char* op) {
  if (a.field() != b.field()) {
    throw FieldMismatch(std::string("LaurentSeries: ") + op + " mixes " + field_name(a.field()) + " and " +
                        field_name(b.field()));
  }
}

}  // namespace

LaurentSeries::LaurentSeries(Field field) : field_(field), lowest_(kExact), trunc_(kExact) {}

LaurentSeries::LaurentSeries(Field field, int lowest, std::vector<Scalar> coeffs, int trunc)
    : field_(field), lowest_(lowest), coeffs_(std::move(coeffs)), trunc_(std::min(trunc, kExact)) {
  for (const auto& c : coeffs_) {
    if (c.field() != field_) throw FieldMismatch("LaurentSeries: coefficient outside the series field");
  }
  normalize();
}

void LaurentSeries::normalize() {
  if (lowest_ >= trunc_) {
    coeffs_.clear();
  } else if (end() > trunc_) {
    coeffs_.resize(static_cast<std::size_t>(trunc_ - lowest_));
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    lowest_ = trunc_;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    lowest_ += static_cast<int>(lead);
  }
}

LaurentSeries LaurentSeries::zero(Field field, int trunc) { return LaurentSeries(field, trunc, {}, trunc); }

LaurentSeries LaurentSeries::monomial(const Scalar& coeff, int exponent, int trunc) {
  return LaurentSeries(coeff.field(), exponent, {coeff}, trunc);
}

Scalar LaurentSeries::coefficient(int exponent) const {
  if (exponent >= trunc_) {
    throw InsufficientTruncation("LaurentSeries: coefficient outside the known window", exponent, trunc_);
  }
  if (exponent < lowest_ || exponent >= end()) return Scalar::zero(field_);
  return coeffs_[static_cast<std::size_t>(exponent - lowest_)];
}

LaurentSeries LaurentSeries::truncated(int t) const {
  if (t >= trunc_) return *this;
  return LaurentSeries(field_, lowest_, coeffs_, t);
}

LaurentSeries LaurentSeries::extended(int t) const {
  if (t <= trunc_) return truncated(t);
  LaurentSeries out = *this;
  out.trunc_ = std::min(t, kExact);
  if (out.coeffs_.empty()) out.lowest_ = out.trunc_;
  return out;
}

LaurentSeries LaurentSeries::shifted(int k) const {
  LaurentSeries out = *this;
  out.lowest_ = add_trunc(lowest_, k);
  out.trunc_ = add_trunc(trunc_, k);
  return out;
}

LaurentSeries LaurentSeries::derivative() const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int e = lowest_ + static_cast<int>(i);
    out.push_back(coeffs_[i] * Rational(e));
  }
  return LaurentSeries(field_, lowest_ - 1, std::move(out), is_exact() ? kExact : trunc_ - 1);
}

LaurentSeries LaurentSeries::specialize(const Rational& f_value) const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.specialize(f_value));
  return LaurentSeries(Field::Rational, lowest_, std::move(out), trunc_);
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  require_same_field(*this, o, "+");
  const int t = std::min(trunc_, o.trunc_);
  if (o.is_zero()) return *this = truncated(t);
  if (is_zero()) return *this = o.truncated(t);
  const int lo = std::min(lowest_, o.lowest_);
  const int hi = std::min(std::max(end(), o.end()), t);
  if (hi <= lo) return *this = zero(field_, t);
  std::vector<Scalar> out(static_cast<std::size_t>(hi - lo), Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int e = lowest_ + static_cast<int>(i);
    if (e < hi) out[static_cast<std::size_t>(e - lo)] = coeffs_[i];
  }
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    const int e = o.lowest_ + static_cast<int>(i);
    if (e < hi) out[static_cast<std::size_t>(e - lo)] += o.coeffs_[i];
  }
  return *this = LaurentSeries(field_, lo, std::move(out), t);
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries& LaurentSeries::operator*=(const Scalar& s) {
  if (s.field() != field_) throw FieldMismatch("LaurentSeries: scalar outside the series field");
  for (auto& c : coeffs_) c *= s;
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  normalize();
  return *this;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string LaurentSeries::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[i].str() + ")*z^" + std::to_string(lowest_ + static_cast<int>(i));
  }
  if (out.empty()) out = "0";
  if (!is_exact()) out += " + O(z^" + std::to_string(trunc_) + ")";
  return out;
}

bool agree(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.field() != b.field()) return false;
  const int t = std::min(a.trunc(), b.trunc());
  const int lo = std::min(a.lowest(), b.lowest());
  const int hi = std::min(std::max(a.end(), b.end()), t);
  for (int e = lo; e < hi; ++e) {
    if (a.coefficient(e) != b.coefficient(e)) return false;
  }
  return true;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return series_mul(a, b); }

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_field(a, b, "*");
  const Field field = a.field();
  const int t = std::min(add_trunc(a.trunc(), b.lowest()), add_trunc(b.trunc(), a.lowest()));
  if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(field, t);
  const int lo = a.lowest() + b.lowest();
  const int hi = std::min(a.end() + b.end() - 1, t);
  if (hi <= lo) return LaurentSeries::zero(field, t);
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  const int width = hi - lo;
  std::vector<Scalar> out(static_cast<std::size_t>(width), Scalar::zero(field));
  for (int i = 0; i < static_cast<int>(ac.size()) && i < width; ++i) {
    if (ac[static_cast<std::size_t>(i)].is_zero()) continue;
    const int jmax = std::min(static_cast<int>(bc.size()), width - i);
    for (int j = 0; j < jmax; ++j) {
      if (bc[static_cast<std::size_t>(j)].is_zero()) continue;
      out[static_cast<std::size_t>(i + j)] += ac[static_cast<std::size_t>(i)] * bc[static_cast<std::size_t>(j)];
    }
  }
  return LaurentSeries(field, lo, std::move(out), t);
}

LaurentSeries series_invert(const LaurentSeries& a, int cap) {
  if (a.is_zero()) throw std::domain_error("series_invert: zero series");
  const Field field = a.field();
  const int v = a.lowest();
  const int rel = a.is_exact() ? LaurentSeries::kExact : a.trunc() - v;
  const int t = std::min(add_trunc(-v, rel), cap);
  const auto& ac = a.coefficients();
  if (ac.size() == 1 && t >= LaurentSeries::kExact) {
    return LaurentSeries::monomial(ac[0].inverse(), -v);
  }
  if (t >= LaurentSeries::kExact) {
    throw std::invalid_argument("series_invert: inverse of an exact polynomial needs a truncation cap");
  }
  const int n = t + v;  // number of coefficients to produce
  if (n <= 0) return LaurentSeries::zero(field, t);
  const Scalar lead_inv = ac[0].inverse();
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(n));
  out.push_back(lead_inv);
  for (int k = 1; k < n; ++k) {
    Scalar acc = Scalar::zero(field);
    const int imax = std::min(k, static_cast<int>(ac.size()) - 1);
    for (int i = 1; i <= imax; ++i) {
      if (ac[static_cast<std::size_t>(i)].is_zero()) continue;
      acc += ac[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(k - i)];
    }
    out.push_back(-(acc * lead_inv));
  }
  return LaurentSeries(field, -v, std::move(out), t);
}

LaurentSeries series_pow(const LaurentSeries& a, int k, int cap) {
  if (k == 0) return LaurentSeries::constant(Scalar::one(a.field()));
  if (k < 0) {
    const int inv_cap = (cap >= LaurentSeries::kExact || a.is_zero())
                            ? cap
                            : add_trunc(cap, (-k - 1) * a.lowest());
    return series_pow(series_invert(a, inv_cap), -k, cap);
  }
  LaurentSeries base = a;
  LaurentSeries out = LaurentSeries::constant(Scalar::one(a.field()));
  bool first = true;
  while (k > 0) {
    if (k & 1) {
      out = first ? base : series_mul(out, base);
      first = false;
    }
    k >>= 1;
    if (k > 0) base = series_mul(base, base);
  }
  return out.truncated(cap);
}

LaurentSeries series_compose(const LaurentSeries& outer, const LaurentSeries& inner) {
  require_same_field(outer, inner, "compose");
  const Field field = outer.field();
  const bool polynomial_outer = outer.is_exact() && (outer.is_zero() || outer.lowest() >= 0);

  if (outer.is_zero()) return LaurentSeries::zero(field, outer.trunc());

  int v = 0;
  int rel = 0;
  if (inner.is_zero()) {
    if (outer.lowest() < 0) throw std::domain_error("series_compose: negative power of a zero series");
    v = inner.trunc();
    rel = 0;
  } else {
    v = inner.lowest();
    rel = inner.is_exact() ? LaurentSeries::kExact : inner.trunc() - v;
    if (v <= 0 && !polynomial_outer) {
      throw std::domain_error(
          "series_compose: inner series must vanish at 0 unless the outer series is a polynomial");
    }
  }

  int t = outer.is_exact() ? LaurentSeries::kExact : mul_trunc(outer.trunc(), v);
  for (int j = outer.lowest(); j < outer.end(); ++j) {
    if (j == 0 || outer.coefficient(j).is_zero()) continue;
    if (rel >= LaurentSeries::kExact || v >= LaurentSeries::kExact) continue;
    t = std::min(t, mul_trunc(j, v) + rel);
  }

  if (inner.is_zero()) return LaurentSeries::constant(outer.coefficient(0), t);

  LaurentSeries acc = LaurentSeries::zero(field, t);
  // Negative powers.
  for (int j = outer.lowest(); j < 0 && j < outer.end(); ++j) {
    const Scalar c = outer.coefficient(j);
    if (c.is_zero()) continue;
    acc += series_pow(inner, j, t) * c;
  }
  // Non-negative powers, built incrementally.
  const int jmax = outer.end() - 1;
  const int slack = v < 0 ? -v : 0;
  LaurentSeries power = LaurentSeries::constant(Scalar::one(field));
  for (int j = 0; j <= jmax; ++j) {
    if (j > 0) power = series_mul(power, inner).truncated(add_trunc(t, (jmax - j) * slack));
    if (j < outer.lowest()) continue;
    const Scalar c = outer.coefficient(j);
    if (!c.is_zero()) acc += power.truncated(t) * c;
  }
  return acc.truncated(t);
}

LaurentSeries series_reversion(const LaurentSeries& a, int order) {
  if (a.is_zero() || a.lowest() < 1) {
    if (!a.is_zero() && a.lowest() < 1) {
      throw std::invalid_argument("series_reversion: series must have zero constant term and no poles");
    }
  }
  if (a.is_zero() || a.lowest() > 1) throw std::domain_error("series_reversion: vanishing linear coefficient");
  if (a.trunc() < order) {
    throw InsufficientTruncation("series_reversion: input not known to the requested order", order - 1, a.trunc());
  }
  const Field field = a.field();
  const Scalar c1_inv = a.coefficient(1).inverse();
  const LaurentSeries x = LaurentSeries::variable(field);
  LaurentSeries b = LaurentSeries::monomial(c1_inv, 1, std::max(order, 2)).truncated(2);
  int precision = 2;
  const LaurentSeries da = a.derivative();
  while (precision < order) {
    precision = std::min(2 * precision, order);
    const LaurentSeries bt = b.extended(precision);
    const LaurentSeries err = series_compose(a.truncated(precision), bt) - x;
    const LaurentSeries slope = series_compose(da.truncated(precision), bt);
    b = (bt - series_mul(err, series_invert(slope))).truncated(precision);
  }
  return b.truncated(order);
}

Scalar laurent_residue(const LaurentSeries& a) {
  if (a.trunc() <= -1) {
    throw InsufficientTruncation("laurent_residue: window does not contain z^-1", -1, a.trunc());
  }
  return a.coefficient(-1);
}

LaurentSeries exp_series(Field field, int trunc) {
  std::vector<Scalar> c;
  Rational term(1);
  for (int n = 0; n < trunc; ++n) {
    if (n > 0) term /= Rational(n);
    c.push_back(Scalar::from_rational(field, term));
  }
  return LaurentSeries(field, 0, std::move(c), trunc);
}

LaurentSeries log1p_series(Field field, int trunc) {
  std::vector<Scalar> c;
  for (int n = 1; n < trunc; ++n) c.push_back(Scalar::from_rational(field, Rational(n % 2 ? 1 : -1, n)));
  return LaurentSeries(field, 1, std::move(c), trunc);
}

LaurentSeries geometric_series(Field field, int trunc) {
  std::vector<Scalar> c(static_cast<std::size_t>(std::max(trunc, 0)), Scalar::one(field));
  return LaurentSeries(field, 0, std::move(c), trunc);
}

}  // namespace htr
