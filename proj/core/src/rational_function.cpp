#include "htr/rational_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace htr {

Polynomial::Polynomial(Rational constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

Polynomial Polynomial::indeterminate() { return Polynomial(std::vector<Rational>{Rational(0), Rational(1)}); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw std::domain_error("Polynomial: leading coefficient of zero");
  return c_.back();
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (c_.empty() || c_.back().is_one()) return *this;
  Polynomial out = *this;
  out *= c_.back().inverse();
  return out;
}

std::pair<Rational, Polynomial> Polynomial::content_and_primitive() const {
  if (c_.empty()) return {Rational(0), Polynomial()};
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& x : c_) {
    if (x.is_zero()) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get().get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get().get_den_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  if (c_.back().sign() < 0) content = -content;
  Polynomial primitive = *this;
  primitive *= content.inverse();
  return {content, primitive};
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].get() * b.c_[j].get();
  }
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& q : acc) out.emplace_back(std::move(q));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

std::string Polynomial::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& x = c_[static_cast<std::size_t>(k)];
    if (x.is_zero()) continue;
    const bool negative = x.sign() < 0;
    const Rational mag = negative ? -x : x;
    if (!out.empty() || negative) out += negative ? "-" : "+";
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (!mag.is_one()) out += mag.str() + "*";
    out += "f";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("Polynomial: division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  const Rational lead_inv = b.leading().inverse();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    Rational q = rem[static_cast<std::size_t>(k)] * lead_inv;
    if (q.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * bc[static_cast<std::size_t>(j)];
    quot[static_cast<std::size_t>(k - db)] = std::move(q);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

namespace {

// Exponent of the lowest nonzero coefficient (the f-adic valuation).
int valuation(const Polynomial& p) {
  const auto& c = p.coefficients();
  int k = 0;
  while (k < static_cast<int>(c.size()) && c[static_cast<std::size_t>(k)].is_zero()) ++k;
  return k;
}

Polynomial drop_low(const Polynomial& p, int k) {
  const auto& c = p.coefficients();
  return Polynomial(std::vector<Rational>(c.begin() + k, c.end()));
}

Polynomial f_power(int k) {
  std::vector<Rational> c(static_cast<std::size_t>(k + 1));
  c.back() = Rational(1);
  return Polynomial(std::move(c));
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  // Powers of f are by far the most common common factor; split them off
  // so that Euclid only runs on the f-free parts.
  const int va = valuation(a), vb = valuation(b);
  const int v = std::min(va, vb);
  Polynomial x = drop_low(a, va).monic();
  Polynomial y = drop_low(b, vb).monic();
  if (x.is_constant() || y.is_constant()) return f_power(v);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return v == 0 ? x : x * f_power(v);
}

namespace {

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_constant()) {
    Polynomial out = a;
    out *= b.leading().inverse();
    return out;
  }
  return divmod(a, b).first;
}

}  // namespace

RationalFunction::RationalFunction(Rational constant) : num_(std::move(constant)), den_(Rational(1)) {}

RationalFunction::RationalFunction(Polynomial numerator) : num_(std::move(numerator)), den_(Rational(1)) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator) {
  *this = ratfunc_normalize(numerator, denominator);
}

RationalFunction ratfunc_normalize(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  if (num.is_zero()) return RationalFunction();
  const Polynomial g = gcd(num, den);
  Polynomial n = exact_quotient(num, g);
  Polynomial d = exact_quotient(den, g);
  const Rational lead = d.leading();
  if (!lead.is_one()) {
    n *= lead.inverse();
    d *= lead.inverse();
  }
  RationalFunction out;
  out.num_ = std::move(n);
  out.den_ = std::move(d);
  return out;
}

Rational RationalFunction::evaluate(const Rational& at) const {
  const Rational d = den_.evaluate(at);
  if (d.is_zero()) throw std::domain_error("RationalFunction: pole at f = " + at.str());
  return num_.evaluate(at) / d;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
  const Rational lead = num_.leading().inverse();
  return RationalFunction(den_ * lead, num_ * lead, Canonical{});
}

RationalFunction RationalFunction::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  RationalFunction base = *this;
  RationalFunction out(Rational(1));
  while (exponent > 0) {
    if (exponent & 1) out *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    Polynomial n = num_ + o.num_;
    if (den_.is_constant() || n.is_zero()) {
      num_ = std::move(n);
      if (num_.is_zero()) den_ = Polynomial(Rational(1));
      return *this;
    }
    return *this = ratfunc_normalize(n, den_);
  }
  // Henrici: with g = gcd(b, d), gcd(a d/g + c b/g, b d/g) = gcd(., g).
  const Polynomial g = gcd(den_, o.den_);
  const Polynomial b_over_g = exact_quotient(den_, g);
  const Polynomial d_over_g = exact_quotient(o.den_, g);
  Polynomial n = num_ * d_over_g + o.num_ * b_over_g;
  Polynomial d = den_ * d_over_g;
  if (n.is_zero()) return *this = RationalFunction();
  if (!g.is_constant()) {
    const Polynomial g2 = gcd(n, g);
    if (!g2.is_constant()) {
      n = exact_quotient(n, g2);
      d = exact_quotient(d, g2);
    }
  }
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    return *this;
  }
  // Cross-cancel before multiplying: a/b * c/d with g1 = (a,d), g2 = (c,b).
  const Polynomial g1 = gcd(num_, o.den_);
  const Polynomial g2 = gcd(o.num_, den_);
  Polynomial n = exact_quotient(num_, g1) * exact_quotient(o.num_, g2);
  Polynomial d = exact_quotient(den_, g2) * exact_quotient(o.den_, g1);
  const Rational lead = d.leading();
  if (!lead.is_one()) {
    n *= lead.inverse();
    d *= lead.inverse();
  }
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction& RationalFunction::operator*=(const Rational& s) {
  if (s.is_zero()) return *this = RationalFunction();
  num_ *= s;
  return *this;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Canonical{}); }

std::string RationalFunction::str() const {
  if (num_.is_zero()) return "0";
  auto [nc, np] = num_.content_and_primitive();
  auto [dc, dp] = den_.content_and_primitive();
  const Rational scale = nc / dc;
  const mpz_class p = scale.numerator();
  const mpz_class q = scale.denominator();
  const bool unit_num = np.is_constant();
  const bool unit_den = dp.is_constant();

  std::string out;
  if (unit_num) {
    out = p.get_str();
  } else {
    if (p == -1) {
      out = "-";
    } else if (p != 1) {
      out = p.get_str() + "*";
    }
    const auto nonzero = std::count_if(np.coefficients().begin(), np.coefficients().end(),
                                       [](const Rational& c) { return !c.is_zero(); });
    out += nonzero > 1 ? "(" + np.str() + ")" : np.str();
  }
  if (unit_den && q == 1) return out;
  out += "/";
  if (unit_den) return out + q.get_str();
  const auto den_terms = std::count_if(dp.coefficients().begin(), dp.coefficients().end(),
                                       [](const Rational& c) { return !c.is_zero(); });
  if (q == 1) return out + (den_terms > 1 ? "(" + dp.str() + ")" : dp.str());
  return out + "(" + q.get_str() + "*" + (den_terms > 1 ? "(" + dp.str() + ")" : dp.str()) + ")";
}

}  // namespace htr
