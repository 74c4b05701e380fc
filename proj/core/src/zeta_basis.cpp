#include "htr/zeta_basis.hpp"

#include <stdexcept>
#include <string>

namespace htr {

namespace {

// Laurent polynomial in u, exponent -> coefficient.
using UPoly = std::map<int, Scalar>;

void add_to(UPoly& p, int e, const Scalar& c) {
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

// D(u^e) = e (p0 u^{e-2} + p1 u^{e-1} + p2 u^e)
UPoly apply_D(const UPoly& in, const Scalar (&p)[3]) {
  UPoly out;
  for (const auto& [e, c] : in) {
    const Scalar ce = c * Rational(e);
    for (int i = 0; i < 3; ++i) {
      if (!p[i].is_zero()) add_to(out, e - 2 + i, ce * p[i]);
    }
  }
  return out;
}

}  // namespace

ZetaBasis::ZetaBasis(const CurveSpec& spec, int nmax) : spec_(spec) {
  if (nmax < 0) throw std::invalid_argument("ZetaBasis: nmax must be non-negative");
  const Field field = spec.field();
  const Scalar one = Scalar::one(field);
  Scalar p[3];
  UPoly seed;
  if (spec.kind() == CurveKind::Lambert) {
    p[0] = -one;
    p[1] = -one;
    p[2] = Scalar::zero(field);
    seed[-1] = -one;
  } else {
    const Scalar f1 = spec.framing() + one;
    const Scalar inv = f1.inverse();
    const Scalar b = spec.branch_value();
    p[0] = b * (b - one) * inv;
    p[1] = (b * Rational(2) - one) * inv;
    p[2] = inv;
    seed[-1] = (f1 * f1).inverse();
  }
  UPoly current = seed;
  forms_.reserve(static_cast<std::size_t>(nmax + 1));
  for (int n = 0; n <= nmax; ++n) {
    if (n > 0) current = apply_D(current, p);
    PoleForm form;
    for (const auto& [e, c] : current) {
      if (e == 0) continue;
      form.emplace(1 - e, c * Rational(e));  // d/du u^e = e u^{e-1}
    }
    forms_.push_back(std::move(form));
  }
}

const PoleForm& ZetaBasis::form(int n) const {
  if (n < 0 || n > nmax()) {
    throw std::out_of_range("ZetaBasis: zeta_" + std::to_string(n) + " outside the cached range 0.." +
                            std::to_string(nmax()));
  }
  return forms_[static_cast<std::size_t>(n)];
}

const PoleForm& zeta_form(const ZetaBasis& basis, int n) { return basis.form(n); }

Scalar zeta_weight(const CurveSpec& spec, int n, int mu) {
  if (n < 0 || mu < 1) throw std::invalid_argument("zeta_weight: need n >= 0 and mu >= 1");
  const Rational inv_fact(mpz_class(1), factorial(static_cast<unsigned>(mu)));
  if (spec.kind() == CurveKind::Lambert) {
    return Scalar(Rational(mu).pow(mu + 1 + n) * inv_fact);
  }
  const Field field = spec.field();
  const Scalar f = spec.framing();
  Scalar prod = Scalar::from_rational(field, Rational(mu).pow(n + 2) * inv_fact);
  for (int j = 1; j < mu; ++j) prod *= f * Rational(mu) + Scalar::from_int(field, j);
  return prod;
}

std::map<int, Scalar> pole_to_zeta(const ZetaBasis& basis, const PoleForm& form) {
  PoleForm rest;
  for (const auto& [k, c] : form) {
    if (!c.is_zero()) rest.emplace(k, c);
  }
  std::map<int, Scalar> out;
  while (!rest.empty()) {
    const auto top = std::prev(rest.end());
    const int k = top->first;
    if (k <= 1) {
      throw InvariantViolation("pole_to_zeta: nonzero residue term at pole order " + std::to_string(k));
    }
    if (k % 2 != 0) {
      throw InvariantViolation("pole_to_zeta: remainder at odd pole order " + std::to_string(k) +
                               " is outside the span of the zeta basis");
    }
    const int n = k / 2 - 1;
    const PoleForm& z = basis.form(n);
    const Scalar c = top->second / z.at(k);
    out.emplace(n, c);
    for (const auto& [kk, zc] : z) add_to(rest, kk, -(c * zc));
    if (rest.count(k) != 0) throw InvariantViolation("pole_to_zeta: elimination failed to clear the top order");
  }
  return out;
}

PoleForm zeta_to_pole(const ZetaBasis& basis, const std::map<int, Scalar>& combination) {
  PoleForm out;
  for (const auto& [n, c] : combination) {
    for (const auto& [k, zc] : basis.form(n)) add_to(out, k, c * zc);
  }
  return out;
}

}  // namespace htr
