#pragma once

#include <map>
#include <vector>

#include "htr/curve_model.hpp"

namespace htr {

/// The one-forms zeta_0 .. zeta_nmax of a curve, expressed in the pole basis
/// du/u^k with u = y - branch_value.
///
/// Both curves share the shape zeta_n = d/du [D^n seed] with
/// D = (p0 + p1 u + p2 u^2)/u * d/du:
///   Lambert: p = -(1+u),               seed = -1/u
///   framed:  p = (b+u)(b-1+u)/(1+f),   seed = 1/((1+f)^2 u)
/// zeta_n then has pole orders n+2 .. 2n+2 with a nonzero top coefficient,
/// which makes the change of basis triangular.
class ZetaBasis {
 public:
  ZetaBasis(const CurveSpec& spec, int nmax);

  const CurveSpec& spec() const { return spec_; }
  int nmax() const { return static_cast<int>(forms_.size()) - 1; }
  const PoleForm& form(int n) const;

 private:
  CurveSpec spec_;
  std::vector<PoleForm> forms_;
};

/// zeta_n as a PoleForm.
const PoleForm& zeta_form(const ZetaBasis& basis, int n);

/// Coefficient of x^{mu-1} dx in the x-expansion of zeta_n:
///   Lambert: mu^{mu+1+n}/mu!
///   framed:  mu^{n+2} prod_{j=1}^{mu-1}(mu f + j)/mu!
Scalar zeta_weight(const CurveSpec& spec, int n, int mu);

/// Writes a pole form as sum c_n zeta_n, eliminating from the top pole order
/// down. Throws InvariantViolation on an order-1 entry or a remainder outside
/// the span, std::out_of_range if the basis is too small.
std::map<int, Scalar> pole_to_zeta(const ZetaBasis& basis, const PoleForm& form);

/// Sum c_n zeta_n back in the pole basis.
PoleForm zeta_to_pole(const ZetaBasis& basis, const std::map<int, Scalar>& combination);

}  // namespace htr
