#pragma once

#include <string>
#include <vector>

#include "htr/recursion.hpp"

namespace htr {

enum class BracketKind { SingleLambda, TripleLambda };

/// <tau_{n_1} .. tau_{n_h} Lambda_g(1)> or, for the framed vertex,
/// <tau_{n_1} .. tau_{n_h} Lambda_g(1) Lambda_g(-f-1) Lambda_g(f)>, kept as an
/// opaque value.
struct HodgeBracket {
  int g = 0;
  std::vector<int> indices;  // sorted
  BracketKind kind = BracketKind::SingleLambda;
  Scalar value;
};

struct HurwitzValue {
  int g = 0;
  Partition mu;
  int b = 0;  // 2g - 2 + l(mu) + |mu|
  Rational value;
};

/// Lambert tensor entry; zero beyond the dimension bound.
HodgeBracket hodge_bracket(AmplitudeCache& cache, int g, std::vector<int> indices,
                           const RecursionOptions& options = {});

/// Symbolic framed tensor entry divided by (-1)^{g+h} (f(f+1))^{h-1}.
HodgeBracket framed_bracket(AmplitudeCache& cache, int g, std::vector<int> indices,
                            const RecursionOptions& options = {});

/// H_{g,mu} from the recursion: b!/z_mu times the coefficient of
/// prod x_i^{mu_i - 1} in W_g(x_1..x_h).
///
/// Bookkeeping example, mu = (2,1), g = 0: b = 3, z_mu = 2. With the parts
/// assigned as x_1 <- 2, x_2 <- 1 the monomial x_1 appears in m_mu(x) with
/// coefficient 1 (the 1/|Aut| = 1 and only the identity permutation gives
/// it), so H = 3!/2 * [x_1^1 x_2^0] W_0(x_1, x_2). The unstable (0,1) and
/// (0,2) cases read the disk and annulus series.
HurwitzValue hurwitz_from_recursion(AmplitudeCache& cache, int g, const Partition& mu,
                                    const RecursionOptions& options = {});

struct LimitReport {
  int g = 0;
  int h = 0;
  struct Row {
    std::vector<int> indices;
    Scalar triple;       // TripleLambda bracket
    Rational single;     // SingleLambda bracket
    int degree = 0;      // f-degree of the triple bracket (-1 for zero)
    bool polynomial = false;
    bool degree_ok = false;
    bool leading_ok = false;
    bool ok() const { return polynomial && degree_ok && leading_ok; }
  };
  std::vector<Row> rows;
  bool ok() const;
};

/// For every index tuple of either tensor: the triple bracket is a polynomial
/// in f of degree <= 2g whose f^{2g} coefficient is (-1)^g times the single
/// bracket.
LimitReport framing_limit_check(AmplitudeCache& cache, int g, int h, const RecursionOptions& options = {});

struct ZetaWeightLimitReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// f^{-(mu-1)} zeta_weight(framed, n, mu) is a polynomial in 1/f whose
/// constant term is the Lambert weight mu^{mu+1+n}/mu!.
ZetaWeightLimitReport zeta_weight_limit_check(int nmax, int mumax);

struct MumfordReport {
  int g = 0;
  int max_degree = -1;
  bool ok = false;
};

/// Maximum f-degree of the triple brackets over all computed h for genus g
/// (h = 1..hmax, stable only); ok when it does not exceed 2g.
MumfordReport mumford_consistency(AmplitudeCache& cache, int g, int hmax = 2,
                                  const RecursionOptions& options = {});

}  // namespace htr
