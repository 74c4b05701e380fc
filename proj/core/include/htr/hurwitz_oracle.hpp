#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "htr/partition.hpp"
#include "htr/rational.hpp"

namespace htr {

/// Young diagram with row lengths l_1 >= l_2 >= ... (stored as a Partition).
using Tableau = Partition;

/// |R|! / prod of hook lengths.
mpz_class hook_dimension(const Tableau& R);

/// chi_R(mu) by the Murnaghan-Nakayama rule on beta-numbers. Memoized; safe
/// to call from several threads.
mpz_class mn_character(const Tableau& R, const Partition& mu);

/// kappa_R = sum_i l_i (l_i - 2i + 1), i counted from 1.
long kappa(const Tableau& R);

/// |mu|!/z_mu * chi_R(mu)/dim R, and 0 when |R| != |mu|.
Rational f_r(const Tableau& R, const Partition& mu);

/// Covers counted with disconnected sources and b simple branch points:
/// sum_R (dim R/|mu|!)^2 f_R(mu) (kappa_R/2)^b, with 0^0 = 1.
Rational disconnected_hurwitz(int b, const Partition& mu);

/// Element of the algebra spanned by (b, mu), truncated at b <= max_b and
/// |mu| <= max_size; multiplication adds b and concatenates partitions.
class HurwitzSeries {
 public:
  using Key = std::pair<int, Partition>;

  HurwitzSeries(int max_b, int max_size) : max_b_(max_b), max_size_(max_size) {}

  /// Z = 1 + sum H^*(b, mu)/b! [b, mu] within the bounds.
  static HurwitzSeries partition_function(int max_b, int max_size);

  int max_b() const { return max_b_; }
  int max_size() const { return max_size_; }
  const std::map<Key, Rational>& coefficients() const { return c_; }
  Rational coefficient(int b, const Partition& mu) const;
  void add(int b, const Partition& mu, const Rational& value);

  friend HurwitzSeries operator*(const HurwitzSeries& a, const HurwitzSeries& b);
  friend HurwitzSeries operator+(const HurwitzSeries& a, const HurwitzSeries& b);
  friend HurwitzSeries operator*(const HurwitzSeries& a, const Rational& s);
  friend bool operator==(const HurwitzSeries& a, const HurwitzSeries& b) { return a.c_ == b.c_; }

  /// Formal log, requires constant term 1.
  HurwitzSeries log() const;
  /// Formal exp, requires zero constant term.
  HurwitzSeries exp() const;

 private:
  int max_b_;
  int max_size_;
  std::map<Key, Rational> c_;
};

/// Connected Hurwitz number H_{g,mu} = b! [b, mu] log Z, b = 2g-2+l(mu)+|mu|.
/// Throws std::invalid_argument when b < 0 or mu is empty.
Rational connected_hurwitz(int g, const Partition& mu);

/// Same, read off a precomputed free energy; throws std::out_of_range when
/// (b, mu) lies outside its bounds.
Rational connected_hurwitz(const HurwitzSeries& free_energy, int g, const Partition& mu);

struct SchurCheckReport {
  int checked = 0;
  /// Entries where the literal Schur expansion differs from (-1)^b Z.
  std::vector<std::string> literal_failures;
  /// Entries where the expansion with transposed diagrams differs from Z.
  std::vector<std::string> transposed_failures;
  bool ok() const { return literal_failures.empty() && transposed_failures.empty(); }
};

/// Expands sum_R g_s^{-|R|} dim R/|R|! e^{-g_s kappa_R/2} s_R(v) in power sums
/// via s_R = sum_mu chi_R(mu)/z_mu p_mu and compares with the character-sum
/// partition function. The literal expansion equals (-1)^b times the
/// character sum coefficient; with s_R replaced by s_{R'} (transposed
/// diagram, equivalently e^{+g_s kappa_R/2}) the two agree exactly.
SchurCheckReport schur_partition_function_check(int max_b, int max_size);

}  // namespace htr
