#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace htr {

/// Integer partition mu_1 >= ... >= mu_l > 0. Construction sorts the parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Comma- or dash-separated parts in any order: "1,2" == "2-1".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// prod over distinct parts of (multiplicity)!.
  mpz_class aut() const;
  /// |Aut(mu)| * prod mu_i.
  mpz_class z() const;

  /// Dash-separated, e.g. "3-1-1".
  std::string str() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in reverse-lexicographic order ((n) first, (1^n) last).
std::vector<Partition> partitions_of(int n);

}  // namespace htr
