#include "htr/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

#include "htr/rational.hpp"

namespace htr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
    size_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find_first_of(",-", pos);
    const std::string_view item = text.substr(pos, next == std::string_view::npos ? text.npos : next - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value <= 0) {
      throw std::invalid_argument("Partition: cannot parse '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return Partition(std::move(parts));
}

mpz_class Partition::aut() const {
  mpz_class out = 1;
  std::size_t i = 0;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    out *= factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return out;
}

mpz_class Partition::z() const {
  mpz_class out = aut();
  for (int p : parts_) out *= p;
  return out;
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace htr
