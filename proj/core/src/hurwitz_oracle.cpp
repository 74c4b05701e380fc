#include "htr/hurwitz_oracle.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace htr {

namespace {

using Beta = std::vector<int>;  // strictly decreasing bead positions

Beta beta_numbers(const std::vector<int>& rows) {
  const int l = static_cast<int>(rows.size());
  Beta b(rows.size());
  for (int i = 0; i < l; ++i) b[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i)] + (l - 1 - i);
  return b;
}

std::vector<int> rows_from_beta(const Beta& b) {
  std::vector<int> rows;
  const int l = static_cast<int>(b.size());
  for (int i = 0; i < l; ++i) {
    const int r = b[static_cast<std::size_t>(i)] - (l - 1 - i);
    if (r > 0) rows.push_back(r);
  }
  return rows;
}

std::mutex memo_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, mpz_class> memo;

// chi for rows (a partition) and parts mu[from..].
mpz_class character(const std::vector<int>& rows, const std::vector<int>& mu, std::size_t from) {
  if (from == mu.size()) return rows.empty() ? 1 : 0;
  std::vector<int> rest(mu.begin() + static_cast<long>(from), mu.end());
  {
    std::lock_guard lock(memo_mutex);
    auto it = memo.find({rows, rest});
    if (it != memo.end()) return it->second;
  }
  const int r = mu[from];
  const Beta beta = beta_numbers(rows);
  mpz_class total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // Sign of the border strip: beads strictly between target and beta[i].
    int between = 0;
    for (int x : beta) between += (x > target && x < beta[i]) ? 1 : 0;
    Beta moved = beta;
    moved[i] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    const mpz_class sub = character(rows_from_beta(moved), mu, from + 1);
    if (between % 2) {
      total -= sub;
    } else {
      total += sub;
    }
  }
  std::lock_guard lock(memo_mutex);
  memo.emplace(std::make_pair(rows, std::move(rest)), total);
  return total;
}

Rational power(const Rational& x, int b) {
  if (b == 0) return Rational(1);  // 0^0 = 1
  return x.pow(b);
}

}  // namespace

mpz_class hook_dimension(const Tableau& R) {
  const auto& rows = R.parts();
  mpz_class hooks = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < rows[i]; ++j) {
      int below = 0;
      for (std::size_t k = i + 1; k < rows.size() && rows[k] > j; ++k) ++below;
      hooks *= rows[i] - j + below;
    }
  }
  return factorial(static_cast<unsigned>(R.size())) / hooks;
}

mpz_class mn_character(const Tableau& R, const Partition& mu) {
  if (R.size() != mu.size()) throw std::invalid_argument("mn_character: |R| differs from |mu|");
  return character(R.parts(), mu.parts(), 0);
}

long kappa(const Tableau& R) {
  long k = 0;
  for (std::size_t i = 0; i < R.parts().size(); ++i) {
    const long l = R.parts()[i];
    k += l * (l - 2 * static_cast<long>(i + 1) + 1);
  }
  return k;
}

Rational f_r(const Tableau& R, const Partition& mu) {
  if (R.size() != mu.size()) return Rational(0);
  return Rational(factorial(static_cast<unsigned>(mu.size())), mu.z()) *
         Rational(mn_character(R, mu), hook_dimension(R));
}

Rational disconnected_hurwitz(int b, const Partition& mu) {
  if (b < 0) throw std::invalid_argument("disconnected_hurwitz: b must be non-negative");
  const mpz_class n_fact = factorial(static_cast<unsigned>(mu.size()));
  Rational total(0);
  for (const auto& R : partitions_of(mu.size())) {
    const Rational d(hook_dimension(R), n_fact);
    total += d * d * f_r(R, mu) * power(Rational(kappa(R), 2), b);
  }
  return total;
}

Rational HurwitzSeries::coefficient(int b, const Partition& mu) const {
  if (b > max_b_ || mu.size() > max_size_) {
    throw std::out_of_range("HurwitzSeries: (" + std::to_string(b) + ", " + mu.str() + ") outside the bounds");
  }
  const auto it = c_.find({b, mu});
  return it == c_.end() ? Rational(0) : it->second;
}

void HurwitzSeries::add(int b, const Partition& mu, const Rational& value) {
  if (value.is_zero() || b > max_b_ || mu.size() > max_size_) return;
  auto [it, inserted] = c_.try_emplace({b, mu}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) c_.erase(it);
  }
}

HurwitzSeries operator*(const HurwitzSeries& a, const HurwitzSeries& b) {
  HurwitzSeries out(std::min(a.max_b_, b.max_b_), std::min(a.max_size_, b.max_size_));
  for (const auto& [ka, va] : a.c_) {
    for (const auto& [kb, vb] : b.c_) {
      if (ka.first + kb.first > out.max_b_ || ka.second.size() + kb.second.size() > out.max_size_) continue;
      std::vector<int> parts = ka.second.parts();
      parts.insert(parts.end(), kb.second.parts().begin(), kb.second.parts().end());
      out.add(ka.first + kb.first, Partition(std::move(parts)), va * vb);
    }
  }
  return out;
}

HurwitzSeries operator+(const HurwitzSeries& a, const HurwitzSeries& b) {
  HurwitzSeries out(std::min(a.max_b_, b.max_b_), std::min(a.max_size_, b.max_size_));
  for (const auto& [k, v] : a.c_) out.add(k.first, k.second, v);
  for (const auto& [k, v] : b.c_) out.add(k.first, k.second, v);
  return out;
}

HurwitzSeries operator*(const HurwitzSeries& a, const Rational& s) {
  HurwitzSeries out(a.max_b_, a.max_size_);
  for (const auto& [k, v] : a.c_) out.add(k.first, k.second, v * s);
  return out;
}

HurwitzSeries HurwitzSeries::partition_function(int max_b, int max_size) {
  HurwitzSeries z(max_b, max_size);
  z.add(0, Partition(), Rational(1));
  for (int n = 1; n <= max_size; ++n) {
    for (const auto& mu : partitions_of(n)) {
      for (int b = 0; b <= max_b; ++b) {
        z.add(b, mu, disconnected_hurwitz(b, mu) * Rational(mpz_class(1), factorial(static_cast<unsigned>(b))));
      }
    }
  }
  return z;
}

HurwitzSeries HurwitzSeries::log() const {
  if (!(coefficient(0, Partition()) == Rational(1))) throw std::domain_error("HurwitzSeries::log: constant term must be 1");
  HurwitzSeries x = *this;
  x.c_.erase({0, Partition()});
  // Every term of x has |mu| >= 1, so x^k vanishes for k > max_size.
  HurwitzSeries out(max_b_, max_size_);
  HurwitzSeries power = x;
  for (int k = 1; k <= max_size_ && !power.c_.empty(); ++k) {
    out = out + power * Rational(k % 2 ? 1 : -1, k);
    power = power * x;
  }
  return out;
}

HurwitzSeries HurwitzSeries::exp() const {
  if (c_.count({0, Partition()})) throw std::domain_error("HurwitzSeries::exp: constant term must vanish");
  HurwitzSeries out(max_b_, max_size_);
  out.add(0, Partition(), Rational(1));
  HurwitzSeries power = out;
  for (int k = 1; k <= max_size_; ++k) {
    power = power * *this * Rational(1, k);
    out = out + power;
  }
  return out;
}

Rational connected_hurwitz(const HurwitzSeries& free_energy, int g, const Partition& mu) {
  const int b = 2 * g - 2 + mu.length() + mu.size();
  if (mu.empty() || b < 0) throw std::invalid_argument("connected_hurwitz: need a nonempty partition and b >= 0");
  return free_energy.coefficient(b, mu) * Rational(factorial(static_cast<unsigned>(b)));
}

Rational connected_hurwitz(int g, const Partition& mu) {
  const int b = 2 * g - 2 + mu.length() + mu.size();
  if (mu.empty() || b < 0) throw std::invalid_argument("connected_hurwitz: need a nonempty partition and b >= 0");
  return connected_hurwitz(HurwitzSeries::partition_function(b, mu.size()).log(), g, mu);
}

SchurCheckReport schur_partition_function_check(int max_b, int max_size) {
  const HurwitzSeries z = HurwitzSeries::partition_function(max_b, max_size);
  SchurCheckReport report;
  for (int n = 1; n <= max_size; ++n) {
    const auto tableaux = partitions_of(n);
    for (const auto& mu : partitions_of(n)) {
      for (int b = 0; b <= max_b; ++b) {
        // g_s^{b-|mu|} p_mu coefficient: sum_R dim R/|R|! chi(mu)/z_mu (-kappa/2)^b / b!
        Rational literal(0), transposed(0);
        for (const auto& R : tableaux) {
          std::vector<int> cols;
          for (int j = 0; j < R[0]; ++j) {
            int c = 0;
            for (int r : R.parts()) c += r > j ? 1 : 0;
            cols.push_back(c);
          }
          const Tableau Rt{std::move(cols)};
          const Rational w(hook_dimension(R), factorial(static_cast<unsigned>(n)));
          const Rational e = power(Rational(-kappa(R), 2), b) * Rational(mpz_class(1), factorial(static_cast<unsigned>(b)));
          literal += w * Rational(mn_character(R, mu), mu.z()) * e;
          transposed += w * Rational(mn_character(Rt, mu), mu.z()) * e;
        }
        const Rational expect = z.coefficient(b, mu);
        const std::string label = "b=" + std::to_string(b) + " mu=" + mu.str();
        if (!(literal == (b % 2 ? -expect : expect))) report.literal_failures.push_back(label);
        if (!(transposed == expect)) report.transposed_failures.push_back(label);
        ++report.checked;
      }
    }
  }
  return report;
}

}  // namespace htr
