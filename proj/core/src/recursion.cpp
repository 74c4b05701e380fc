#include "htr/recursion.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <exception>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "htr/amplitude_store.hpp"
#include "htr/zeta_basis.hpp"

namespace htr {

int default_trunc(int g, int h) { return 6 * g + 2 * h + 6; }

namespace {

// Runs fn(0..n-1) on up to `jobs` threads; the first exception is rethrown.
template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

using Tensor = std::map<std::vector<int>, Scalar>;

void accumulate(Tensor& t, const std::vector<int>& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

// A one-form slot of an integrand term, as seen from the z coordinate.
// Kind 0: zeta_n. Kind 1: the Bergman expansion term (m'+1) w^{m'} dw,
// whose spectator carries pole order m'+2.
struct SlotKey {
  int kind;
  int index;
  friend auto operator<=>(const SlotKey&, const SlotKey&) = default;
};

// Spectator codes: a zeta index n >= 0, or -k for a pole order k >= 2 that
// still has to be converted.
struct Entry {
  SlotKey slot;
  std::vector<std::pair<int, int>> spectators;  // (position, code)
  Scalar coeff;
};

struct Work {
  SlotKey a;  // slot at q
  SlotKey b;  // slot at qbar
  std::vector<int> key;
  Scalar coeff;
};

class Engine {
 public:
  Engine(AmplitudeCache& cache, const CurveSpec& spec, int trunc, const RecursionOptions& options)
      : cache_(cache), spec_(spec), field_(spec.field()), options_(options),
        model_(make_curve_model(spec, trunc)), basis_(spec, 4) {
    omega_inv_ = series_invert(model_.omega);
    sigma_prime_ = model_.involution.derivative();
  }

  AmplitudeCache::Ptr get(int g, int h) {
    if (auto hit = cache_.find(spec_, g, h)) return hit;
    if (options_.store) {
      if (auto loaded = options_.store->load(spec_, g, h)) return cache_.insert(std::move(*loaded));
    }
    WAmplitude amp = compute(g, h);
    auto stored = cache_.insert(std::move(amp));
    if (options_.store) options_.store->save(*stored);
    return stored;
  }

 private:
  WAmplitude compute(int g, int h);

  const std::vector<std::pair<std::vector<int>, Scalar>>& ordered(int g, int h) {
    auto key = std::make_pair(g, h);
    auto it = ordered_.find(key);
    if (it != ordered_.end()) return it->second;
    const auto amp = get(g, h);
    std::vector<std::pair<std::vector<int>, Scalar>> out;
    for (const auto& [sorted, c] : amp->coeffs) {
      std::vector<int> perm = sorted;
      do {
        out.emplace_back(perm, c);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return ordered_.emplace(key, std::move(out)).first->second;
  }

  void ensure_basis(int n) {
    if (n > basis_.nmax()) basis_ = ZetaBasis(spec_, std::max(n, 2 * basis_.nmax()));
  }

  std::vector<std::pair<int, Scalar>> slot_terms(SlotKey s) {
    if (s.kind == 1) return {{-s.index, Scalar::from_int(field_, s.index + 1)}};
    ensure_basis(s.index);
    const PoleForm& form = basis_.form(s.index);
    return {form.begin(), form.end()};
  }

  static int slot_kmax(SlotKey s) { return s.kind == 1 ? -s.index : 2 * s.index + 2; }

  const LaurentSeries& sigma_pow(int j) {
    auto it = sigma_pow_.find(j);
    if (it != sigma_pow_.end()) return it->second;
    return sigma_pow_.emplace(j, series_pow(model_.involution, j)).first->second;
  }

  // sigma^{-k} sigma'
  const LaurentSeries& S(int k) {
    auto it = s_.find(k);
    if (it != s_.end()) return it->second;
    return s_.emplace(k, series_mul(sigma_pow(-k), sigma_prime_)).first->second;
  }

  // (z^m - sigma^m)/2
  const LaurentSeries& A(int m) {
    auto it = a_.find(m);
    if (it != a_.end()) return it->second;
    LaurentSeries v = (LaurentSeries::monomial(Scalar::one(field_), m) - sigma_pow(m)) * Rational(1, 2);
    return a_.emplace(m, std::move(v)).first->second;
  }

  void prepare(const std::set<std::pair<SlotKey, SlotKey>>& pairs);
  const std::vector<Scalar>& residues(SlotKey a, SlotKey b) { return residues_.at({a, b}); }
  Tensor to_zeta(Tensor t, int h);

  AmplitudeCache& cache_;
  CurveSpec spec_;
  Field field_;
  RecursionOptions options_;
  CurveModel model_;
  ZetaBasis basis_;
  LaurentSeries omega_inv_;
  LaurentSeries sigma_prime_;
  std::map<int, LaurentSeries> sigma_pow_, s_, a_;
  std::map<std::pair<int, int>, LaurentSeries> c_;  // (m, k2) -> A_m S_k2 / omega
  std::map<std::pair<SlotKey, SlotKey>, std::vector<Scalar>> residues_;
  std::map<std::pair<int, int>, std::vector<std::pair<std::vector<int>, Scalar>>> ordered_;
};

// residues(a, b)[m-1] = Res_z A_m(z)/omega(z) * slot_a(z) * slot_b(sigma(z)),
// the coefficient of dy/(y-b)^{m+1} contributed by the pair.
void Engine::prepare(const std::set<std::pair<SlotKey, SlotKey>>& pairs) {
  std::vector<std::pair<SlotKey, SlotKey>> todo;
  for (const auto& p : pairs) {
    if (!residues_.count(p)) todo.push_back(p);
  }
  if (todo.empty()) return;

  std::set<std::pair<int, int>> needed;
  for (const auto& [a, b] : todo) {
    const int mmax = slot_kmax(a) + slot_kmax(b) + 1;
    for (const auto& [k2, c2] : slot_terms(b)) {
      for (int m = 1; m <= mmax; ++m) {
        if (!c_.count({m, k2})) needed.insert({m, k2});
      }
    }
  }
  std::vector<std::pair<int, int>> jobs(needed.begin(), needed.end());
  for (const auto& [m, k2] : jobs) {
    A(m);
    S(k2);
  }
  std::vector<LaurentSeries> built(jobs.size());
  parallel_for(jobs.size(), options_.jobs, [&](std::size_t i) {
    const auto [m, k2] = jobs[i];
    built[i] = series_mul(series_mul(a_.at(m), s_.at(k2)), omega_inv_);
  });
  for (std::size_t i = 0; i < jobs.size(); ++i) c_.emplace(jobs[i], std::move(built[i]));

  std::vector<std::vector<std::pair<int, Scalar>>> ta(todo.size()), tb(todo.size());
  for (std::size_t i = 0; i < todo.size(); ++i) {
    ta[i] = slot_terms(todo[i].first);
    tb[i] = slot_terms(todo[i].second);
  }
  std::vector<std::vector<Scalar>> values(todo.size());
  parallel_for(todo.size(), options_.jobs, [&](std::size_t i) {
    const int mmax = slot_kmax(todo[i].first) + slot_kmax(todo[i].second) + 1;
    std::vector<Scalar> r(static_cast<std::size_t>(std::max(mmax, 0)), Scalar::zero(field_));
    for (int m = 1; m <= mmax; ++m) {
      Scalar acc = Scalar::zero(field_);
      for (const auto& [k1, c1] : ta[i]) {
        for (const auto& [k2, c2] : tb[i]) {
          if (m > k1 + k2 + 1) continue;
          const Scalar coef = c_.at({m, k2}).coefficient(k1 - 1);
          if (!coef.is_zero()) acc += c1 * c2 * coef;
        }
      }
      r[static_cast<std::size_t>(m - 1)] = std::move(acc);
    }
    values[i] = std::move(r);
  });
  for (std::size_t i = 0; i < todo.size(); ++i) residues_.emplace(todo[i], std::move(values[i]));
}

Tensor Engine::to_zeta(Tensor t, int h) {
  int top = 0;
  for (const auto& [key, c] : t) {
    for (int code : key) top = std::max(top, -code);
  }
  ensure_basis(top / 2 + 1);
  for (int slot = 0; slot < h; ++slot) {
    Tensor next;
    std::map<std::vector<int>, PoleForm> groups;
    for (auto& [key, c] : t) {
      if (key[static_cast<std::size_t>(slot)] >= 0) {
        accumulate(next, key, c);
        continue;
      }
      std::vector<int> rest = key;
      rest[static_cast<std::size_t>(slot)] = INT_MIN;
      PoleForm& form = groups[rest];
      const int k = -key[static_cast<std::size_t>(slot)];
      auto [it, inserted] = form.try_emplace(k, c);
      if (!inserted) it->second += c;
    }
    for (auto& [rest, form] : groups) {
      for (const auto& [n, c] : pole_to_zeta(basis_, form)) {
        std::vector<int> key = rest;
        key[static_cast<std::size_t>(slot)] = n;
        accumulate(next, key, c);
      }
    }
    t = std::move(next);
  }
  return t;
}

WAmplitude Engine::compute(int g, int h) {
  if (!is_stable(g, h)) {
    throw std::domain_error("w_amplitude: (g, h) = (" + std::to_string(g) + ", " + std::to_string(h) +
                            ") is unstable");
  }
  const int s = h - 1;  // spectators y_1..y_{h-1} sit at key positions 1..s
  std::vector<Work> work;
  Tensor pole;

  // W_{g-1}(q, qbar, y_H)
  if (g >= 1) {
    if (is_stable(g - 1, h + 1)) {
      for (const auto& [t, c] : ordered(g - 1, h + 1)) {
        std::vector<int> key(static_cast<std::size_t>(h), 0);
        for (int i = 0; i < s; ++i) key[static_cast<std::size_t>(i + 1)] = t[static_cast<std::size_t>(i + 2)];
        work.push_back({{0, t[0]}, {0, t[1]}, std::move(key), c});
      }
    } else {
      // g = 1, h = 1: W_0(q, qbar) is the Bergman kernel itself.
      const LaurentSeries integrand = series_mul(bergman_self(model_), omega_inv_);
      for (int m = 1; m <= 3; ++m) {
        accumulate(pole, {-(m + 1)}, laurent_residue(series_mul(A(m), integrand)));
      }
    }
  }

  // sum over l, J of W_{g-l}(q, y_J) W_l(qbar, y_{H\J})
  for (int l = 0; l <= g; ++l) {
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
      std::vector<int> J, K;
      for (int i = 0; i < s; ++i) ((mask >> i) & 1u ? J : K).push_back(i + 1);
      const int g1 = g - l, n1 = static_cast<int>(J.size()) + 1;
      const int g2 = l, n2 = static_cast<int>(K.size()) + 1;
      if ((g1 == 0 && n1 == 1) || (g2 == 0 && n2 == 1)) continue;

      auto stable_entries = [&](int gg, int nn, const std::vector<int>& pos) {
        std::vector<Entry> out;
        for (const auto& [t, c] : ordered(gg, nn)) {
          Entry e{{0, t[0]}, {}, c};
          for (std::size_t i = 0; i < pos.size(); ++i) e.spectators.emplace_back(pos[i], t[i + 1]);
          out.push_back(std::move(e));
        }
        return out;
      };
      auto bergman_entries = [&](int M, int position) {
        std::vector<Entry> out;
        for (int mp = 0; mp <= M; ++mp) out.push_back({{1, mp}, {{position, -(mp + 2)}}, Scalar::one(field_)});
        return out;
      };
      auto max_k = [](const std::vector<Entry>& es) {
        int k = 0;
        for (const auto& e : es) k = std::max(k, slot_kmax(e.slot));
        return k;
      };

      const bool berg1 = g1 == 0 && n1 == 2;
      const bool berg2 = g2 == 0 && n2 == 2;
      std::vector<Entry> f1, f2;
      if (!berg1) f1 = stable_entries(g1, n1, J);
      if (!berg2) f2 = stable_entries(g2, n2, K);
      if (berg1) f1 = bergman_entries(berg2 ? 0 : max_k(f2), J[0]);
      if (berg2) f2 = bergman_entries(berg1 ? 0 : max_k(f1), K[0]);

      for (const auto& e1 : f1) {
        for (const auto& e2 : f2) {
          std::vector<int> key(static_cast<std::size_t>(h), 0);
          for (const auto& [p, code] : e1.spectators) key[static_cast<std::size_t>(p)] = code;
          for (const auto& [p, code] : e2.spectators) key[static_cast<std::size_t>(p)] = code;
          work.push_back({e1.slot, e2.slot, std::move(key), e1.coeff * e2.coeff});
        }
      }
    }
  }

  std::set<std::pair<SlotKey, SlotKey>> pairs;
  for (const auto& w : work) pairs.insert({w.a, w.b});
  prepare(pairs);

  const unsigned chunks = std::max(1u, options_.jobs);
  std::vector<Tensor> partial(chunks);
  parallel_for(chunks, options_.jobs, [&](std::size_t c) {
    for (std::size_t i = c; i < work.size(); i += chunks) {
      const Work& w = work[i];
      const auto& r = residues(w.a, w.b);
      std::vector<int> key = w.key;
      for (std::size_t m = 1; m <= r.size(); ++m) {
        if (r[m - 1].is_zero()) continue;
        key[0] = -static_cast<int>(m + 1);
        accumulate(partial[c], key, w.coeff * r[m - 1]);
      }
    }
  });
  for (const auto& part : partial) {
    for (const auto& [key, c] : part) accumulate(pole, key, c);
  }

  const Tensor zeta = to_zeta(std::move(pole), h);

  WAmplitude amp;
  amp.spec = spec_;
  amp.g = g;
  amp.h = h;
  amp.trunc = model_.trunc;
  std::map<std::vector<int>, int> seen;
  for (const auto& [key, c] : zeta) {
    int sum = 0;
    for (int n : key) sum += n;
    if (sum > 3 * g - 3 + h) {
      throw InvariantViolation("W_" + std::to_string(g) + " with " + std::to_string(h) +
                               " points: nonzero coefficient beyond the dimension bound");
    }
    std::vector<int> sorted = key;
    std::sort(sorted.begin(), sorted.end());
    auto [it, inserted] = amp.coeffs.try_emplace(sorted, c);
    if (!inserted && !(it->second == c)) {
      throw InvariantViolation("W_" + std::to_string(g) + " with " + std::to_string(h) + " points is not symmetric");
    }
    ++seen[sorted];
  }
  for (const auto& [sorted, count] : seen) {
    std::vector<int> perm = sorted;
    int perms = 0;
    do {
      ++perms;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (perms != count) {
      throw InvariantViolation("W_" + std::to_string(g) + " with " + std::to_string(h) +
                               " points is missing permuted entries");
    }
  }
  return amp;
}

}  // namespace

AmplitudeCache::Ptr w_amplitude(AmplitudeCache& cache, const CurveSpec& spec, int g, int h,
                                const RecursionOptions& options) {
  if (!is_stable(g, h)) {
    throw std::domain_error("w_amplitude: (g, h) = (" + std::to_string(g) + ", " + std::to_string(h) +
                            ") is unstable");
  }
  if (auto hit = cache.find(spec, g, h)) return hit;
  int trunc = std::max(options.trunc.value_or(default_trunc(g, h)), 3);
  for (int attempt = 0;; ++attempt) {
    try {
      Engine engine(cache, spec, trunc, options);
      return engine.get(g, h);
    } catch (const InsufficientTruncation& e) {
      if (attempt >= 6) throw;
      trunc *= 2;
    }
  }
}

LaurentSeries bergman_self(const CurveModel& curve) {
  const LaurentSeries diff = LaurentSeries::variable(curve.spec.field()) - curve.involution;
  const LaurentSeries inv = series_invert(diff);
  return series_mul(series_mul(inv, inv), curve.involution.derivative());
}

LaurentSeries w_unstable_disk(const CurveSpec& spec, int order) {
  const Field field = spec.field();
  const LaurentSeries y = curve_y_series(spec, order + 1);
  if (spec.kind() == CurveKind::Lambert) return y.shifted(-1);
  const LaurentSeries logy = series_compose(log1p_series(field, order + 1), y - LaurentSeries::constant(Scalar::one(field)));
  return logy.shifted(-1);
}

BivariateSeries w_unstable_annulus(const CurveSpec& spec, int order) {
  if (order < 1) throw std::invalid_argument("w_unstable_annulus: order must be positive");
  const Field field = spec.field();
  const int work = order + 2;
  const LaurentSeries y = curve_y_series(spec, work + 1);
  auto a = [&](int n) { return y.coefficient(n); };
  // y(x1) - y(x2) = (x1 - x2) Q with Q = sum_n a_n h_{n-1}(x1, x2).
  BivariateSeries Q(field, work), Y(field, work);
  for (int n = 1; n <= work; ++n) {
    const Scalar an = a(n);
    for (int i = 0; i <= n - 1; ++i) Q.coefficient(i, n - 1 - i) += an;
  }
  for (int i = 0; i < work; ++i) {
    for (int j = 0; i + j < work; ++j) {
      Y.coefficient(i, j) = a(i + 1) * Rational(i + 1) * a(j + 1) * Rational(j + 1);
    }
  }
  // B - dx1dx2/(x1-x2)^2 = (y1'y2' - Q^2) / ((x1-x2)^2 Q^2)
  const BivariateSeries N = (Y - Q * Q).divide_by_difference().divide_by_difference();
  const BivariateSeries Qinv = Q.truncated(order).inverse();
  return N * Qinv * Qinv;
}

Scalar closed_amplitude(AmplitudeCache& cache, const CurveSpec& spec, int g, const Scalar& primitive_constant,
                        const RecursionOptions& options) {
  if (g < 2) throw std::domain_error("closed_amplitude: requires g >= 2");
  if (primitive_constant.field() != spec.field()) throw FieldMismatch("closed_amplitude: constant outside the curve field");
  const auto amp = w_amplitude(cache, spec, g, 1, options);
  const int nmax = 3 * g - 2;
  const ZetaBasis basis(spec, nmax);
  const int kmax = 2 * nmax + 2;
  const LaurentSeries integrand =
      series_mul(log_y_increment(spec, kmax + 2), log_x_increment(spec, kmax + 3).derivative());
  auto phi = [&](int j) {
    if (j == 0) return primitive_constant;
    return integrand.coefficient(j - 1) * Rational(1, j);
  };
  Scalar total = Scalar::zero(spec.field());
  for (const auto& [key, c] : amp->coeffs) {
    for (const auto& [k, zc] : basis.form(key[0])) total += c * zc * phi(k - 1);
  }
  return total;
}

Scalar w_as_x_coefficients(const WAmplitude& amp, const Partition& mu) {
  if (mu.length() != amp.h) throw std::invalid_argument("w_as_x_coefficients: partition length differs from h");
  Scalar total = Scalar::zero(amp.spec.field());
  for (const auto& [sorted, c] : amp.coeffs) {
    std::vector<int> perm = sorted;
    do {
      Scalar term = c;
      for (int i = 0; i < amp.h; ++i) term *= zeta_weight(amp.spec, perm[static_cast<std::size_t>(i)], mu[static_cast<std::size_t>(i)]);
      total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return total;
}

}  // namespace htr
