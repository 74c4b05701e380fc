#include "htr/amplitude.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace htr {

Scalar WAmplitude::at(std::vector<int> indices) const {
  if (static_cast<int>(indices.size()) != h) throw std::invalid_argument("WAmplitude::at: wrong number of indices");
  std::sort(indices.begin(), indices.end());
  const auto it = coeffs.find(indices);
  return it == coeffs.end() ? Scalar::zero(spec.field()) : it->second;
}

bool is_stable(int g, int h) { return g >= 0 && h >= 1 && 2 * g - 2 + h > 0; }

AmplitudeCache::Ptr AmplitudeCache::find(const CurveSpec& spec, int g, int h) const {
  std::shared_lock lock(mutex_);
  const auto it = entries_.find(Key{spec.tag(), g, h});
  return it == entries_.end() ? nullptr : it->second;
}

AmplitudeCache::Ptr AmplitudeCache::insert(WAmplitude amp) {
  Key key{amp.spec.tag(), amp.g, amp.h};
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.try_emplace(std::move(key), nullptr);
  if (inserted) it->second = std::make_shared<const WAmplitude>(std::move(amp));
  return it->second;
}

std::size_t AmplitudeCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void AmplitudeCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

}  // namespace htr
