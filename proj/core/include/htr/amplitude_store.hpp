#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "htr/amplitude.hpp"

namespace htr {

/// Directory of amplitude JSON files, one per (curve, g, h), named
/// "<curve-tag>_g<g>_h<h>.json". Each file starts with a header echoing the
/// curve serialization; a file whose header does not match is ignored.
class AmplitudeStore {
 public:
  explicit AmplitudeStore(std::filesystem::path dir);

  const std::filesystem::path& directory() const { return dir_; }
  std::filesystem::path path_for(const CurveSpec& spec, int g, int h) const;

  std::optional<WAmplitude> load(const CurveSpec& spec, int g, int h) const;
  /// Writes through a temporary file and a rename.
  void save(const WAmplitude& amp) const;

  struct Listing {
    std::string file;
    std::string curve;
    int g;
    int h;
    int trunc;
  };
  std::vector<Listing> list() const;
  /// Removes every amplitude file; returns how many were removed.
  std::size_t clear() const;

 private:
  std::filesystem::path dir_;
};

/// $HURWITZ_TR_CACHE, else ".hurwitz-tr-cache".
std::filesystem::path default_cache_dir();

}  // namespace htr
