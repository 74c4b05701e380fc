#include "htr/amplitude_store.hpp"

#include <cstdlib>
#include <fstream>
#include <regex>
#include <stdexcept>

#include "htr/serialization.hpp"

namespace htr {

namespace fs = std::filesystem;

AmplitudeStore::AmplitudeStore(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec || !fs::is_directory(dir_)) {
    throw std::runtime_error("cache directory '" + dir_.string() + "' cannot be created");
  }
}

fs::path AmplitudeStore::path_for(const CurveSpec& spec, int g, int h) const {
  return dir_ / (spec.tag() + "_g" + std::to_string(g) + "_h" + std::to_string(h) + ".json");
}

std::optional<WAmplitude> AmplitudeStore::load(const CurveSpec& spec, int g, int h) const {
  const fs::path p = path_for(spec, g, h);
  std::ifstream in(p);
  if (!in) return std::nullopt;
  try {
    const Json j = Json::parse(in);
    const Json& header = j.at("header");
    if (!(curve_spec_from_json(header) == spec)) return std::nullopt;
    WAmplitude amp = amplitude_from_json(j.at("amplitude"));
    if (!(amp.spec == spec) || amp.g != g || amp.h != h) return std::nullopt;
    amp.trunc = header.value("trunc", 0);
    return amp;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void AmplitudeStore::save(const WAmplitude& amp) const {
  Json header = curve_spec_to_json(amp.spec);
  header["trunc"] = amp.trunc;
  const Json j{{"header", std::move(header)}, {"amplitude", to_json(amp)}};
  const fs::path target = path_for(amp.spec, amp.g, amp.h);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << j.dump(1) << '\n';
  }
  fs::rename(tmp, target);
}

std::vector<AmplitudeStore::Listing> AmplitudeStore::list() const {
  static const std::regex name_re(R"(^(.+)_g(\d+)_h(\d+)\.json$)");
  std::vector<Listing> out;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    const std::string name = entry.path().filename().string();
    std::smatch m;
    if (!entry.is_regular_file() || !std::regex_match(name, m, name_re)) continue;
    int trunc = 0;
    try {
      std::ifstream in(entry.path());
      trunc = Json::parse(in).at("header").value("trunc", 0);
    } catch (const std::exception&) {
      trunc = -1;
    }
    out.push_back({name, m[1].str(), std::stoi(m[2].str()), std::stoi(m[3].str()), trunc});
  }
  std::sort(out.begin(), out.end(), [](const Listing& a, const Listing& b) { return a.file < b.file; });
  return out;
}

std::size_t AmplitudeStore::clear() const {
  std::size_t removed = 0;
  for (const auto& l : list()) removed += fs::remove(dir_ / l.file) ? 1 : 0;
  return removed;
}

fs::path default_cache_dir() {
  if (const char* env = std::getenv("HURWITZ_TR_CACHE"); env && *env) return env;
  return ".hurwitz-tr-cache";
}

}  // namespace htr
