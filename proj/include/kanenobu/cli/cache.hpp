#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace kanenobu {

// On-disk cache of invariant values keyed by (engine version, canonical
// diagram encoding, invariant name). Writes go to a temporary file that is
// renamed into place.
class ResultCache {
 public:
  ResultCache() = default;
  explicit ResultCache(std::filesystem::path dir);
  // Directory from KANENOBU_CACHE, disabled when unset or when off is true.
  static ResultCache from_env(bool off = false);

  bool enabled() const { return dir_.has_value(); }
  std::optional<nlohmann::json> get(const std::string& encoding, const std::string& invariant) const;
  void put(const std::string& encoding, const std::string& invariant, const nlohmann::json& value) const;

 private:
  std::filesystem::path path_for(const std::string& key) const;
  std::optional<std::filesystem::path> dir_;
};

}  // namespace kanenobu
