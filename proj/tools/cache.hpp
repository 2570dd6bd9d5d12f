#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace fbeta::cli {

inline constexpr int kCacheFormatVersion = 1;

// One JSON file per entry: {"format_version", "operation", "key", "payload"}. Entries that
// fail to parse or carry another version or key are treated as missing.
class CacheStore {
 public:
  CacheStore() = default;  // disabled
  explicit CacheStore(std::filesystem::path dir);

  bool enabled() const { return !dir_.empty(); }

  std::optional<nlohmann::json> load(const std::string& operation, const nlohmann::json& key) const;
  // Writes to a temporary file in the same directory, then renames it into place.
  void store(const std::string& operation, const nlohmann::json& key, const nlohmann::json& payload) const;

  std::filesystem::path path_for(const std::string& operation, const nlohmann::json& key) const;

 private:
  std::filesystem::path dir_;
};

// FNV-1a over the bytes, as 16 hex digits.
std::string digest(const std::string& bytes);

}  // namespace fbeta::cli
