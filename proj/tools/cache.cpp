#include "cache.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace fbeta::cli {

namespace fs = std::filesystem;

std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CacheStore::CacheStore(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw std::runtime_error("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

fs::path CacheStore::path_for(const std::string& operation, const nlohmann::json& key) const {
  return dir_ / (operation + "-" + digest(key.dump()) + ".json");
}

std::optional<nlohmann::json> CacheStore::load(const std::string& operation, const nlohmann::json& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(operation, key));
  if (!in) return std::nullopt;
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  if (doc.value("format_version", -1) != kCacheFormatVersion) return std::nullopt;
  if (doc.value("operation", std::string()) != operation) return std::nullopt;
  if (!doc.contains("key") || doc["key"] != key || !doc.contains("payload")) return std::nullopt;
  return doc["payload"];
}

void CacheStore::store(const std::string& operation, const nlohmann::json& key, const nlohmann::json& payload) const {
  if (!enabled()) return;
  nlohmann::json doc{{"format_version", kCacheFormatVersion}, {"operation", operation}, {"key", key}, {"payload", payload}};
  fs::path target = path_for(operation, key);
  std::random_device rd;
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;  // an unwritable cache only costs recomputation
    out << doc.dump() << '\n';
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      return;
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace fbeta::cli
