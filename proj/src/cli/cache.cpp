#include "kanenobu/cli/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "kanenobu/cli/report.hpp"

namespace kanenobu {

namespace {

std::string full_key(const std::string& encoding, const std::string& invariant) {
  return std::string(kEngineVersion) + '\n' + encoding + '\n' + invariant;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

ResultCache ResultCache::from_env(bool off) {
  if (off) return {};
  const char* dir = std::getenv("KANENOBU_CACHE");
  if (!dir || !*dir) return {};
  return ResultCache(dir);
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(key)));
  return *dir_ / name;
}

std::optional<nlohmann::json> ResultCache::get(const std::string& encoding, const std::string& invariant) const {
  if (!dir_) return std::nullopt;
  const std::string key = full_key(encoding, invariant);
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("key").get<std::string>() != key) return std::nullopt;
    return j.at("value");
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void ResultCache::put(const std::string& encoding, const std::string& invariant, const nlohmann::json& value) const {
  if (!dir_) return;
  const std::string key = full_key(encoding, invariant);
  std::error_code ec;
  std::filesystem::create_directories(*dir_, ec);
  const auto target = path_for(key);
  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp." << ::getpid() << '.' << std::random_device{}();
  const auto tmp = *dir_ / tmp_name.str();
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << nlohmann::json{{"key", key}, {"value", value}}.dump();
    if (!out) return;
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace kanenobu
