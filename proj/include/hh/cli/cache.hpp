#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace hh::cli {

// 64-bit FNV-1a over the compact dump (object keys are sorted, so the dump is canonical).
std::string fingerprint(const nlohmann::json& request);

// Content-addressed JSON records, one file per fingerprint.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  // SPRINGER_HH_CACHE, else $XDG_CACHE_HOME/springer-hh, else ~/.cache/springer-hh
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }
  std::optional<nlohmann::json> get(const nlohmann::json& request) const;
  void put(const nlohmann::json& request, const nlohmann::json& result, double seconds) const;

 private:
  std::filesystem::path dir_;
  std::filesystem::path path_for(const nlohmann::json& request) const;
};

}  // namespace hh::cli
