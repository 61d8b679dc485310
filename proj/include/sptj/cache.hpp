#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sptj/series.hpp"

namespace sptj {

/// Identifies one cached column of values for n = 0..n_max.
struct CacheKey {
  std::string family;
  int j = 0;
  int k = 0;
  int n_max = 0;
  std::string route;

  auto operator<=>(const CacheKey&) const = default;
};

/// Memoized value columns persisted as a versioned JSON document with big
/// integers written as decimal strings.
///
/// Lookups also accept an entry with a larger n_max for the same family,
/// parameters and route and return its prefix.
class ResultCache {
 public:
  static constexpr int kVersion = 1;
  /// Environment variable naming the default cache file.
  static constexpr const char* kEnvVar = "SPTJ_CACHE";

  ResultCache() = default;
  /// Loads `path` if it exists; a missing file gives an empty cache.
  /// Throws std::runtime_error on malformed content or a version mismatch.
  explicit ResultCache(std::filesystem::path path);

  /// Path from kEnvVar, if set and nonempty.
  static std::optional<std::filesystem::path> default_path();

  const std::filesystem::path& path() const { return path_; }
  size_t size() const { return entries_.size(); }

  std::optional<std::vector<Int>> lookup(const CacheKey& key) const;
  void store(const CacheKey& key, std::vector<Int> values);

  /// Writes to path(), replacing the file atomically. No-op without a path.
  void save() const;

  std::string to_json() const;
  static ResultCache from_json(const std::string& text);

 private:
  std::filesystem::path path_;
  std::map<CacheKey, std::vector<Int>> entries_;
};

}  // namespace sptj
