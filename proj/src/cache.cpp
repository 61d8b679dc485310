#include "sptj/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sptj {

using nlohmann::json;

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {
  if (!std::filesystem::exists(path_)) return;
  std::ifstream in(path_);
  if (!in) throw std::runtime_error("cannot read cache " + path_.string());
  std::stringstream buf;
  buf << in.rdbuf();
  entries_ = from_json(buf.str()).entries_;
}

std::optional<std::filesystem::path> ResultCache::default_path() {
  const char* v = std::getenv(kEnvVar);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::filesystem::path(v);
}

std::optional<std::vector<Int>> ResultCache::lookup(const CacheKey& key) const {
  if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  for (auto it = entries_.lower_bound(CacheKey{key.family, key.j, key.k, key.n_max, ""}); it != entries_.end(); ++it) {
    const CacheKey& c = it->first;
    if (c.family != key.family || c.j != key.j || c.k != key.k) break;
    if (c.route == key.route && c.n_max >= key.n_max) {
      return std::vector<Int>(it->second.begin(), it->second.begin() + key.n_max + 1);
    }
  }
  return std::nullopt;
}

void ResultCache::store(const CacheKey& key, std::vector<Int> values) {
  if (values.size() != static_cast<size_t>(key.n_max) + 1) {
    throw std::invalid_argument("ResultCache::store: expected n_max + 1 values");
  }
  entries_[key] = std::move(values);
}

void ResultCache::save() const {
  if (path_.empty()) return;
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  const auto tmp = std::filesystem::path(path_.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache " + tmp.string());
    out << to_json() << '\n';
  }
  std::filesystem::rename(tmp, path_);
}

std::string ResultCache::to_json() const {
  json entries = json::array();
  for (const auto& [key, values] : entries_) {
    json vals = json::array();
    for (const Int& v : values) vals.push_back(v.get_str());
    entries.push_back({{"family", key.family},
                       {"j", key.j},
                       {"k", key.k},
                       {"n_max", key.n_max},
                       {"route", key.route},
                       {"values", std::move(vals)}});
  }
  json doc = {{"format", "sptj-cache"}, {"version", kVersion}, {"entries", std::move(entries)}};
  return doc.dump(1);
}

ResultCache ResultCache::from_json(const std::string& text) {
  ResultCache cache;
  try {
    const json doc = json::parse(text);
    if (doc.at("format").get<std::string>() != "sptj-cache") throw std::runtime_error("not a cache document");
    const int version = doc.at("version").get<int>();
    if (version != kVersion) throw std::runtime_error("unsupported cache version " + std::to_string(version));
    for (const json& e : doc.at("entries")) {
      CacheKey key{e.at("family").get<std::string>(), e.at("j").get<int>(), e.at("k").get<int>(),
                   e.at("n_max").get<int>(), e.at("route").get<std::string>()};
      std::vector<Int> values;
      for (const json& v : e.at("values")) values.emplace_back(v.get<std::string>());
      cache.store(key, std::move(values));
    }
  } catch (const json::exception& ex) {
    throw std::runtime_error(std::string("malformed cache: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw std::runtime_error(std::string("malformed cache: ") + ex.what());
  }
  return cache;
}

}  // namespace sptj
