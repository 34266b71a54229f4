#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "dbubble/polyomino.hpp"

namespace dbubble {

struct CacheEntry {
  long long value = 0;
  bool exact = false;
  std::string witnessFile;  // relative to the CSV directory; may be empty
};

// CSV-backed store of oracle results keyed by (n, m). Single writer at a
// time; an exact entry is never replaced by a weaker one.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path csvPath)
      : path_(std::move(csvPath)) {}

  // $DBUBBLE_CACHE when set, else dbubble_cache.csv in the working directory.
  static std::filesystem::path default_path();

  void load();        // missing file leaves the cache empty
  void save() const;  // rewrites the full file, rows sorted by (n, m)

  std::optional<CacheEntry> lookup(long long n, long long m) const;
  void store(long long n, long long m, long long value, bool exact,
             const LatticeConfig* witness = nullptr);
  std::optional<LatticeConfig> load_witness(long long n, long long m) const;

  const std::filesystem::path& path() const { return path_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::filesystem::path path_;
  std::map<std::pair<long long, long long>, CacheEntry> entries_;
};

}  // namespace dbubble
