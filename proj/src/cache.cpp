#include "dbubble/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dbubble {

namespace {

constexpr const char* kHeader = "n,m,value,exact,witness_file";

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

std::filesystem::path ResultCache::default_path() {
  const char* env = std::getenv("DBUBBLE_CACHE");
  if (env && *env) return env;
  return "dbubble_cache.csv";
}

void ResultCache::load() {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  if (!std::getline(in, line)) return;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader)
    throw std::runtime_error("cache: unexpected header in " + path_.string());
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto f = split_csv(line);
    if (f.size() != 5)
      throw std::runtime_error("cache: malformed row: " + line);
    try {
      long long n = std::stoll(f[0]);
      long long m = std::stoll(f[1]);
      entries_[{n, m}] = CacheEntry{std::stoll(f[2]), f[3] == "1", f[4]};
    } catch (const std::exception&) {
      throw std::runtime_error("cache: malformed row: " + line);
    }
  }
}

void ResultCache::save() const {
  if (path_.has_parent_path())
    std::filesystem::create_directories(path_.parent_path());
  std::ofstream out(path_, std::ios::trunc);
  if (!out)
    throw std::runtime_error("cache: cannot write " + path_.string());
  out << kHeader << "\n";
  for (const auto& [key, e] : entries_)
    out << key.first << "," << key.second << "," << e.value << ","
        << (e.exact ? 1 : 0) << "," << e.witnessFile << "\n";
}

std::optional<CacheEntry> ResultCache::lookup(long long n, long long m) const {
  auto it = entries_.find({n, m});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::store(long long n, long long m, long long value, bool exact,
                        const LatticeConfig* witness) {
  auto it = entries_.find({n, m});
  if (it != entries_.end()) {
    const CacheEntry& old = it->second;
    bool stronger = (exact && !old.exact) || (exact == old.exact && value < old.value);
    if (!stronger) return;
  }
  CacheEntry e{value, exact, ""};
  if (witness) {
    std::ostringstream name;
    name << "witness_" << n << "_" << m << ".txt";
    std::filesystem::path file =
        path_.has_parent_path() ? path_.parent_path() / name.str()
                                : std::filesystem::path(name.str());
    if (path_.has_parent_path())
      std::filesystem::create_directories(path_.parent_path());
    std::ofstream wout(file, std::ios::trunc);
    if (!wout)
      throw std::runtime_error("cache: cannot write " + file.string());
    wout << to_text(*witness);
    e.witnessFile = name.str();
  }
  entries_[{n, m}] = e;
}

std::optional<LatticeConfig> ResultCache::load_witness(long long n,
                                                       long long m) const {
  auto it = entries_.find({n, m});
  if (it == entries_.end() || it->second.witnessFile.empty()) return std::nullopt;
  std::filesystem::path file =
      path_.has_parent_path() ? path_.parent_path() / it->second.witnessFile
                              : std::filesystem::path(it->second.witnessFile);
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

}  // namespace dbubble
