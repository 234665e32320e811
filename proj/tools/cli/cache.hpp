#pragma once

#include <functional>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include <json.hpp>

namespace covertool::cli {

using Json = nlohmann::ordered_json;

// Append-only JSON-lines store: one {key, value, created_at} record per line.
// Appends take an exclusive flock so concurrent processes never interleave
// records; on load the first record per key wins. Thread-safe.
class ResultCache {
 public:
  // Loads existing records; corrupt lines are reported to `warnings` with
  // their line number and skipped.
  explicit ResultCache(std::string path, std::ostream* warnings = nullptr);

  std::optional<Json> get(const Json& key) const;
  // Returns the stored value for key, or computes, appends and returns it.
  Json get_or_compute(const Json& key, const std::function<Json()>& compute);

  std::size_t size() const;
  std::size_t corrupt_lines() const { return corrupt_lines_; }
  const std::string& path() const { return path_; }

 private:
  void append(const Json& key, const Json& value);

  std::string path_;
  std::ostream* warnings_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, Json> records_;
  std::size_t corrupt_lines_ = 0;
};

// --cache value if given, else $COVERTOOL_CACHE, else none.
std::optional<std::string> resolve_cache_path(const std::string& flag);

}  // namespace covertool::cli
