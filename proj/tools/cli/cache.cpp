#include "cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace covertool::cli {

namespace {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

ResultCache::ResultCache(std::string path, std::ostream* warnings)
    : path_(std::move(path)), warnings_(warnings) {
  std::ifstream in(path_);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      const Json record = Json::parse(line);
      const std::string key = record.at("key").dump();
      records_.try_emplace(key, record.at("value"));
    } catch (const Json::exception&) {
      ++corrupt_lines_;
      if (warnings_) {
        *warnings_ << "warning: cache " << path_ << " line " << number
                   << ": corrupt record skipped\n";
      }
    }
  }
}

std::optional<Json> ResultCache::get(const Json& key) const {
  std::lock_guard lock(mutex_);
  auto it = records_.find(key.dump());
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

Json ResultCache::get_or_compute(const Json& key,
                                 const std::function<Json()>& compute) {
  if (auto hit = get(key)) return *hit;
  Json value = compute();
  std::lock_guard lock(mutex_);
  auto [it, inserted] = records_.try_emplace(key.dump(), value);
  if (inserted) append(key, value);
  return it->second;
}

std::size_t ResultCache::size() const {
  std::lock_guard lock(mutex_);
  return records_.size();
}

void ResultCache::append(const Json& key, const Json& value) {
  const std::string line =
      Json{{"key", key}, {"value", value}, {"created_at", utc_timestamp()}}
          .dump() +
      "\n";
  const int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) {
    throw std::runtime_error("cannot open cache " + path_ + ": " +
                             std::strerror(errno));
  }
  ::flock(fd, LOCK_EX);
  std::size_t written = 0;
  while (written < line.size()) {
    const ssize_t n = ::write(fd, line.data() + written, line.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      break;
    }
    written += static_cast<std::size_t>(n);
  }
  ::flock(fd, LOCK_UN);
  ::close(fd);
  if (written != line.size()) {
    throw std::runtime_error("short write to cache " + path_);
  }
}

std::optional<std::string> resolve_cache_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("COVERTOOL_CACHE"); env && *env) {
    return std::string(env);
  }
  return std::nullopt;
}

}  // namespace covertool::cli
