#include "rado/log.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string_view>

namespace rado::log {

namespace {

Level from_env() {
  const char* env = std::getenv("RADO_LOG");
  if (env == nullptr) return Level::Quiet;
  const std::string_view v(env);
  if (v == "debug") return Level::Debug;
  if (v == "info") return Level::Info;
  return Level::Quiet;
}

std::atomic<Level>& current() {
  static std::atomic<Level> level{from_env()};
  return level;
}

std::mutex& sink_mutex() {
  static std::mutex m;
  return m;
}

void emit(const char* tag, const std::string& message) {
  std::lock_guard lock(sink_mutex());
  std::cerr << "[rado " << tag << "] " << message << '\n';
}

}  // namespace

Level level() { return current().load(std::memory_order_relaxed); }

void set_level(Level l) { current().store(l, std::memory_order_relaxed); }

void info(const std::string& message) {
  if (level() >= Level::Info) emit("info", message);
}

void debug(const std::string& message) {
  if (level() >= Level::Debug) emit("debug", message);
}

}  // namespace rado::log
