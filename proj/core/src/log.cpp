#include "navembed/log.hpp"

#include <atomic>
#include <iostream>
#include <mutex>

namespace navembed {
namespace {

std::atomic<LogLevel> g_level{LogLevel::kWarning};
std::mutex g_mutex;

void write(LogLevel level, const char* tag, std::string_view message) {
  if (static_cast<int>(level) > static_cast<int>(g_level.load())) return;
  std::lock_guard lock(g_mutex);
  std::cerr << "[navembed " << tag << "] " << message << '\n';
}

}  // namespace

void set_log_level(LogLevel level) { g_level = level; }
LogLevel log_level() { return g_level; }

void log_warning(std::string_view message) { write(LogLevel::kWarning, "warning", message); }
void log_info(std::string_view message) { write(LogLevel::kInfo, "info", message); }
void log_debug(std::string_view message) { write(LogLevel::kDebug, "debug", message); }

}  // namespace navembed
