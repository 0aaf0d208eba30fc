#include "morava/common.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <mutex>

namespace morava {

LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("LOG");
        if (env == nullptr) return LogLevel::error;
        if (std::strcmp(env, "debug") == 0) return LogLevel::debug;
        if (std::strcmp(env, "info") == 0) return LogLevel::info;
        return LogLevel::error;
    }();
    return level;
}

namespace {
std::mutex log_mutex;

void emit(const char* tag, const std::string& msg) {
    std::lock_guard<std::mutex> lock(log_mutex);
    std::cerr << tag << msg << '\n';
}
} // namespace

void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::info) emit("[info] ", msg);
}

void log_debug(const std::string& msg) {
    if (log_level() >= LogLevel::debug) emit("[debug] ", msg);
}

} // namespace morava
