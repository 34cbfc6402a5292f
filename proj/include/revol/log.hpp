#pragma once

#include <cstdlib>
#include <iostream>
#include <string>

namespace revol {

// Verbosity is read once from the REVOL_LOG environment variable:
// unset/"" -> silent, "info" -> info, "debug" -> info + debug.
enum class LogLevel { silent = 0, info = 1, debug = 2 };

inline LogLevel log_level() {
    static const LogLevel level = [] {
        const char* v = std::getenv("REVOL_LOG");
        if (!v) return LogLevel::silent;
        const std::string s(v);
        if (s == "debug") return LogLevel::debug;
        if (s == "info") return LogLevel::info;
        return LogLevel::silent;
    }();
    return level;
}

inline void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::info) std::cerr << "[revol] " << msg << '\n';
}

inline void log_debug(const std::string& msg) {
    if (log_level() >= LogLevel::debug) std::cerr << "[revol:debug] " << msg << '\n';
}

}  // namespace revol
