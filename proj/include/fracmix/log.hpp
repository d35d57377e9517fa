#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>

// Minimal stderr logger controlled by the FRACMIX_LOG environment variable:
// unset/"warn" -> warnings only, "info" -> progress notes, "debug" -> chatty.

namespace fracmix::log {

enum class level { warn = 0, info = 1, debug = 2 };

inline level threshold() {
    static const level value = [] {
        const char* env = std::getenv("FRACMIX_LOG");
        if (!env) return level::warn;
        if (std::strcmp(env, "debug") == 0 || std::strcmp(env, "2") == 0) return level::debug;
        if (std::strcmp(env, "info") == 0 || std::strcmp(env, "1") == 0) return level::info;
        return level::warn;
    }();
    return value;
}

template <typename... Args>
inline void emit(level lvl, const char* tag, const char* fmt, Args... args) {
    if (static_cast<int>(lvl) > static_cast<int>(threshold())) return;
    std::fprintf(stderr, "[fracmix:%s] ", tag);
    std::fprintf(stderr, fmt, args...);
    std::fputc('\n', stderr);
}

template <typename... Args>
inline void warn(const char* fmt, Args... args) { emit(level::warn, "warn", fmt, args...); }
template <typename... Args>
inline void info(const char* fmt, Args... args) { emit(level::info, "info", fmt, args...); }
template <typename... Args>
inline void debug(const char* fmt, Args... args) { emit(level::debug, "debug", fmt, args...); }

} // namespace fracmix::log
