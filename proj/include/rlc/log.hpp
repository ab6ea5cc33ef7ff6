#pragma once

// Minimal stderr logger. Level comes from the RLC_LOG environment variable
// (off, info, debug); default is off.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string_view>

namespace rlc::log {

enum class Level { off = 0, info = 1, debug = 2 };

inline Level level() {
    static const Level lvl = [] {
        const char* env = std::getenv("RLC_LOG");
        if (env == nullptr) return Level::off;
        const std::string_view v(env);
        if (v == "debug") return Level::debug;
        if (v == "info") return Level::info;
        return Level::off;
    }();
    return lvl;
}

template <class... Args>
void write(Level lvl, const Args&... args) {
    if (level() < lvl) return;
    std::ostringstream line;
    line << (lvl == Level::debug ? "[rlc debug] " : "[rlc] ");
    (line << ... << args);
    line << '\n';
    std::cerr << line.str();
}

template <class... Args>
void info(const Args&... args) {
    write(Level::info, args...);
}

template <class... Args>
void debug(const Args&... args) {
    write(Level::debug, args...);
}

}  // namespace rlc::log
