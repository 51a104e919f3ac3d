#pragma once

#include <chrono>
#include <cstdio>
#include <ctime>
#include <string>
#include <vector>

namespace pyrage {

/// One structured log line: `ISO8601 level key=value ...` to stdout and,
/// when a sink file is set, to that file as well.
inline FILE*& log_sink() {
    static FILE* sink = nullptr;
    return sink;
}

inline void log_line(const char* level, const std::vector<std::pair<std::string, std::string>>& kv) {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char stamp[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    std::string line = std::string(stamp) + " " + level;
    for (const auto& [k, v] : kv) line += " " + k + "=" + v;
    line += "\n";
    std::fputs(line.c_str(), stdout);
    std::fflush(stdout);
    if (log_sink()) {
        std::fputs(line.c_str(), log_sink());
        std::fflush(log_sink());
    }
}

}  // namespace pyrage
