#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace pathloss {

namespace detail {

// Days since 1970-01-01 for a proleptic Gregorian date (Hinnant's algorithm).
inline std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

inline void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m,
                            unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y += m <= 2;
}

inline bool parse_fixed_uint(std::string_view s, std::size_t pos,
                             std::size_t len, unsigned& out) {
    unsigned v = 0;
    if (pos + len > s.size()) return false;
    for (std::size_t i = 0; i < len; ++i) {
        const char c = s[pos + i];
        if (c < '0' || c > '9') return false;
        v = v * 10 + static_cast<unsigned>(c - '0');
    }
    out = v;
    return true;
}

}  // namespace detail

// Parses "YYYY-MM-DDTHH:MM:SS" with an optional fractional-second part
// (truncated) and an optional "Z" or "+00:00" suffix. Returns UTC epoch
// seconds, or nullopt if the text is not a valid UTC instant.
inline std::optional<std::int64_t> parse_iso8601_utc(std::string_view s) {
    unsigned year, month, day, hour, minute, second;
    if (!detail::parse_fixed_uint(s, 0, 4, year)) return std::nullopt;
    if (s.size() < 19 || s[4] != '-' || s[7] != '-' ||
        (s[10] != 'T' && s[10] != ' ') || s[13] != ':' || s[16] != ':') {
        return std::nullopt;
    }
    if (!detail::parse_fixed_uint(s, 5, 2, month) ||
        !detail::parse_fixed_uint(s, 8, 2, day) ||
        !detail::parse_fixed_uint(s, 11, 2, hour) ||
        !detail::parse_fixed_uint(s, 14, 2, minute) ||
        !detail::parse_fixed_uint(s, 17, 2, second)) {
        return std::nullopt;
    }
    std::size_t pos = 19;
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        const std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start) return std::nullopt;
    }
    if (pos < s.size()) {
        const std::string_view rest = s.substr(pos);
        if (rest != "Z" && rest != "+00:00" && rest != "+0000") {
            return std::nullopt;
        }
    }
    if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 ||
        minute > 59 || second > 60) {
        return std::nullopt;
    }
    return detail::days_from_civil(year, month, day) * 86400 +
           hour * 3600 + minute * 60 + second;
}

// Formats UTC epoch seconds as "YYYY-MM-DDTHH:MM:SSZ".
inline std::string format_iso8601_utc(std::int64_t epoch_seconds) {
    std::int64_t days = epoch_seconds / 86400;
    std::int64_t rem = epoch_seconds % 86400;
    if (rem < 0) {
        rem += 86400;
        --days;
    }
    std::int64_t year;
    unsigned month, day;
    detail::civil_from_days(days, year, month, day);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                  static_cast<long long>(year), month, day,
                  static_cast<long long>(rem / 3600),
                  static_cast<long long>((rem % 3600) / 60),
                  static_cast<long long>(rem % 60));
    return std::string(buf);
}

}  // namespace pathloss
