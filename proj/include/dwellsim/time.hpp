#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include "dwellsim/error.hpp"

namespace dwellsim {

// Durations are fractional hours throughout; wall-clock instants are whole
// seconds since the Unix epoch, UTC. Second resolution keeps ISO-8601
// round-trips byte-stable.
using Hours = double;

struct DateTime {
    std::int64_t sec = 0;

    friend auto operator<=>(const DateTime&, const DateTime&) = default;

    DateTime operator+(Hours h) const {
        return DateTime{sec + static_cast<std::int64_t>(h * 3600.0)};
    }
};

inline Hours hours_between(DateTime from, DateTime to) {
    return static_cast<double>(to.sec - from.sec) / 3600.0;
}

inline double seconds_between(DateTime from, DateTime to) {
    return static_cast<double>(to.sec - from.sec);
}

namespace detail {

// Civil-calendar conversions (proleptic Gregorian), valid far beyond any
// timestamp this library will see.
inline std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

inline void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y = static_cast<int>(yr + (m <= 2));
}

}  // namespace detail

inline DateTime make_datetime(int y, unsigned mo, unsigned d, unsigned h = 0,
                                                            unsigned mi = 0, unsigned s = 0) {
    return DateTime{detail::days_from_civil(y, mo, d) * 86400 +
                                    static_cast<std::int64_t>(h) * 3600 + mi * 60 + s};
}

// Day index since the epoch; the civil date the instant falls on.
inline std::int64_t day_index(DateTime t) {
    std::int64_t d = t.sec / 86400;
    if (t.sec % 86400 < 0) --d;
    return d;
}

// 0 = Monday ... 6 = Sunday. 1970-01-01 was a Thursday.
inline int weekday_index(DateTime t) {
    return static_cast<int>(((day_index(t) % 7) + 7 + 3) % 7);
}

inline const char* weekday_name(DateTime t) {
    static const char* kNames[7] = {"Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"};
    return kNames[weekday_index(t)];
}

inline std::string format_iso8601(DateTime t) {
    int y;
    unsigned mo, d;
    detail::civil_from_days(day_index(t), y, mo, d);
    std::int64_t rem = t.sec - day_index(t) * 86400;
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lldZ", y, mo, d,
                                static_cast<long long>(rem / 3600), static_cast<long long>((rem / 60) % 60),
                                static_cast<long long>(rem % 60));
    return buf;
}

inline std::string format_iso_date(std::int64_t day) {
    int y;
    unsigned mo, d;
    detail::civil_from_days(day, y, mo, d);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", y, mo, d);
    return buf;
}

inline std::string format_iso_date(DateTime t) { return format_iso_date(day_index(t)); }

// Accepts YYYY-MM-DD[THH:MM[:SS]][Z]; everything is UTC.
inline DateTime parse_iso8601(std::string_view s) {
    auto bad = [&] { throw SchemaError("bad timestamp: " + std::string(s)); };
    auto digit = [&](size_t i) -> int {
        if (i >= s.size() || s[i] < '0' || s[i] > '9') bad();
        return s[i] - '0';
    };
    auto num2 = [&](size_t i) { return digit(i) * 10 + digit(i + 1); };
    if (s.size() < 10) bad();
    const int y = digit(0) * 1000 + digit(1) * 100 + digit(2) * 10 + digit(3);
    if (s[4] != '-' || s[7] != '-') bad();
    const int mo = num2(5), d = num2(8);
    if (mo < 1 || mo > 12 || d < 1 || d > 31) bad();
    int h = 0, mi = 0, sec = 0;
    if (s.size() > 10) {
        if (s[10] != 'T' && s[10] != ' ') bad();
        if (s.size() < 16 || s[13] != ':') bad();
        h = num2(11);
        mi = num2(14);
        if (s.size() >= 19 && s[16] == ':') sec = num2(17);
        if (h > 23 || mi > 59 || sec > 60) bad();
    }
    return make_datetime(y, static_cast<unsigned>(mo), static_cast<unsigned>(d),
                                              static_cast<unsigned>(h), static_cast<unsigned>(mi),
                                              static_cast<unsigned>(sec));
}

}  // namespace dwellsim
