#include "chatmine/time.hpp"

#include <cctype>
#include <cstdio>

namespace chatmine {

namespace {

// Howard Hinnant's civil-date algorithms.
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2) / 5 +
                         static_cast<unsigned>(d) - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y = static_cast<int>(yy + (m <= 2));
}

bool read_digits(const std::string& s, std::size_t pos, int count, int& out) {
    out = 0;
    for (int i = 0; i < count; ++i) {
        if (pos + i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos + i])))
            return false;
        out = out * 10 + (s[pos + i] - '0');
    }
    return true;
}

} // namespace

std::optional<TimeMs> parse_rfc3339(const std::string& s) {
    int year, month, day, hour, minute, second;
    if (!read_digits(s, 0, 4, year)) return std::nullopt;
    if (s.size() < 19 || s[4] != '-' || s[7] != '-') return std::nullopt;
    if (!read_digits(s, 5, 2, month) || !read_digits(s, 8, 2, day)) return std::nullopt;
    if (s[10] != 'T' && s[10] != 't' && s[10] != ' ') return std::nullopt;
    if (!read_digits(s, 11, 2, hour) || s[13] != ':' || !read_digits(s, 14, 2, minute) ||
        s[16] != ':' || !read_digits(s, 17, 2, second))
        return std::nullopt;
    if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || minute > 59 ||
        second > 60)
        return std::nullopt;

    std::size_t pos = 19;
    int millis = 0;
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        int scale = 100;
        bool any = false;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            if (scale > 0) {
                millis += (s[pos] - '0') * scale;
                scale /= 10;
            }
            ++pos;
            any = true;
        }
        if (!any) return std::nullopt;
    }

    std::int64_t offset_min = 0;
    if (pos >= s.size()) return std::nullopt;
    if (s[pos] == 'Z' || s[pos] == 'z') {
        ++pos;
    } else if (s[pos] == '+' || s[pos] == '-') {
        const bool neg = s[pos] == '-';
        int oh, om;
        if (!read_digits(s, pos + 1, 2, oh) || pos + 3 >= s.size() || s[pos + 3] != ':' ||
            !read_digits(s, pos + 4, 2, om))
            return std::nullopt;
        offset_min = oh * 60 + om;
        if (neg) offset_min = -offset_min;
        pos += 6;
    } else {
        return std::nullopt;
    }
    if (pos != s.size()) return std::nullopt;

    const std::int64_t days = days_from_civil(year, month, day);
    std::int64_t t = ((days * 24 + hour) * 60 + minute) * 60 + second;
    t -= offset_min * 60;
    return t * 1000 + millis;
}

std::string format_rfc3339(TimeMs t) {
    std::int64_t ms = t % 1000;
    std::int64_t secs = t / 1000;
    if (ms < 0) {
        ms += 1000;
        secs -= 1;
    }
    std::int64_t days = secs / 86400;
    std::int64_t sod = secs % 86400;
    if (sod < 0) {
        sod += 86400;
        days -= 1;
    }
    int year;
    unsigned month, day;
    civil_from_days(days, year, month, day);
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02d.%03dZ", year, month, day,
                  static_cast<int>(sod / 3600), static_cast<int>((sod % 3600) / 60),
                  static_cast<int>(sod % 60), static_cast<int>(ms));
    return buf;
}

} // namespace chatmine
