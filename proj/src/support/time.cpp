// Copyright The mtpenergy Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mtpenergy/support/time.hpp"

#include <cstdio>

#include "mtpenergy/errors.hpp"

namespace mtpenergy::support {

namespace {

// Civil <-> day-count conversions for the proleptic Gregorian calendar
// (Hinnant's algorithms); day 0 is 1970-01-01.
std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return static_cast<std::int64_t>(era) * 146097 + static_cast<std::int64_t>(doe) - 719468;
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
    m = mp < 10 ? mp + 3 : mp - 9;
    y = static_cast<int>(yy + (m <= 2));
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

std::string format_iso8601_ms(EpochMillis t) {
    std::int64_t days = floor_div(t, 86'400'000);
    std::int64_t ms_of_day = t - days * 86'400'000;
    int y;
    unsigned m, d;
    civil_from_days(days, y, m, d);
    unsigned hh = static_cast<unsigned>(ms_of_day / 3'600'000);
    unsigned mm = static_cast<unsigned>(ms_of_day / 60'000 % 60);
    unsigned ss = static_cast<unsigned>(ms_of_day / 1'000 % 60);
    unsigned ms = static_cast<unsigned>(ms_of_day % 1'000);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02u:%02u:%02u.%03uZ", y, m, d, hh, mm, ss, ms);
    return buf;
}

EpochMillis parse_iso8601_ms(std::string_view text) {
    int y;
    unsigned mo, d, hh, mi, ss, ms;
    char z = 0;
    std::string s(text);
    int n = std::sscanf(s.c_str(), "%4d-%2u-%2uT%2u:%2u:%2u.%3u%c", &y, &mo, &d, &hh, &mi, &ss,
                        &ms, &z);
    if (n != 8 || z != 'Z' || s.size() != 24 || mo < 1 || mo > 12 || d < 1 || d > 31 || hh > 23 ||
        mi > 59 || ss > 59)
        throw Error("parse_error", "'" + s + "' is not an ISO-8601 UTC millisecond timestamp");
    return days_from_civil(y, mo, d) * 86'400'000 +
           (static_cast<std::int64_t>(hh) * 3600 + mi * 60 + ss) * 1000 + ms;
}

}  // namespace mtpenergy::support
