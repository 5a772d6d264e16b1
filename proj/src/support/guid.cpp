// Copyright The mtpenergy Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mtpenergy/support/guid.hpp"

#include <cstdio>

namespace mtpenergy::support {

GuidGenerator::GuidGenerator() {
    std::random_device rd;
    std::seed_seq seq{rd(), rd(), rd(), rd()};
    rng_.seed(seq);
}

GuidGenerator::GuidGenerator(std::uint64_t seed) : rng_(seed) {}

std::string GuidGenerator::next() {
    std::uint64_t hi = rng_();
    std::uint64_t lo = rng_();
    // RFC 4122 version 4, variant 10.
    hi = (hi & 0xFFFF'FFFF'FFFF'0FFFULL) | 0x0000'0000'0000'4000ULL;
    lo = (lo & 0x3FFF'FFFF'FFFF'FFFFULL) | 0x8000'0000'0000'0000ULL;
    char buf[37];
    std::snprintf(buf, sizeof buf, "%08x-%04x-%04x-%04x-%012llx",
                  static_cast<unsigned>(hi >> 32), static_cast<unsigned>((hi >> 16) & 0xFFFF),
                  static_cast<unsigned>(hi & 0xFFFF), static_cast<unsigned>(lo >> 48),
                  static_cast<unsigned long long>(lo & 0xFFFF'FFFF'FFFFULL));
    return buf;
}

bool is_canonical_guid(std::string_view s) {
    if (s.size() != 36) return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (i == 8 || i == 13 || i == 18 || i == 23) {
            if (c != '-') return false;
        } else if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) {
            return false;
        }
    }
    return true;
}

}  // namespace mtpenergy::support
