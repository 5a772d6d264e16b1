// Copyright The mtpenergy Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace mtpenergy::support {

/// Shortest decimal text that parses back to exactly the same double, always
/// with a decimal point or exponent (e.g. "50.0", not "50"). Injection and
/// reports rely on this so written values survive a round trip unchanged.
std::string format_double(double v);

/// Strict full-string parse. `context` prefixes the error message.
double parse_double(std::string_view text, const std::string& context);
std::int64_t parse_int(std::string_view text, const std::string& context);

}  // namespace mtpenergy::support
