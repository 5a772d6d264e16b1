// Copyright The mtpenergy Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace mtpenergy::support {

/// Milliseconds since the Unix epoch, UTC. Wide enough for any plausible
/// simulated horizon.
using EpochMillis = std::int64_t;

/// Formats as ISO-8601 with milliseconds: 2025-01-01T00:00:00.000Z
std::string format_iso8601_ms(EpochMillis t);

/// Parses the exact format produced by format_iso8601_ms. Throws
/// Error("parse_error") on anything else.
EpochMillis parse_iso8601_ms(std::string_view text);

}  // namespace mtpenergy::support
