// Copyright The mtpenergy Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

namespace mtpenergy::support {

/// Generator of canonical lowercase UUIDv4 text. Seeded generation exists so
/// injected manifests can be reproduced bit for bit.
class GuidGenerator {
public:
    /// Unseeded: random GUIDs from the OS entropy source.
    GuidGenerator();
    /// Seeded: the same seed always yields the same GUID sequence.
    explicit GuidGenerator(std::uint64_t seed);

    std::string next();

private:
    std::mt19937_64 rng_;
};

/// True for canonical lowercase UUID text (8-4-4-4-12 hex digits).
bool is_canonical_guid(std::string_view s);

}  // namespace mtpenergy::support
