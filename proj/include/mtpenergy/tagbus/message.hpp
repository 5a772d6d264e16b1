// Copyright The mtpenergy Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace mtpenergy::tagbus {

inline constexpr int kProtocolVersion = 1;

/// A tag's value on the wire: numeric for measurements, text for labels and
/// enumerated metadata. Values must be finite; the JSON framing cannot carry
/// NaN or infinities.
using TagValue = std::variant<double, std::string>;

enum class Quality { Good, OutOfRange, Stale };

std::string to_string(Quality q);
Quality quality_from_string(std::string_view s);

struct Hello {
    enum class Role { Client, Server };
    Role role = Role::Client;
    std::string name;
    int proto = kProtocolVersion;

    bool operator==(const Hello&) const = default;
};

struct Browse {
    bool operator==(const Browse&) const = default;
};

struct BrowseItem {
    std::string node;
    std::string guid;
    std::string unit;

    bool operator==(const BrowseItem&) const = default;
};

struct BrowseResult {
    std::vector<BrowseItem> items;

    bool operator==(const BrowseResult&) const = default;
};

struct Read {
    std::vector<std::string> nodes;
    std::int64_t id = 0;  // echoed in the closing Ack; 0 is omitted on the wire

    bool operator==(const Read&) const = default;
};

struct Subscribe {
    std::vector<std::string> nodes;
    std::int64_t interval_ms = 100;

    bool operator==(const Subscribe&) const = default;
};

struct Update {
    std::string node;
    TagValue value = 0.0;
    std::string ts;  // ISO-8601 UTC milliseconds
    Quality quality = Quality::Good;

    bool operator==(const Update&) const = default;
};

struct Reset {
    std::string node;

    bool operator==(const Reset&) const = default;
};

struct Ack {
    std::int64_t id = 0;

    bool operator==(const Ack&) const = default;
};

struct ErrorMsg {
    std::string code;
    std::string msg;

    bool operator==(const ErrorMsg&) const = default;
};

using TagMessage =
    std::variant<Hello, Browse, BrowseResult, Read, Subscribe, Update, Reset, Ack, ErrorMsg>;

/// Encodes to one UTF-8 JSON object terminated by '\n', `op` field first.
std::string encode_message(const TagMessage& msg);

/// Inverse of encode_message. Unknown fields are ignored. Throws
/// Error("malformed_frame") on bad JSON, Error("unknown_op") on an
/// unrecognized op and Error("missing_field") when a required field is
/// absent or mistyped.
TagMessage decode_message(std::string_view line);

}  // namespace mtpenergy::tagbus
