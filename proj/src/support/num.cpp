// Copyright The mtpenergy Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mtpenergy/support/num.hpp"

#include <charconv>

#include <json.hpp>

#include "mtpenergy/errors.hpp"

namespace mtpenergy::support {

std::string format_double(double v) {
    // nlohmann emits the shortest round-trip form and keeps a trailing ".0"
    // on integral values.
    return nlohmann::json(v).dump();
}

double parse_double(std::string_view text, const std::string& context) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw Error("parse_error", context + ": '" + std::string(text) + "' is not a number");
    return value;
}

std::int64_t parse_int(std::string_view text, const std::string& context) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw Error("parse_error", context + ": '" + std::string(text) + "' is not an integer");
    return value;
}

}  // namespace mtpenergy::support
