// Copyright The mtpenergy Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "mtpenergy/enrg/view.hpp"

namespace mtpenergy::enrg {

enum class QuantityClass { Instantaneous, Counter };

std::string to_string(QuantityClass q);
QuantityClass quantity_class_from_string(std::string_view s);

/// What a measurement ID decodes to.
struct MidEntry {
    std::string kind;  // e.g. "Voltage L1-N"
    QuantityClass quantity_class = QuantityClass::Instantaneous;
    EngineeringUnit canonical_unit;

    bool operator==(const MidEntry&) const = default;
};

/// Site-local measurement-ID table. Loaded from a line-oriented file:
/// `code;kind;quantity_class;unit_display;unit_id`, `#` starts a comment.
class MidRegistry {
public:
    /// Parses registry text. Throws Error("parse_error") on bad lines and
    /// Error("duplicate_code") when a code occurs twice.
    static MidRegistry load(std::string_view text, const std::string& source_name = "");
    static MidRegistry load_file(const std::string& path);

    /// The registry built in as a fallback when no file is configured.
    static const MidRegistry& builtin_default();

    /// Decodes a measurement ID. Throws Error("unassigned_mid") for code 0
    /// and Error("unknown_mid") for codes not in the table.
    const MidEntry& decode(MeasurementId mid) const;

    const MidEntry* find(MeasurementId mid) const;
    bool is_counter(MeasurementId mid) const;
    std::size_t size() const { return entries_.size(); }
    const std::map<std::uint32_t, MidEntry>& entries() const { return entries_; }

private:
    std::map<std::uint32_t, MidEntry> entries_;
};

}  // namespace mtpenergy::enrg
