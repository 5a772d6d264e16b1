// Copyright The mtpenergy Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mtpenergy::enrg {

/// Engineering unit of a measured value: a numeric unit code plus the text
/// used for display and reports.
struct EngineeringUnit {
    int unit_id = 0;
    std::string display;

    bool operator==(const EngineeringUnit&) const = default;
};

/// Customary meter accuracy classes (percentage of full scale). Unknown
/// covers meters without a declared class.
enum class AccuracyClass { C0_1, C0_2, C0_5, C1, C2, C3, Unknown };

/// Whether the declared accuracy refers to a single reading or to a series
/// of measurements. Carried as metadata; it does not change any arithmetic.
enum class AccuracyDomain { CurrentValue, MeasurementSeries };

/// Measured medium.
enum class Resource { Electricity, Gas, Coal, Water, Steam, CompressedAir, Heat, Other };

/// Numeric identifier decodable through a MidRegistry. Code 0 is reserved
/// for "unassigned".
struct MeasurementId {
    std::uint32_t code = 0;

    bool operator==(const MeasurementId&) const = default;
};

/// One energy measurement's semantic record: the measuring point, its value
/// with unit and scale, accuracy statement, identification, counter history
/// and measured resource.
struct EnRgView {
    std::string tag_name;
    std::string tag_description;
    double v = 0.0;
    EngineeringUnit v_unit;
    double v_scl_min = 0.0;
    double v_scl_max = 0.0;
    AccuracyClass acc_c = AccuracyClass::Unknown;
    AccuracyDomain acc_d = AccuracyDomain::CurrentValue;
    double acc_r = 0.0;      // full-scale value, same unit as v
    MeasurementId mid;
    double vbr = 0.0;        // value before last counter reset, same unit as v
    std::int64_t mp = 0;     // measurement period, milliseconds
    Resource res = Resource::Other;

    bool operator==(const EnRgView&) const = default;
};

/// The attribute names of an EnRGView data object, in canonical order.
inline constexpr std::array<std::string_view, 13> kViewAttributeNames = {
    "TagName", "TagDescription", "V",   "VUnit", "VSclMin", "VSclMax", "AccC",
    "AccD",    "AccR",           "MID", "VbR",   "MP",      "Res",
};

/// The subset bound to live tags. TagName and TagDescription stay static
/// engineering metadata.
inline constexpr std::array<std::string_view, 11> kExposedAttributeNames = {
    "V", "VUnit", "VSclMin", "VSclMax", "AccC", "AccD", "AccR", "MID", "VbR", "MP", "Res",
};

double accuracy_percentage(AccuracyClass c);  // throws Error("unknown_accuracy") for Unknown

std::string to_string(AccuracyClass c);
std::string to_string(AccuracyDomain d);
std::string to_string(Resource r);
AccuracyClass accuracy_class_from_string(std::string_view s);
AccuracyDomain accuracy_domain_from_string(std::string_view s);
Resource resource_from_string(std::string_view s);

struct Violation {
    std::string code;
    std::string field;
    std::string message;

    bool operator==(const Violation&) const = default;
};

class MidRegistry;  // see mid_registry.hpp

/// Checks the record's invariants and that the value sits inside its scale.
/// Violations are data, not errors; an empty list means the record is sound.
/// The vbr >= 0 rule applies to counter-type measurements, which requires a
/// registry to decide; without one the check is skipped.
std::vector<Violation> validate_enrg_view(const EnRgView& view,
                                          const MidRegistry* mids = nullptr);

/// The interval the declared accuracy admits around the current value:
/// half-width = percentage(acc_c)/100 * acc_r, referenced to full scale
/// regardless of acc_d. Throws Error("unknown_accuracy") when the class is
/// Unknown.
std::pair<double, double> accuracy_interval(const EnRgView& view);

}  // namespace mtpenergy::enrg
