// Copyright The mtpenergy Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mtpenergy/enrg/view.hpp"

#include "mtpenergy/enrg/mid_registry.hpp"
#include "mtpenergy/errors.hpp"

namespace mtpenergy::enrg {

double accuracy_percentage(AccuracyClass c) {
    switch (c) {
        case AccuracyClass::C0_1: return 0.1;
        case AccuracyClass::C0_2: return 0.2;
        case AccuracyClass::C0_5: return 0.5;
        case AccuracyClass::C1: return 1.0;
        case AccuracyClass::C2: return 2.0;
        case AccuracyClass::C3: return 3.0;
        case AccuracyClass::Unknown: break;
    }
    throw Error("unknown_accuracy", "accuracy class is unknown, no percentage defined");
}

std::string to_string(AccuracyClass c) {
    switch (c) {
        case AccuracyClass::C0_1: return "0.1";
        case AccuracyClass::C0_2: return "0.2";
        case AccuracyClass::C0_5: return "0.5";
        case AccuracyClass::C1: return "1";
        case AccuracyClass::C2: return "2";
        case AccuracyClass::C3: return "3";
        case AccuracyClass::Unknown: return "unknown";
    }
    return "unknown";
}

AccuracyClass accuracy_class_from_string(std::string_view s) {
    if (s == "0.1") return AccuracyClass::C0_1;
    if (s == "0.2") return AccuracyClass::C0_2;
    if (s == "0.5") return AccuracyClass::C0_5;
    if (s == "1") return AccuracyClass::C1;
    if (s == "2") return AccuracyClass::C2;
    if (s == "3") return AccuracyClass::C3;
    if (s == "unknown") return AccuracyClass::Unknown;
    throw Error("parse_error", "'" + std::string(s) + "' is not an accuracy class");
}

std::string to_string(AccuracyDomain d) {
    return d == AccuracyDomain::CurrentValue ? "current_value" : "measurement_series";
}

AccuracyDomain accuracy_domain_from_string(std::string_view s) {
    if (s == "current_value") return AccuracyDomain::CurrentValue;
    if (s == "measurement_series") return AccuracyDomain::MeasurementSeries;
    throw Error("parse_error", "'" + std::string(s) + "' is not an accuracy domain");
}

std::string to_string(Resource r) {
    switch (r) {
        case Resource::Electricity: return "electricity";
        case Resource::Gas: return "gas";
        case Resource::Coal: return "coal";
        case Resource::Water: return "water";
        case Resource::Steam: return "steam";
        case Resource::CompressedAir: return "compressed_air";
        case Resource::Heat: return "heat";
        case Resource::Other: return "other";
    }
    return "other";
}

Resource resource_from_string(std::string_view s) {
    if (s == "electricity") return Resource::Electricity;
    if (s == "gas") return Resource::Gas;
    if (s == "coal") return Resource::Coal;
    if (s == "water") return Resource::Water;
    if (s == "steam") return Resource::Steam;
    if (s == "compressed_air") return Resource::CompressedAir;
    if (s == "heat") return Resource::Heat;
    if (s == "other") return Resource::Other;
    throw Error("parse_error", "'" + std::string(s) + "' is not a resource");
}

std::vector<Violation> validate_enrg_view(const EnRgView& view, const MidRegistry* mids) {
    std::vector<Violation> out;
    auto add = [&](const char* code, const char* field, std::string message) {
        out.push_back({code, field, std::move(message)});
    };

    if (view.tag_name.empty()) add("empty_tag_name", "tag_name", "tag name must not be empty");
    if (view.v_unit.display.empty())
        add("empty_unit_display", "v_unit", "engineering unit display must not be empty");
    if (!(view.v_scl_min <= view.v_scl_max))
        add("scale_inverted", "v_scl_min",
            "scale minimum " + std::to_string(view.v_scl_min) + " exceeds maximum " +
                std::to_string(view.v_scl_max));
    else if (view.v < view.v_scl_min || view.v > view.v_scl_max)
        add("value_out_of_scale", "v",
            "value " + std::to_string(view.v) + " outside scale [" +
                std::to_string(view.v_scl_min) + ", " + std::to_string(view.v_scl_max) + "]");
    if (view.acc_r < 0) add("negative_accuracy_range", "acc_r", "full-scale value must be >= 0");
    if (view.mp < 0) add("negative_period", "mp", "measurement period must be >= 0");
    if (mids && view.vbr < 0) {
        const MidEntry* entry = mids->find(view.mid);
        if (entry && entry->quantity_class == QuantityClass::Counter)
            add("negative_vbr", "vbr", "counter value before reset must be >= 0");
    }
    return out;
}

std::pair<double, double> accuracy_interval(const EnRgView& view) {
    double half_width = accuracy_percentage(view.acc_c) / 100.0 * view.acc_r;
    return {view.v - half_width, view.v + half_width};
}

}  // namespace mtpenergy::enrg
