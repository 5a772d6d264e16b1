// Copyright The mtpenergy Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mtpenergy/enrg/mid_registry.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "mtpenergy/errors.hpp"

namespace mtpenergy::enrg {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

long parse_int(const std::string& text, const std::string& context) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw Error("parse_error", context + ": '" + text + "' is not an integer");
    return value;
}

}  // namespace

std::string to_string(QuantityClass q) {
    return q == QuantityClass::Instantaneous ? "Instantaneous" : "Counter";
}

QuantityClass quantity_class_from_string(std::string_view s) {
    if (s == "Instantaneous") return QuantityClass::Instantaneous;
    if (s == "Counter") return QuantityClass::Counter;
    throw Error("parse_error", "'" + std::string(s) + "' is not a quantity class");
}

MidRegistry MidRegistry::load(std::string_view text, const std::string& source_name) {
    MidRegistry reg;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where =
            (source_name.empty() ? "mid registry" : source_name) + " line " + std::to_string(lineno);
        std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;

        std::vector<std::string> fields;
        std::size_t start = 0;
        while (start <= body.size()) {
            std::size_t semi = body.find(';', start);
            if (semi == std::string::npos) semi = body.size();
            fields.push_back(trim(std::string_view(body).substr(start, semi - start)));
            start = semi + 1;
        }
        if (fields.size() != 5)
            throw Error("parse_error", where + ": expected 5 ';'-separated fields, got " +
                                           std::to_string(fields.size()));

        long code = parse_int(fields[0], where);
        if (code <= 0) throw Error("parse_error", where + ": code must be > 0");
        if (fields[1].empty()) throw Error("parse_error", where + ": kind must not be empty");

        MidEntry entry;
        entry.kind = fields[1];
        entry.quantity_class = quantity_class_from_string(fields[2]);
        entry.canonical_unit.display = fields[3];
        entry.canonical_unit.unit_id = static_cast<int>(parse_int(fields[4], where));
        if (entry.canonical_unit.display.empty())
            throw Error("parse_error", where + ": unit display must not be empty");

        auto [it, inserted] = reg.entries_.emplace(static_cast<std::uint32_t>(code), entry);
        if (!inserted)
            throw Error("duplicate_code", where + ": code " + fields[0] + " already defined");
    }
    return reg;
}

MidRegistry MidRegistry::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io_error", "cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load(buf.str(), path);
}

const MidRegistry& MidRegistry::builtin_default() {
    static const MidRegistry reg = load(
        "1001;Voltage L1-N;Instantaneous;V;5462\n"
        "1002;Voltage L1-L2;Instantaneous;V;5462\n"
        "2001;Current L1;Instantaneous;A;5466\n"
        "3001;Active Power total;Instantaneous;W;5487\n"
        "4001;Active Energy import counter;Counter;Wh;5471\n"
        "5001;Heat quantity counter;Counter;kWh;5472\n",
        "<builtin>");
    return reg;
}

const MidEntry& MidRegistry::decode(MeasurementId mid) const {
    if (mid.code == 0)
        throw Error("unassigned_mid", "measurement ID 0 is reserved for 'unassigned'");
    const MidEntry* entry = find(mid);
    if (!entry)
        throw Error("unknown_mid", "measurement ID " + std::to_string(mid.code) +
                                       " is not in the registry");
    return *entry;
}

const MidEntry* MidRegistry::find(MeasurementId mid) const {
    auto it = entries_.find(mid.code);
    return it == entries_.end() ? nullptr : &it->second;
}

bool MidRegistry::is_counter(MeasurementId mid) const {
    const MidEntry* e = find(mid);
    return e && e->quantity_class == QuantityClass::Counter;
}

}  // namespace mtpenergy::enrg
