// Copyright The mtpenergy Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mtpenergy/tagbus/message.hpp"

#include <json.hpp>

#include "mtpenergy/errors.hpp"

namespace mtpenergy::tagbus {

using ojson = nlohmann::ordered_json;

std::string to_string(Quality q) {
    switch (q) {
        case Quality::Good: return "good";
        case Quality::OutOfRange: return "out_of_range";
        case Quality::Stale: return "stale";
    }
    return "good";
}

Quality quality_from_string(std::string_view s) {
    if (s == "good") return Quality::Good;
    if (s == "out_of_range") return Quality::OutOfRange;
    if (s == "stale") return Quality::Stale;
    throw Error("missing_field", "'" + std::string(s) + "' is not a quality literal");
}

namespace {

ojson value_to_json(const TagValue& v) {
    if (const double* d = std::get_if<double>(&v)) return *d;
    return std::get<std::string>(v);
}

TagValue value_from_json(const ojson& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return j.get<std::string>();
    throw Error("missing_field", "field 'value' must be a number or a string");
}

struct Encoder {
    std::string operator()(const Hello& m) const {
        ojson j{{"op", "hello"}};
        j[m.role == Hello::Role::Client ? "client" : "server"] = m.name;
        j["proto"] = m.proto;
        return j.dump();
    }
    std::string operator()(const Browse&) const { return ojson{{"op", "browse"}}.dump(); }
    std::string operator()(const BrowseResult& m) const {
        ojson items = ojson::array();
        for (const auto& it : m.items)
            items.push_back(ojson{{"node", it.node}, {"guid", it.guid}, {"unit", it.unit}});
        return ojson{{"op", "browse_result"}, {"items", items}}.dump();
    }
    std::string operator()(const Read& m) const {
        ojson j{{"op", "read"}, {"nodes", m.nodes}};
        if (m.id != 0) j["id"] = m.id;
        return j.dump();
    }
    std::string operator()(const Subscribe& m) const {
        return ojson{{"op", "subscribe"}, {"nodes", m.nodes}, {"interval_ms", m.interval_ms}}
            .dump();
    }
    std::string operator()(const Update& m) const {
        return ojson{{"op", "update"},
                     {"node", m.node},
                     {"value", value_to_json(m.value)},
                     {"ts", m.ts},
                     {"q", to_string(m.quality)}}
            .dump();
    }
    std::string operator()(const Reset& m) const {
        return ojson{{"op", "reset"}, {"node", m.node}}.dump();
    }
    std::string operator()(const Ack& m) const { return ojson{{"op", "ack"}, {"id", m.id}}.dump(); }
    std::string operator()(const ErrorMsg& m) const {
        return ojson{{"op", "error"}, {"code", m.code}, {"msg", m.msg}}.dump();
    }
};

const ojson& require(const ojson& j, const char* field) {
    auto it = j.find(field);
    if (it == j.end())
        throw Error("missing_field", std::string("frame is missing field '") + field + "'");
    return *it;
}

std::string require_string(const ojson& j, const char* field) {
    const ojson& v = require(j, field);
    if (!v.is_string())
        throw Error("missing_field", std::string("field '") + field + "' must be a string");
    return v.get<std::string>();
}

std::int64_t require_int(const ojson& j, const char* field) {
    const ojson& v = require(j, field);
    if (!v.is_number_integer())
        throw Error("missing_field", std::string("field '") + field + "' must be an integer");
    return v.get<std::int64_t>();
}

std::vector<std::string> require_string_array(const ojson& j, const char* field) {
    const ojson& v = require(j, field);
    if (!v.is_array())
        throw Error("missing_field", std::string("field '") + field + "' must be an array");
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string())
            throw Error("missing_field",
                        std::string("field '") + field + "' must contain only strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

}  // namespace

std::string encode_message(const TagMessage& msg) {
    return std::visit(Encoder{}, msg) + "\n";
}

TagMessage decode_message(std::string_view line) {
    ojson j = ojson::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw Error("malformed_frame", "frame is not a JSON object");

    std::string op = require_string(j, "op");
    if (op == "hello") {
        Hello m;
        if (j.contains("server")) {
            m.role = Hello::Role::Server;
            m.name = require_string(j, "server");
        } else {
            m.role = Hello::Role::Client;
            m.name = require_string(j, "client");
        }
        m.proto = static_cast<int>(require_int(j, "proto"));
        return m;
    }
    if (op == "browse") return Browse{};
    if (op == "browse_result") {
        BrowseResult m;
        const ojson& items = require(j, "items");
        if (!items.is_array()) throw Error("missing_field", "field 'items' must be an array");
        for (const auto& it : items) {
            if (!it.is_object()) throw Error("missing_field", "browse items must be objects");
            m.items.push_back(
                {require_string(it, "node"), require_string(it, "guid"), require_string(it, "unit")});
        }
        return m;
    }
    if (op == "read") {
        Read m;
        m.nodes = require_string_array(j, "nodes");
        if (j.contains("id")) m.id = require_int(j, "id");
        return m;
    }
    if (op == "subscribe") {
        Subscribe m;
        m.nodes = require_string_array(j, "nodes");
        if (j.contains("interval_ms")) m.interval_ms = require_int(j, "interval_ms");
        return m;
    }
    if (op == "update") {
        Update m;
        m.node = require_string(j, "node");
        m.value = value_from_json(require(j, "value"));
        m.ts = require_string(j, "ts");
        m.quality = quality_from_string(require_string(j, "q"));
        return m;
    }
    if (op == "reset") return Reset{require_string(j, "node")};
    if (op == "ack") {
        Ack m;
        if (j.contains("id")) m.id = require_int(j, "id");
        return m;
    }
    if (op == "error") return ErrorMsg{require_string(j, "code"), require_string(j, "msg")};
    throw Error("unknown_op", "unknown op '" + op + "'");
}

}  // namespace mtpenergy::tagbus
