// Copyright The mtpenergy Authors.
// SPDX-License-Identifier: Apache-2.0

#include <fstream>

#include "mtpenergy/caex/io.hpp"
#include "mtpenergy/errors.hpp"

namespace mtpenergy::caex {

namespace {

void escape_text(const std::string& in, std::string& out) {
    for (char c : in) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
}

void escape_attribute(const std::string& in, std::string& out) {
    for (char c : in) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\n': out += "&#10;"; break;
            case '\t': out += "&#9;"; break;
            case '\r': out += "&#13;"; break;
            default: out += c;
        }
    }
}

void indent(std::string& out, int depth) {
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
}

// depth < 0 writes compact (no indentation or newlines). Mixed content must
// stay compact: pretty-printing would leak formatting whitespace into the
// re-parsed text and serialize would no longer be a fixed point.
void write_node(const Element& e, std::string& out, int depth) {
    bool compact = depth < 0;
    if (!compact) indent(out, depth);
    switch (e.kind) {
        case NodeKind::Comment:
            out += "<!--";
            out += e.text;  // raw, as parsed
            out += "-->";
            if (!compact) out += '\n';
            return;
        case NodeKind::ProcInstruction:
            out += "<?";
            out += e.text;
            out += "?>";
            if (!compact) out += '\n';
            return;
        case NodeKind::Element:
            break;
    }

    out += '<';
    out += e.name;
    for (const auto& [k, v] : e.attributes) {
        out += ' ';
        out += k;
        out += "=\"";
        escape_attribute(v, out);
        out += '"';
    }

    if (e.children.empty() && e.text.empty()) {
        out += "/>";
        if (!compact) out += '\n';
        return;
    }
    if (e.children.empty()) {
        out += '>';
        escape_text(e.text, out);
        out += "</";
        out += e.name;
        out += '>';
        if (!compact) out += '\n';
        return;
    }

    bool mixed = !e.text.empty();
    out += '>';
    if (mixed) escape_text(e.text, out);
    if (!compact && !mixed) out += '\n';
    for (const auto& c : e.children) write_node(c, out, (compact || mixed) ? -1 : depth + 1);
    if (!compact && !mixed) indent(out, depth);
    out += "</";
    out += e.name;
    out += '>';
    if (!compact) out += '\n';
}

}  // namespace

std::string serialize(const Document& doc) {
    std::string out = "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n";
    for (const auto& n : doc.prolog) write_node(n, out, 0);
    write_node(doc.root, out, 0);
    for (const auto& n : doc.epilog) write_node(n, out, 0);
    return out;
}

std::string serialize_element(const Element& elem) {
    std::string out;
    write_node(elem, out, 0);
    return out;
}

void save_file(const Document& doc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io_error", "cannot open '" + path + "' for writing");
    out << serialize(doc);
    if (!out) throw Error("io_error", "write to '" + path + "' failed");
}

}  // namespace mtpenergy::caex
