// Copyright The mtpenergy Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mtpenergy/caex/document.hpp"

#include <algorithm>

#include "mtpenergy/errors.hpp"

namespace mtpenergy::caex {

const std::string* Element::attribute(std::string_view key) const {
    for (const auto& [k, v] : attributes) {
        if (k == key) return &v;
    }
    return nullptr;
}

void Element::set_attribute(std::string_view key, std::string_view value) {
    for (auto& [k, v] : attributes) {
        if (k == key) {
            v = std::string(value);
            return;
        }
    }
    attributes.emplace_back(std::string(key), std::string(value));
}

Element* Element::child_by_tag(std::string_view tag) {
    for (auto& c : children) {
        if (c.is_element() && c.name == tag) return &c;
    }
    return nullptr;
}

const Element* Element::child_by_tag(std::string_view tag) const {
    return const_cast<Element*>(this)->child_by_tag(tag);
}

Element* Element::child_by_name_attr(std::string_view name_attr) {
    for (auto& c : children) {
        if (!c.is_element()) continue;
        const std::string* n = c.attribute("Name");
        if (n && *n == name_attr) return &c;
    }
    return nullptr;
}

const Element* Element::child_by_name_attr(std::string_view name_attr) const {
    return const_cast<Element*>(this)->child_by_name_attr(name_attr);
}

Element Element::comment(std::string content) {
    Element e;
    e.kind = NodeKind::Comment;
    e.text = std::move(content);
    return e;
}

Element Element::make(std::string tag) {
    Element e;
    e.name = std::move(tag);
    return e;
}

ElementPath::ElementPath(std::vector<std::string> segs) : segments(std::move(segs)) {
    if (segments.empty()) throw Error("bad_path", "element path must not be empty");
    for (const auto& s : segments) {
        if (s.empty() || s.find('/') != std::string::npos)
            throw Error("bad_path", "path segment '" + s + "' is invalid");
    }
}

ElementPath ElementPath::parse(std::string_view text) {
    std::vector<std::string> segs;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t slash = text.find('/', start);
        if (slash == std::string_view::npos) slash = text.size();
        segs.emplace_back(text.substr(start, slash - start));
        start = slash + 1;
    }
    return ElementPath(std::move(segs));
}

std::string ElementPath::str() const {
    std::string out;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (i) out += '/';
        out += segments[i];
    }
    return out;
}

namespace {

const Element* resolve_segment(const Element& parent, const std::string& segment,
                               const ElementPath& path) {
    const Element* match = nullptr;
    for (const auto& c : parent.children) {
        if (!c.is_element()) continue;
        const std::string* n = c.attribute("Name");
        if (!n || *n != segment) continue;
        if (match)
            throw Error("ambiguous_path", "path '" + path.str() + "': more than one child named '" +
                                              segment + "' at the same level");
        match = &c;
    }
    return match;
}

void collect_by_id(const Element& elem, std::string_view id, std::vector<const Element*>& hits) {
    if (elem.is_element()) {
        const std::string* v = elem.attribute("ID");
        if (v && *v == id) hits.push_back(&elem);
    }
    for (const auto& c : elem.children) collect_by_id(c, id, hits);
}

}  // namespace

const Element* find_by_path(const Document& doc, const ElementPath& path) {
    const Element* cur = &doc.root;
    for (const auto& segment : path.segments) {
        cur = resolve_segment(*cur, segment, path);
        if (!cur) return nullptr;
    }
    return cur;
}

Element* find_by_path(Document& doc, const ElementPath& path) {
    return const_cast<Element*>(find_by_path(static_cast<const Document&>(doc), path));
}

const Element* find_by_id(const Document& doc, std::string_view id) {
    std::vector<const Element*> hits;
    collect_by_id(doc.root, id, hits);
    if (hits.size() > 1)
        throw Error("duplicate_id", "ID '" + std::string(id) + "' occurs " +
                                        std::to_string(hits.size()) + " times");
    return hits.empty() ? nullptr : hits.front();
}

Element* find_by_id(Document& doc, std::string_view id) {
    return const_cast<Element*>(find_by_id(static_cast<const Document&>(doc), id));
}

void insert_child(Element& parent, Element child, std::size_t position) {
    if (position > parent.children.size())
        throw Error("index_out_of_range",
                    "insert position " + std::to_string(position) + " exceeds child count " +
                        std::to_string(parent.children.size()));
    parent.children.insert(parent.children.begin() + static_cast<std::ptrdiff_t>(position),
                           std::move(child));
}

void append_child(Element& parent, Element child) {
    parent.children.push_back(std::move(child));
}

bool structurally_equal(const Element& a, const Element& b) {
    if (a.kind != b.kind || a.name != b.name || a.text != b.text) return false;
    if (a.attributes != b.attributes) return false;
    if (a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!structurally_equal(a.children[i], b.children[i])) return false;
    }
    return true;
}

bool structurally_equal(const Document& a, const Document& b) {
    auto lists_equal = [](const std::vector<Element>& x, const std::vector<Element>& y) {
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (!structurally_equal(x[i], y[i])) return false;
        }
        return true;
    };
    return lists_equal(a.prolog, b.prolog) && structurally_equal(a.root, b.root) &&
           lists_equal(a.epilog, b.epilog);
}

}  // namespace mtpenergy::caex
