// Copyright The mtpenergy Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mtpenergy::caex {

enum class NodeKind {
    Element,
    Comment,          // carried opaquely, round-trips verbatim
    ProcInstruction,  // likewise
};

/// One node of a CAEX/AutomationML tree. Attribute order and child order are
/// preserved verbatim; nodes the toolkit does not understand are carried
/// through untouched. Comments and processing instructions reuse this struct
/// with `text` holding their raw content.
struct Element {
    NodeKind kind = NodeKind::Element;
    std::string name;  // XML element name; empty for Comment/ProcInstruction
    std::vector<std::pair<std::string, std::string>> attributes;  // ordered, keys unique
    std::vector<Element> children;
    std::string text;  // character data, decoded; empty means no text

    bool is_element() const { return kind == NodeKind::Element; }

    /// Value of an XML attribute, or nullptr when absent.
    const std::string* attribute(std::string_view key) const;

    /// Sets (or replaces) an XML attribute, preserving position on replace.
    void set_attribute(std::string_view key, std::string_view value);

    /// First element child with the given tag name, or nullptr.
    Element* child_by_tag(std::string_view tag);
    const Element* child_by_tag(std::string_view tag) const;

    /// First element child whose Name XML attribute equals `name_attr`.
    Element* child_by_name_attr(std::string_view name_attr);
    const Element* child_by_name_attr(std::string_view name_attr) const;

    static Element comment(std::string content);
    static Element make(std::string tag);
};

/// A parsed manifest. Comments or processing instructions outside the root
/// element are kept so tool banners survive a round trip.
struct Document {
    std::vector<Element> prolog;
    Element root;
    std::vector<Element> epilog;
    std::string source_name;  // provenance label, e.g. the input file name
};

/// Path addressing by the Name XML attribute of successive children, the
/// convention MTP manifests use (e.g. MTPDataObjectSUCLib/DataAssembly/...).
struct ElementPath {
    std::vector<std::string> segments;

    explicit ElementPath(std::vector<std::string> segs);
    /// Splits a slash-separated path. Segments must be non-empty.
    static ElementPath parse(std::string_view slash_separated);
    std::string str() const;
};

/// Resolves `path` from the document root, matching each segment against the
/// Name attribute of the current element's children. Returns nullptr when no
/// element matches. Throws Error("ambiguous_path") when more than one child
/// matches a segment at the same level. Never mutates the document.
const Element* find_by_path(const Document& doc, const ElementPath& path);
Element* find_by_path(Document& doc, const ElementPath& path);

/// Finds the unique element whose ID attribute equals `id`. Returns nullptr
/// when absent; throws Error("duplicate_id") when two elements share the ID.
const Element* find_by_id(const Document& doc, std::string_view id);
Element* find_by_id(Document& doc, std::string_view id);

/// Inserts `child` at `position` (child count = append). All other children
/// keep their order. Throws Error("index_out_of_range").
void insert_child(Element& parent, Element child, std::size_t position);
void append_child(Element& parent, Element child);

/// Structural equality: element names, attribute key/value pairs in order,
/// text content and child order. Insignificant whitespace never reaches the
/// tree, so plain comparison is exact.
bool structurally_equal(const Element& a, const Element& b);
bool structurally_equal(const Document& a, const Document& b);

}  // namespace mtpenergy::caex
