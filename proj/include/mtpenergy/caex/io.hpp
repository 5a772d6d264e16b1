// Copyright The mtpenergy Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "mtpenergy/caex/document.hpp"

namespace mtpenergy::caex {

/// Parses a CAEX/AutomationML document from UTF-8 XML text. A UTF-8 BOM is
/// tolerated. Inputs containing a DOCTYPE are rejected with
/// Error("unsupported_doctype"); syntax errors raise Error("malformed_xml")
/// with line/column in the message; a document without a root element raises
/// Error("empty_document").
Document parse(std::string_view text, std::string source_name = "");

/// Canonical serialization: XML declaration, two-space indentation,
/// attributes in stored order, text-only elements inlined, empty elements
/// self-closed. parse(serialize(d)) is structurally equal to d, and
/// serialize is a fixed point over parse (byte-identical on a no-op pass).
std::string serialize(const Document& doc);

/// Serializes a single element subtree at indentation depth zero. Used for
/// canonical subtree comparison.
std::string serialize_element(const Element& elem);

Document load_file(const std::string& path);
void save_file(const Document& doc, const std::string& path);

}  // namespace mtpenergy::caex
