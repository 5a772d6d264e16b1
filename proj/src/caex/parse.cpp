// Copyright The mtpenergy Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cctype>
#include <fstream>
#include <sstream>

#include "mtpenergy/caex/io.hpp"
#include "mtpenergy/errors.hpp"

namespace mtpenergy::caex {

namespace {

bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
}

bool is_name_char(char c) {
    return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '.';
}

bool is_ws(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

class Parser {
public:
    Parser(std::string_view in, std::string source_name)
        : in_(in), source_(std::move(source_name)) {}

    Document run() {
        Document doc;
        doc.source_name = source_;

        skip_bom();
        skip_prolog_ws();
        if (looking_at("<?xml")) skip_xml_declaration();

        bool have_root = false;
        while (!at_end()) {
            skip_ws();
            if (at_end()) break;
            if (!looking_at("<")) fail("text content outside the root element");
            if (looking_at("<!--")) {
                (have_root ? doc.epilog : doc.prolog).push_back(parse_comment());
            } else if (looking_at("<!DOCTYPE")) {
                throw Error("unsupported_doctype",
                            where() + ": DOCTYPE declarations are not accepted");
            } else if (looking_at("<?")) {
                (have_root ? doc.epilog : doc.prolog).push_back(parse_pi());
            } else if (looking_at("</")) {
                fail("unexpected closing tag");
            } else {
                if (have_root) fail("more than one root element");
                doc.root = parse_element();
                have_root = true;
            }
        }
        if (!have_root) throw Error("empty_document", source_ + ": no root element");
        return doc;
    }

private:
    std::string_view in_;
    std::string source_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    bool at_end() const { return pos_ >= in_.size(); }
    char peek() const { return in_[pos_]; }

    char advance() {
        char c = in_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    bool looking_at(std::string_view s) const { return in_.substr(pos_, s.size()) == s; }

    void expect(std::string_view s) {
        if (!looking_at(s)) fail("expected '" + std::string(s) + "'");
        for (std::size_t i = 0; i < s.size(); ++i) advance();
    }

    std::string where() const {
        std::ostringstream os;
        if (!source_.empty()) os << source_ << ": ";
        os << "line " << line_ << ", column " << col_;
        return os.str();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error("malformed_xml", where() + ": " + msg);
    }

    void skip_bom() {
        if (in_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
    }

    void skip_ws() {
        while (!at_end() && is_ws(peek())) advance();
    }

    void skip_prolog_ws() { skip_ws(); }

    void skip_xml_declaration() {
        expect("<?xml");
        while (!at_end() && !looking_at("?>")) advance();
        if (at_end()) fail("unterminated XML declaration");
        expect("?>");
    }

    std::string parse_name() {
        if (at_end() || !is_name_start(peek())) fail("expected a name");
        std::string name;
        while (!at_end() && is_name_char(peek())) name += advance();
        return name;
    }

    Element parse_comment() {
        expect("<!--");
        std::string content;
        while (!at_end() && !looking_at("-->")) content += advance();
        if (at_end()) fail("unterminated comment");
        expect("-->");
        return Element::comment(std::move(content));
    }

    Element parse_pi() {
        expect("<?");
        Element e;
        e.kind = NodeKind::ProcInstruction;
        while (!at_end() && !looking_at("?>")) e.text += advance();
        if (at_end()) fail("unterminated processing instruction");
        expect("?>");
        return e;
    }

    std::string parse_reference() {
        expect("&");
        std::string entity;
        while (!at_end() && peek() != ';') {
            entity += advance();
            if (entity.size() > 10) fail("unterminated entity reference");
        }
        if (at_end()) fail("unterminated entity reference");
        expect(";");
        if (entity == "amp") return "&";
        if (entity == "lt") return "<";
        if (entity == "gt") return ">";
        if (entity == "quot") return "\"";
        if (entity == "apos") return "'";
        if (!entity.empty() && entity[0] == '#') {
            int base = 10;
            std::string digits = entity.substr(1);
            if (!digits.empty() && (digits[0] == 'x' || digits[0] == 'X')) {
                base = 16;
                digits = digits.substr(1);
            }
            if (digits.empty()) fail("empty character reference");
            unsigned long cp = 0;
            for (char c : digits) {
                int d;
                if (c >= '0' && c <= '9') d = c - '0';
                else if (base == 16 && c >= 'a' && c <= 'f') d = c - 'a' + 10;
                else if (base == 16 && c >= 'A' && c <= 'F') d = c - 'A' + 10;
                else { fail("bad character reference '&" + entity + ";'"); }
                cp = cp * static_cast<unsigned long>(base) + static_cast<unsigned long>(d);
                if (cp > 0x10FFFF) fail("character reference out of range");
            }
            return encode_utf8(cp);
        }
        fail("unknown entity '&" + entity + ";'");
    }

    static std::string encode_utf8(unsigned long cp) {
        std::string out;
        if (cp < 0x80) {
            out += static_cast<char>(cp);
        } else if (cp < 0x800) {
            out += static_cast<char>(0xC0 | (cp >> 6));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else if (cp < 0x10000) {
            out += static_cast<char>(0xE0 | (cp >> 12));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else {
            out += static_cast<char>(0xF0 | (cp >> 18));
            out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        }
        return out;
    }

    std::string parse_attribute_value() {
        if (at_end() || (peek() != '"' && peek() != '\'')) fail("expected a quoted value");
        char quote = advance();
        std::string value;
        while (!at_end() && peek() != quote) {
            if (peek() == '<') fail("'<' in attribute value");
            if (peek() == '&') {
                value += parse_reference();
            } else {
                value += advance();
            }
        }
        if (at_end()) fail("unterminated attribute value");
        advance();  // closing quote
        return value;
    }

    Element parse_element() {
        expect("<");
        Element elem;
        elem.name = parse_name();

        while (true) {
            bool had_ws = false;
            while (!at_end() && is_ws(peek())) {
                advance();
                had_ws = true;
            }
            if (at_end()) fail("unterminated start tag of <" + elem.name + ">");
            if (looking_at("/>")) {
                expect("/>");
                return elem;
            }
            if (peek() == '>') {
                advance();
                parse_content(elem);
                return elem;
            }
            if (!had_ws) fail("expected whitespace before attribute");
            std::string key = parse_name();
            skip_ws();
            expect("=");
            skip_ws();
            std::string value = parse_attribute_value();
            if (elem.attribute(key))
                fail("duplicate attribute '" + key + "' on <" + elem.name + ">");
            elem.attributes.emplace_back(std::move(key), std::move(value));
        }
    }

    void parse_content(Element& elem) {
        std::string text;
        bool text_significant = false;
        while (true) {
            if (at_end()) fail("missing closing tag for <" + elem.name + ">");
            if (looking_at("</")) {
                expect("</");
                std::string closing = parse_name();
                if (closing != elem.name)
                    fail("closing tag </" + closing + "> does not match <" + elem.name + ">");
                skip_ws();
                expect(">");
                break;
            }
            if (looking_at("<!--")) {
                elem.children.push_back(parse_comment());
            } else if (looking_at("<![CDATA[")) {
                expect("<![CDATA[");
                while (!at_end() && !looking_at("]]>")) {
                    text += advance();
                }
                if (at_end()) fail("unterminated CDATA section");
                expect("]]>");
                text_significant = true;
            } else if (looking_at("<!DOCTYPE")) {
                throw Error("unsupported_doctype",
                            where() + ": DOCTYPE declarations are not accepted");
            } else if (looking_at("<?")) {
                elem.children.push_back(parse_pi());
            } else if (peek() == '<') {
                elem.children.push_back(parse_element());
            } else if (peek() == '&') {
                text += parse_reference();
                text_significant = true;
            } else {
                char c = advance();
                text += c;
                if (!is_ws(c)) text_significant = true;
            }
        }
        // Whitespace-only character data is formatting, not content.
        if (text_significant) elem.text = std::move(text);
    }
};

}  // namespace

Document parse(std::string_view text, std::string source_name) {
    return Parser(text, std::move(source_name)).run();
}

Document load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io_error", "cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

}  // namespace mtpenergy::caex
