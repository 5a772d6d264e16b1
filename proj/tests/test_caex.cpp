// Copyright The mtpenergy Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mtpenergy/caex/document.hpp"
#include "mtpenergy/caex/io.hpp"
#include "mtpenergy/errors.hpp"
#include "support/paths.hpp"

using namespace mtpenergy;
using namespace mtpenergy::caex;

namespace {

bool throws_code(const std::function<void()>& fn, const std::string& code) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

}  // namespace

TEST_CASE("parse: minimal document") {
    Document doc = parse("<CAEXFile/>");
    CHECK(doc.root.name == "CAEXFile");
    CHECK(doc.root.children.empty());
    CHECK(doc.root.attributes.empty());
}

TEST_CASE("parse: distillation fixture structure") {
    Document doc = load_file(testpaths::fixture("distillation_pea.aml"));
    CHECK(doc.root.name == "CAEXFile");
    // Frozen from an independent XML reader: the root has a child with
    // Name="ModuleTypePackage" and 18 distinct IDs in total.
    CHECK(doc.root.child_by_name_attr("ModuleTypePackage") != nullptr);
}

TEST_CASE("parse: mismatched tags are malformed") {
    CHECK(throws_code([] { parse("<a><b></a>"); }, "malformed_xml"));
}

TEST_CASE("parse: error positions are annotated") {
    try {
        parse("<a>\n  <b></a>");
        FAIL("expected malformed_xml");
    } catch (const Error& e) {
        CHECK(e.code() == "malformed_xml");
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("parse: rejections") {
    CHECK(throws_code([] { parse(""); }, "empty_document"));
    CHECK(throws_code([] { parse("   \n  "); }, "empty_document"));
    CHECK(throws_code([] { parse("<?xml version=\"1.0\"?>\n"); }, "empty_document"));
    CHECK(throws_code([] { parse("<!DOCTYPE CAEXFile SYSTEM \"x.dtd\"><CAEXFile/>"); },
                      "unsupported_doctype"));
    CHECK(throws_code([] { parse("<a b=\"1\" b=\"2\"/>"); }, "malformed_xml"));
    CHECK(throws_code([] { parse("<a>&nope;</a>"); }, "malformed_xml"));
    CHECK(throws_code([] { parse("<a/><b/>"); }, "malformed_xml"));
    CHECK(throws_code([] { parse("<a>text"); }, "malformed_xml"));
}

TEST_CASE("parse: BOM tolerated, never emitted") {
    Document doc = parse("\xEF\xBB\xBF<CAEXFile/>");
    CHECK(doc.root.name == "CAEXFile");
    std::string out = serialize(doc);
    CHECK(out.substr(0, 5) == "<?xml");
}

TEST_CASE("parse: entities and cdata") {
    Document doc = parse("<a t=\"x&#10;y\"><v>1 &lt; 2 &amp; 3 &gt; 2</v><c><![CDATA[<&>]]></c></a>");
    CHECK(*doc.root.attribute("t") == "x\ny");
    CHECK(doc.root.children[0].text == "1 < 2 & 3 > 2");
    CHECK(doc.root.children[1].text == "<&>");
}

TEST_CASE("serialize: root-only and attribute order") {
    Document doc = parse("<CAEXFile/>");
    Document again = parse(serialize(doc));
    CHECK(structurally_equal(doc, again));

    Document ordered = parse("<e a=\"1\" b=\"2\"/>");
    std::string out = serialize(ordered);
    CHECK(out.find("a=\"1\" b=\"2\"") != std::string::npos);

    Document reversed = parse("<e b=\"2\" a=\"1\"/>");
    CHECK(serialize(reversed).find("b=\"2\" a=\"1\"") != std::string::npos);
    CHECK(!structurally_equal(ordered, reversed));
}

TEST_CASE("round-trip: every fixture, parse-serialize-parse equality") {
    const char* names[] = {"distillation_pea.aml", "synthetic_minimal.aml",
                           "synthetic_quirks.aml", "synthetic_links.aml"};
    for (const char* name : names) {
        CAPTURE(name);
        Document first = load_file(testpaths::fixture(name));
        std::string once = serialize(first);
        Document second = parse(once);
        CHECK(structurally_equal(first, second));
        // A no-op pass is byte-stable.
        CHECK(serialize(second) == once);
    }
}

TEST_CASE("round-trip: value text survives exactly") {
    Document doc = load_file(testpaths::fixture("synthetic_quirks.aml"));
    Document again = parse(serialize(doc));
    const Element* holder = again.root.child_by_name_attr("H1");
    REQUIRE(holder != nullptr);
    // Frozen via an independent reader: " 007.500 " keeps its padding,
    // the second value keeps its embedded newline.
    CHECK(holder->children[0].text == " 007.500 ");
    CHECK(holder->children[1].text == "line1\nline2");
}

TEST_CASE("round-trip: comments and processing instructions survive") {
    Document doc = load_file(testpaths::fixture("synthetic_quirks.aml"));
    REQUIRE(doc.prolog.size() == 2);
    CHECK(doc.prolog[0].kind == NodeKind::Comment);
    CHECK(doc.prolog[1].kind == NodeKind::ProcInstruction);
    REQUIRE(doc.epilog.size() == 1);
    Document again = parse(serialize(doc));
    CHECK(structurally_equal(doc, again));
    CHECK(again.prolog[0].text == " prolog banner: editor v9 ");
}

TEST_CASE("structural equality ignores formatting whitespace") {
    Document compact = parse("<a><b Name=\"x\"/></a>");
    Document pretty = parse("<a>\n  <b Name=\"x\"/>\n</a>");
    CHECK(structurally_equal(compact, pretty));
}

TEST_CASE("find_by_path") {
    Document doc = load_file(testpaths::fixture("distillation_pea.aml"));

    SUBCASE("resolves the indicator element group") {
        const Element* group = find_by_path(
            doc, ElementPath::parse("MTPDataObjectSUCLib/DataAssembly/IndicatorElement"));
        REQUIRE(group != nullptr);
        CHECK(group->name == "SystemUnitClass");
        CHECK(group->child_by_name_attr("AnaView") != nullptr);
    }
    SUBCASE("absent path") {
        CHECK(find_by_path(doc, ElementPath::parse("Nonexistent")) == nullptr);
    }
    SUBCASE("ambiguous path") {
        Document dup = parse("<r><c Name=\"X\"/><c Name=\"X\"/></r>");
        CHECK(throws_code([&] { find_by_path(dup, ElementPath::parse("X")); }, "ambiguous_path"));
    }
    SUBCASE("segment validation") {
        CHECK_THROWS_AS(ElementPath({}), Error);
        CHECK_THROWS_AS(ElementPath({"a/b"}), Error);
    }
}

TEST_CASE("find_by_id") {
    Document doc = load_file(testpaths::fixture("distillation_pea.aml"));

    SUBCASE("known instance GUID") {
        const Element* e = find_by_id(doc, "2f0e5d1c-9a3b-4c77-8d21-5b4f0a9e6c01");
        REQUIRE(e != nullptr);
        CHECK(*e->attribute("Name") == "TI001");
    }
    SUBCASE("unknown GUID") {
        CHECK(find_by_id(doc, "00000000-0000-4000-8000-000000000000") == nullptr);
    }
    SUBCASE("duplicated ID") {
        Document dup = parse("<r><a ID=\"x\"/><b ID=\"x\"/></r>");
        CHECK(throws_code([&] { find_by_id(dup, "x"); }, "duplicate_id"));
    }
}

TEST_CASE("insert_child") {
    Document doc = parse("<parent/>");

    SUBCASE("append to empty") {
        append_child(doc.root, Element::make("kid"));
        CHECK(doc.root.children.size() == 1);
    }
    SUBCASE("insert at front shifts existing") {
        append_child(doc.root, Element::make("one"));
        append_child(doc.root, Element::make("two"));
        insert_child(doc.root, Element::make("zero"), 0);
        REQUIRE(doc.root.children.size() == 3);
        CHECK(doc.root.children[0].name == "zero");
        CHECK(doc.root.children[1].name == "one");
        CHECK(doc.root.children[2].name == "two");
    }
    SUBCASE("out of range") {
        append_child(doc.root, Element::make("one"));
        append_child(doc.root, Element::make("two"));
        CHECK(throws_code([&] { insert_child(doc.root, Element::make("x"), 5); },
                          "index_out_of_range"));
    }
}

TEST_CASE("finders do not mutate") {
    Document doc = load_file(testpaths::fixture("distillation_pea.aml"));
    std::string before = serialize(doc);
    (void)find_by_path(doc, ElementPath::parse("MTPDataObjectSUCLib/DataAssembly"));
    (void)find_by_id(doc, "2f0e5d1c-9a3b-4c77-8d21-5b4f0a9e6c01");
    (void)find_by_id(doc, "not-there");
    CHECK(serialize(doc) == before);
}
