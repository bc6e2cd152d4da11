#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "finalg/structure_io.hpp"

using namespace finalg;

namespace {

const char* kFullDoc = R"({
  "schema": 1,
  "rings": [
    {"name": "Z4", "kind": "zmod", "n": 4},
    {"name": "Z2", "kind": "zmod", "n": 2},
    {"name": "R", "kind": "product", "factors": ["Z2", "Z4"]},
    {"name": "D", "kind": "amalgam", "base": "Z4", "ideal_gens": [2]}
  ],
  "modules": [
    {"name": "M4", "kind": "ring_as_module", "ring": "Z4"},
    {"name": "Q", "kind": "quotient", "module": "M4", "gens": [2]},
    {"name": "MR", "kind": "ring_as_module", "ring": "R"},
    {"name": "T", "kind": "free_tensor", "module": "M4", "k": 2}
  ],
  "submodules": [
    {"name": "P", "module": "M4", "gens": [2]},
    {"name": "Z", "module": "MR", "members": [0, 4]}
  ],
  "homs": [
    {"name": "pi", "source": "M4", "target": "Q", "gen_images": [[1, 1]]}
  ],
  "sets": [
    {"name": "S", "module": "M4", "members": [1, 3]}
  ]
})";

}  // namespace

TEST_CASE("loading a document with every structure kind") {
    LoadedDoc doc = load_document(kFullDoc);
    REQUIRE(doc.issues.empty());

    REQUIRE(doc.ring("Z4"));
    CHECK(doc.ring("Z4")->size() == 4);
    CHECK(doc.ring("Z4")->label() == "Z4");
    REQUIRE(doc.ring("R"));
    CHECK(doc.ring("R")->size() == 8);
    CHECK(doc.ring("R")->one() == 5);      // (1,1) at row-major index 4*1+1
    CHECK(doc.ring("R")->mul(6, 6) == 4);  // (1,2)*(1,2) = (1,0)
    REQUIRE(doc.ring("D"));
    CHECK(doc.ring("D")->size() == 8);
    CHECK(doc.ring("D")->label() == "D");
    CHECK(doc.ring("missing") == nullptr);

    REQUIRE(doc.module("M4"));
    CHECK(doc.module("M4")->size() == 4);
    CHECK(doc.module("M4")->ring() == doc.ring("Z4"));
    REQUIRE(doc.module("Q"));
    CHECK(doc.module("Q")->size() == 2);
    REQUIRE(doc.module("MR"));
    CHECK(doc.module("MR")->size() == 8);
    REQUIRE(doc.module("T"));
    CHECK(doc.module("T")->size() == 16);

    const NamedSubmodule* p = doc.submodule("P");
    REQUIRE(p);
    CHECK(p->submodule.members.elements() == std::vector<int>{0, 2});
    const NamedSubmodule* z = doc.submodule("Z");
    REQUIRE(z);
    CHECK(z->submodule.members.elements() == std::vector<int>{0, 4});

    const NamedHom* pi = doc.hom("pi");
    REQUIRE(pi);
    CHECK(pi->hom.map == std::vector<uint16_t>{0, 1, 0, 1});

    const NamedSet* s = doc.set("S");
    REQUIRE(s);
    CHECK(s->members.elements() == std::vector<int>{1, 3});
}

TEST_CASE("canonical emission round-trips bit-exactly") {
    LoadedDoc doc = load_document(kFullDoc);
    REQUIRE(doc.issues.empty());
    std::string once = emit_document(doc);
    LoadedDoc again = load_document(once);
    REQUIRE(again.issues.empty());
    CHECK(emit_document(again) == once);

    CHECK(again.ring("R")->tables().mul == doc.ring("R")->tables().mul);
    CHECK(again.module("T")->tables().act == doc.module("T")->tables().act);
    CHECK(again.submodule("P")->submodule.members == doc.submodule("P")->submodule.members);
    CHECK(again.hom("pi")->hom.map == doc.hom("pi")->hom.map);
}

TEST_CASE("parse errors carry positions and context") {
    SUBCASE("malformed JSON") {
        try {
            load_document("{\"schema\": 1,\n  \"rings\": [}");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
            CHECK(e.col > 0);
        }
    }
    SUBCASE("wrong schema") {
        CHECK_THROWS_AS(load_document("{\"schema\": 2}"), ParseError);
    }
    SUBCASE("missing required field") {
        CHECK_THROWS_AS(load_document(R"({"schema": 1, "rings": [{"name": "A"}]})"),
                        ParseError);
        CHECK_THROWS_AS(
            load_document(R"({"schema": 1, "rings": [{"kind": "zmod", "n": 4}]})"),
            ParseError);
    }
    SUBCASE("unknown kind") {
        CHECK_THROWS_AS(
            load_document(R"({"schema": 1, "rings": [{"name": "A", "kind": "field", "q": 4}]})"),
            ParseError);
    }
    SUBCASE("unresolved reference") {
        CHECK_THROWS_AS(
            load_document(
                R"({"schema": 1, "modules": [{"name": "M", "kind": "ring_as_module", "ring": "nope"}]})"),
            ParseError);
    }
    SUBCASE("references resolve to earlier entries only") {
        CHECK_THROWS_AS(
            load_document(
                R"({"schema": 1,
                    "rings": [{"name": "R", "kind": "product", "factors": ["A", "A"]},
                              {"name": "A", "kind": "zmod", "n": 2}]})"),
            ParseError);
    }
    SUBCASE("duplicate name") {
        CHECK_THROWS_AS(
            load_document(
                R"({"schema": 1, "rings": [{"name": "A", "kind": "zmod", "n": 2},
                                           {"name": "A", "kind": "zmod", "n": 3}]})"),
            ParseError);
    }
    SUBCASE("out of range member") {
        CHECK_THROWS_AS(
            load_document(
                R"({"schema": 1,
                    "rings": [{"name": "Z4", "kind": "zmod", "n": 4}],
                    "modules": [{"name": "M", "kind": "ring_as_module", "ring": "Z4"}],
                    "submodules": [{"name": "P", "module": "M", "members": [0, 9]}]})"),
            ParseError);
    }
}

TEST_CASE("caps are enforced") {
    IoCaps caps;
    caps.max_ring_size = 8;
    CHECK_THROWS_AS(
        load_document(R"({"schema": 1, "rings": [{"name": "A", "kind": "zmod", "n": 9}]})",
                      caps),
        CapError);

    IoCaps mcaps;
    mcaps.max_module_size = 10;
    CHECK_THROWS_AS(
        load_document(
            R"({"schema": 1,
                "rings": [{"name": "Z4", "kind": "zmod", "n": 4}],
                "modules": [{"name": "M", "kind": "ring_as_module", "ring": "Z4"},
                            {"name": "T", "kind": "free_tensor", "module": "M", "k": 2}]})",
            mcaps),
        CapError);
}

TEST_CASE("axiom violations become issues, not exceptions") {
    SUBCASE("broken ring tables stop the build") {
        LoadedDoc doc = load_document(
            R"({"schema": 1,
                "rings": [{"name": "B", "kind": "tables", "size": 2, "zero": 0, "one": 1,
                           "add": [[0, 1], [1, 1]], "mul": [[0, 0], [0, 1]]},
                          {"name": "Z2", "kind": "zmod", "n": 2}]})");
        REQUIRE_FALSE(doc.issues.empty());
        CHECK(doc.issues[0].structure == "ring \"B\"");
        CHECK(doc.ring("B") == nullptr);
        // building stopped at the first issue
        CHECK(doc.ring("Z2") == nullptr);
    }
    SUBCASE("submodule members not closed") {
        LoadedDoc doc = load_document(
            R"({"schema": 1,
                "rings": [{"name": "Z4", "kind": "zmod", "n": 4}],
                "modules": [{"name": "M", "kind": "ring_as_module", "ring": "Z4"}],
                "submodules": [{"name": "P", "module": "M", "members": [0, 1]}]})");
        REQUIRE_FALSE(doc.issues.empty());
        CHECK(doc.issues[0].structure == "submodule \"P\"");
        CHECK(doc.submodule("P") == nullptr);
    }
    SUBCASE("hom map that is not linear") {
        LoadedDoc doc = load_document(
            R"({"schema": 1,
                "rings": [{"name": "Z4", "kind": "zmod", "n": 4}],
                "modules": [{"name": "M", "kind": "ring_as_module", "ring": "Z4"}],
                "homs": [{"name": "f", "source": "M", "target": "M", "map": [0, 1, 3, 3]}]})");
        REQUIRE_FALSE(doc.issues.empty());
        CHECK(doc.issues[0].structure == "hom \"f\"");
        CHECK(doc.hom("f") == nullptr);
    }
    SUBCASE("generator images that cannot extend") {
        LoadedDoc doc = load_document(
            R"({"schema": 1,
                "rings": [{"name": "Z4", "kind": "zmod", "n": 4}],
                "modules": [{"name": "M", "kind": "ring_as_module", "ring": "Z4"}],
                "homs": [{"name": "f", "source": "M", "target": "M",
                          "gen_images": [[1, 1], [2, 1]]}]})");
        REQUIRE_FALSE(doc.issues.empty());
        CHECK(doc.issues[0].structure == "hom \"f\"");
    }
}
