#include "doctest.h"

#include "tcc/error.hpp"
#include "tcc/signature.hpp"

using namespace tcc;

TEST_SUITE("signature") {
    TEST_CASE("parsing") {
        const Signature g1 = parse_signature("VBdLVBdLVBdL");
        REQUIRE(g1.tiles.size() == 3);
        for (const auto& t : g1.tiles) CHECK(t == TileSignature{"VB", FrameKind::dL});
        const Signature g3 = parse_signature("DDLDDLAIVL");
        CHECK(g3.tiles == std::vector<TileSignature>{{"DD", FrameKind::L}, {"DD", FrameKind::L}, {"AIV", FrameKind::L}});
        CHECK(parse_signature("VBdL VBdL\tVBdL") == g1);
    }

    TEST_CASE("parse errors carry offsets") {
        CHECK_THROWS_AS(parse_signature("DDLDDL"), ParseError);
        CHECK_THROWS_AS(parse_signature("XQL"), ParseError);
        CHECK_THROWS_AS(parse_signature("DDL"), ParseError);
        CHECK_THROWS_AS(parse_signature(""), ParseError);
        CHECK_THROWS_AS(parse_signature("DDdDDLDDL"), ParseError);
        try {
            parse_signature("DDLDDLDDx");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.offset() == 8);
        }
    }

    TEST_CASE("rendering round trips") {
        for (const char* text : {"VBdLVBdLVBdL", "DDLDDLAIVL", "HdLHdLHdL", "BIAdLVIALDDL"})
            CHECK(render_signature(parse_signature(text)) == text);
    }

    TEST_CASE("symbol counts") {
        SymbolCounts g1{};
        g1.V = 3, g1.B = 3, g1.d = 3, g1.L = 3;
        CHECK(counts(parse_signature("VBdLVBdLVBdL")) == g1);
        SymbolCounts g2{};
        g2.A = 3, g2.I = 3, g2.V = 3, g2.L = 3, g2.AIV = 3;
        CHECK(counts(parse_signature("AIVLAIVLAIVL")) == g2);
        const SymbolCounts mixed = counts(parse_signature("VIAdLAIVLHL"));
        CHECK(mixed.VIA == 1);
        CHECK(mixed.AIV == 1);
        CHECK(mixed.H == 1);
        CHECK(mixed.d == 1);
    }

    TEST_CASE("random signatures") {
        const Signature a = random_signature(3, {}, 7), b = random_signature(3, {}, 7);
        CHECK(a == b);
        CHECK_THROWS(random_signature(4, {}, 1));
        const std::vector<TileSignature> only{{"DD", FrameKind::L}};
        CHECK(render_signature(random_signature(5, only, 0)) == "DDLDDLDDLDDLDDL");
    }

    TEST_CASE("tile signatures cover the catalog") {
        CHECK(all_tile_signatures().size() == 42);
    }
}
