#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "pct/conjugate.hpp"
#include "pct/generators.hpp"
#include "pct/textio.hpp"

using namespace pct;

TEST_CASE("parse the documented record shape")
{
    std::istringstream in(
        "# tetrahedron\n"
        "0: 1 2 3\n"
        "1: 0 3 2\n"
        "2: 0 1 3\n"
        "3: 0 2 1\n"
        "\n"
        "!outer: 1 0\n"
        "0: 1 2 3\n"
        "1: 2 0\n"
        "2: 3 0 1\n"
        "3: 0 2\n");
    auto parsed = parse_instances(in);
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0].embedding.vertex_count() == 4);
    CHECK(!parsed[0].outer_dart.has_value());
    CHECK(parsed[1].embedding.vertex_count() == 4);
    REQUIRE(parsed[1].outer_dart.has_value());
    CHECK(*parsed[1].outer_dart == std::pair<int, int>{1, 0});

    FaceSet fs = enumerate_faces(parsed[1].embedding);
    int outer = face_of_dart_pair(parsed[1].embedding, fs, 1, 0);
    REQUIRE(outer >= 0);
    CHECK(fs.face_length(outer) == 4);
}

TEST_CASE("serialize and reparse simple instances")
{
    SplitMix64 rng(3);
    for (int trial = 0; trial < 6; ++trial) {
        Embedding t = stacked(4 + static_cast<int>(rng.below(12)), rng.next());
        std::string text = instance_to_string(t, std::nullopt, "roundtrip");
        std::istringstream in(text);
        auto parsed = parse_instances(in);
        REQUIRE(parsed.size() == 1);
        CHECK(parsed[0].embedding.rotations_with_edges() == t.rotations_with_edges());
        CHECK(instance_to_string(parsed[0].embedding) == instance_to_string(t));
    }
}

TEST_CASE("multigraph records carry edge ids and round trip")
{
    Embedding tri = fixtures::embed(fixtures::triangle());
    ConjugateGraph cg = conjugate(tri, Mode::sphere);
    REQUIRE(!cg.h.is_simple());
    std::string text = instance_to_string(cg.h);
    CHECK(text.find('@') != std::string::npos);
    std::istringstream in(text);
    auto parsed = parse_instances(in);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0].embedding.rotations_with_edges() == cg.h.rotations_with_edges());
}

TEST_CASE("format errors")
{
    std::istringstream dup("0: 1\n0: 1\n1: 0\n");
    CHECK_THROWS_AS(parse_instances(dup), FormatError);
    std::istringstream junk("0: x\n");
    CHECK_THROWS_AS(parse_instances(junk), FormatError);
    std::istringstream mixed("0: 1@0 2\n1: 0@0\n2: 0\n");
    CHECK_THROWS_AS(parse_instances(mixed), FormatError);
    std::istringstream asym("0: 1\n1:\n");
    CHECK_THROWS_AS(parse_instances(asym), MalformedRotation);
}
