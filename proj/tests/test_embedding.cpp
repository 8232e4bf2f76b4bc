#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "pct/embedding.hpp"
#include "pct/generators.hpp"

using namespace pct;

namespace {

// Independent face-count oracle: orbits of the successor rule (twin, then
// one step forward in the rotation).  That traces the mirror embedding, so
// the orbit count must match the face count of the primary rule.
int face_orbits_successor_rule(const Embedding& e)
{
    std::vector<char> seen(e.dart_count(), 0);
    int orbits = 0;
    for (int d0 = 0; d0 < e.dart_count(); ++d0) {
        if (seen[d0])
            continue;
        ++orbits;
        int d = d0;
        do {
            seen[d] = 1;
            int t = Embedding::twin(d);
            const auto& r = e.rotation(e.tail(t));
            d = r[(e.rotation_pos(t) + 1) % r.size()];
        } while (d != d0);
    }
    return orbits;
}

}  // namespace

TEST_CASE("tetrahedron embedding")
{
    Embedding e = fixtures::embed(fixtures::k4());
    CHECK(e.vertex_count() == 4);
    CHECK(e.edge_count() == 6);
    CHECK(e.is_simple());

    FaceSet fs = enumerate_faces(e);
    CHECK(fs.face_count() == 4);
    CHECK(fs.euler_ok);
    for (int f = 0; f < fs.face_count(); ++f)
        CHECK(fs.face_length(f) == 3);
    CHECK(face_orbits_successor_rule(e) == 4);
    CHECK(cyclomatic_number(e) == 3);
}

TEST_CASE("single triangle embedding")
{
    Embedding e = fixtures::embed(fixtures::triangle());
    CHECK(e.vertex_count() == 3);
    CHECK(e.edge_count() == 3);
    FaceSet fs = enumerate_faces(e);
    CHECK(fs.face_count() == 2);
    CHECK(fs.face_length(0) == 3);
    CHECK(fs.face_length(1) == 3);
    CHECK(face_orbits_successor_rule(e) == 2);
    CHECK(cyclomatic_number(e) == 1);
}

TEST_CASE("octahedron embedding")
{
    Embedding e = fixtures::embed(fixtures::octahedron());
    CHECK(e.vertex_count() == 6);
    CHECK(e.edge_count() == 12);
    FaceSet fs = enumerate_faces(e);
    CHECK(fs.face_count() == 8);
    CHECK(fs.euler_ok);
    for (int f = 0; f < fs.face_count(); ++f)
        CHECK(fs.face_length(f) == 3);
    CHECK(face_orbits_successor_rule(e) == 8);
    CHECK(cyclomatic_number(e) == 7);
}

TEST_CASE("icosahedron fixture is a 5-regular sphere triangulation")
{
    Embedding e = fixtures::embed(fixtures::icosahedron());
    CHECK(e.vertex_count() == 12);
    CHECK(e.edge_count() == 30);
    for (int v = 0; v < 12; ++v)
        CHECK(e.degree(v) == 5);
    FaceSet fs = enumerate_faces(e);
    CHECK(fs.face_count() == 20);
    CHECK(validate_triangulation(e, Mode::sphere).pass);
}

TEST_CASE("malformed rotations are rejected")
{
    // 1 lists 2 but 2 does not list 1
    CHECK_THROWS_AS(Embedding::from_rotations({{1, 2}, {2, 0}, {0}}), MalformedRotation);
    // duplicate neighbor without edge ids
    CHECK_THROWS_AS(Embedding::from_rotations({{1, 1}, {0, 0}}), MalformedRotation);
    // loop
    CHECK_THROWS_AS(Embedding::from_rotations({{0, 1}, {0}}), MalformedRotation);
    // two disjoint triangles
    CHECK_THROWS_AS(
        Embedding::from_rotations({{1, 2}, {2, 0}, {0, 1}, {4, 5}, {5, 3}, {3, 4}}),
        Disconnected);
}

TEST_CASE("multigraph rotations with edge ids")
{
    // two vertices joined by two parallel edges
    std::vector<std::vector<std::pair<int, int>>> rot = {{{1, 0}, {1, 1}}, {{0, 0}, {0, 1}}};
    Embedding e = Embedding::from_rotations_with_edges(2, rot);
    CHECK(e.vertex_count() == 2);
    CHECK(e.edge_count() == 2);
    CHECK(!e.is_simple());
    FaceSet fs = enumerate_faces(e);
    CHECK(fs.face_count() == 2);
    CHECK(fs.euler_ok);

    // edge id missing its second endpoint
    std::vector<std::vector<std::pair<int, int>>> bad = {{{1, 0}, {1, 1}}, {{0, 0}, {0, 2}}};
    CHECK_THROWS_AS(Embedding::from_rotations_with_edges(2, bad), MalformedRotation);
}

TEST_CASE("triangulation validation by mode")
{
    Embedding k4 = fixtures::embed(fixtures::k4());
    CHECK(validate_triangulation(k4, Mode::sphere).pass);

    Embedding fan = fixtures::embed(fixtures::fan2());
    FaceSet fs = enumerate_faces(fan);
    int outer = -1;
    for (int f = 0; f < fs.face_count(); ++f)
        if (fs.face_length(f) == 4)
            outer = f;
    REQUIRE(outer != -1);
    CHECK(validate_triangulation(fan, Mode::disk, outer).pass);
    Verdict sphere = validate_triangulation(fan, Mode::sphere);
    CHECK(!sphere.pass);

    // disk mode without a designated outer face fails
    CHECK(!validate_triangulation(fan, Mode::disk).pass);
}

TEST_CASE("dart partition and euler formula over random sphere instances")
{
    SplitMix64 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 4 + static_cast<int>(rng.below(20));
        Embedding t = random_flips(stacked(n, rng.next()), n, rng.next());
        FaceSet fs = enumerate_faces(t);
        CHECK(fs.euler_ok);
        CHECK(t.edge_count() == 3 * n - 6);
        CHECK(fs.face_count() == 2 * n - 4);
        CHECK(fs.finite_count() == cyclomatic_number(t));

        std::vector<int> count(t.dart_count(), 0);
        int total_len = 0;
        for (const auto& walk : fs.faces) {
            total_len += static_cast<int>(walk.size());
            for (int d : walk)
                ++count[d];
        }
        CHECK(total_len == 2 * t.edge_count());
        CHECK(std::all_of(count.begin(), count.end(), [](int c) { return c == 1; }));
        for (int d = 0; d < t.dart_count(); ++d)
            CHECK(fs.face_of_dart[d] == fs.face_of_dart[t.next_face_dart(d)]);
    }
}

TEST_CASE("graph stats")
{
    Embedding e = fixtures::embed(fixtures::k4());
    GraphStats s = graph_stats(e, enumerate_faces(e));
    CHECK(s.n == 4);
    CHECK(s.m == 6);
    CHECK(s.f == 4);
    CHECK(s.mu_finite == 3);
    CHECK(s.nu == 3);
    CHECK(s.degree_histogram == std::map<int, int>{{3, 4}});
}
