#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "pct/canonical.hpp"
#include "pct/conjugate.hpp"
#include "pct/generators.hpp"

using namespace pct;

namespace {

DiskTriangulation fan_disk()
{
    Embedding fan = fixtures::embed(fixtures::fan2());
    FaceSet fs = enumerate_faces(fan);
    int outer = -1;
    for (int f = 0; f < fs.face_count(); ++f)
        if (fs.face_length(f) == 4)
            outer = f;
    return {fan, {1, 0}, outer};
}

}  // namespace

TEST_CASE("conjugate of the tetrahedron is the octahedron")
{
    Embedding k4 = fixtures::embed(fixtures::k4());
    ConjugateGraph cg = conjugate(k4, Mode::sphere);
    CHECK(cg.h.vertex_count() == 6);
    CHECK(cg.h.edge_count() == 12);
    for (int v = 0; v < 6; ++v)
        CHECK(cg.h.degree(v) == 4);
    CHECK(cg.h.is_simple());
    CHECK(canonical_code(cg.h) == canonical_code(fixtures::embed(fixtures::octahedron())));

    // vertex_origin is the identity on edge ids and lists real endpoints
    for (int q = 0; q < cg.h.vertex_count(); ++q)
        CHECK(cg.vertex_origin[q] == k4.edge_ends(q));
}

TEST_CASE("conjugate of the single triangle doubles every median")
{
    Embedding tri = fixtures::embed(fixtures::triangle());
    ConjugateGraph cg = conjugate(tri, Mode::sphere);
    CHECK(cg.h.vertex_count() == 3);
    CHECK(cg.h.edge_count() == 6);
    CHECK(!cg.h.is_simple());
    CHECK(cg.has_two_cycle());
    for (int v = 0; v < 3; ++v)
        CHECK(cg.h.degree(v) == 4);
    CHECK(cyclomatic_number(cg.h) == 4);
}

TEST_CASE("disk conjugate of the two-triangle fan")
{
    DiskTriangulation fan = fan_disk();
    ConjugateGraph cg = conjugate(fan.embedding, Mode::disk, fan.outer_face_index);
    CHECK(cg.h.vertex_count() == 5);
    CHECK(cg.h.edge_count() == 6);

    // the chord midpoint has degree 4, the four boundary midpoints degree 2
    DegreeAudit audit = degree_audit(cg);
    CHECK(audit.verdict.pass);
    CHECK(audit.histogram == std::map<int, int>{{2, 4}, {4, 1}});
    int chord = -1;
    for (int e = 0; e < fan.embedding.edge_count(); ++e)
        if (!cg.external[e])
            chord = e;
    REQUIRE(chord != -1);
    CHECK(cg.h.degree(chord) == 4);
}

TEST_CASE("sphere conjugate face classes")
{
    Embedding k4 = fixtures::embed(fixtures::k4());
    ConjugateGraph cg = conjugate(k4, Mode::sphere);
    FaceClassification cls = classify_faces(cg);
    CHECK(cls.class1_count() == 4);
    CHECK(cls.class2_count() == 4);
    CHECK(cls.unmatched_face == -1);
    CHECK(cls.class1_count() == 2 * 4 - 4);
    for (auto& [f, lf] : cls.class1)
        CHECK(cls.faces.face_length(f) == 3);
    for (auto& [f, lv] : cls.class2)
        CHECK(cls.faces.face_length(f) == k4.degree(lv));

    // a plane drawing whose infinite face is some class-2 face shows
    // n_L - 1 finite polygons
    auto [c1, c2] = cls.counts_excluding(cls.class2.front().first);
    CHECK(c1 == 4);
    CHECK(c2 == 3);
}

TEST_CASE("icosahedron conjugate has pentagon class-2 faces")
{
    Embedding ico = fixtures::embed(fixtures::icosahedron());
    ConjugateGraph cg = conjugate(ico, Mode::sphere);
    CHECK(cg.h.vertex_count() == 30);
    CHECK(cg.h.edge_count() == 60);
    FaceClassification cls = classify_faces(cg);
    CHECK(cls.class1_count() == 20);
    CHECK(cls.class2_count() == 12);
    for (auto& [f, lv] : cls.class2)
        CHECK(cls.faces.face_length(f) == 5);
}

TEST_CASE("degenerate triangle conjugate classes are digons")
{
    Embedding tri = fixtures::embed(fixtures::triangle());
    ConjugateGraph cg = conjugate(tri, Mode::sphere);
    FaceClassification cls = classify_faces(cg);
    CHECK(cls.class1_count() == 2);
    CHECK(cls.class2_count() == 3);
    for (auto& [f, lv] : cls.class2)
        CHECK(cls.faces.face_length(f) == 2);
    CHECK(face_intersection_audit(cg, cls).pass);
}

TEST_CASE("face intersection audit passes on real conjugates")
{
    for (const auto& t : exhaustive_sphere(6)) {
        ConjugateGraph cg = conjugate(t, Mode::sphere);
        FaceClassification cls = classify_faces(cg);
        CHECK(face_intersection_audit(cg, cls).pass);
        CHECK(degree_audit(cg).verdict.pass);
        CHECK(cut_vertex_audit(cg).pass);
    }
    DiskTriangulation fan = fan_disk();
    ConjugateGraph cg = conjugate(fan.embedding, Mode::disk, fan.outer_face_index);
    FaceClassification cls = classify_faces(cg);
    CHECK(face_intersection_audit(cg, cls).pass);
    // the fan conjugate is two triangles glued at the chord midpoint: a cut
    // vertex, which the audit must see with degree 4
    CHECK(cut_vertex_audit(cg).pass);
}

TEST_CASE("corrupted conjugates fail the audits")
{
    Embedding k4 = fixtures::embed(fixtures::k4());
    ConjugateGraph cg = conjugate(k4, Mode::sphere);

    SUBCASE("removing an edge breaks the degree audit")
    {
        auto rows = cg.h.rotations_with_edges();
        // drop edge 0 from both endpoints, renumber the rest
        std::vector<std::vector<std::pair<int, int>>> cut(rows.size());
        for (size_t v = 0; v < rows.size(); ++v)
            for (auto [u, eid] : rows[v])
                if (eid != 0)
                    cut[v].emplace_back(u, eid - 1);
        ConjugateGraph broken = cg;
        broken.h = Embedding::from_rotations_with_edges(static_cast<int>(rows.size()), cut);
        DegreeAudit audit = degree_audit(broken);
        CHECK(!audit.verdict.pass);
    }

    SUBCASE("reassigning a face breaks the intersection audit")
    {
        FaceClassification cls = classify_faces(cg);
        FaceClassification tampered = cls;
        // pretend some class-2 face were a class-1 face: it shares edges
        // with genuine class-1 faces, violating clause (a)
        tampered.class1.push_back({tampered.class2.front().first, 0});
        tampered.class2.erase(tampered.class2.begin());
        CHECK(!face_intersection_audit(cg, tampered).pass);
    }
}

TEST_CASE("mode violations are rejected")
{
    DiskTriangulation fan = fan_disk();
    CHECK_THROWS_AS(conjugate(fan.embedding, Mode::sphere), ModeViolation);
}

TEST_CASE("disk conjugates carry three medians per finite face")
{
    SplitMix64 rng(41);
    for (int trial = 0; trial < 8; ++trial) {
        int b = 3 + static_cast<int>(rng.below(8));
        int ip = static_cast<int>(rng.below(4));
        DiskTriangulation d = disk_polygon(b, ip, rng.next());
        ConjugateGraph cg = conjugate(d.embedding, Mode::disk, d.outer_face_index);
        CHECK(cg.h.edge_count() == 3 * cg.median_face_count);
        CHECK(cg.h.vertex_count() == d.embedding.edge_count());
        // degree-2 vertices are exactly the boundary-edge midpoints
        for (int v = 0; v < cg.h.vertex_count(); ++v)
            CHECK((cg.h.degree(v) == 2) == static_cast<bool>(cg.external[v]));
    }
}

TEST_CASE("provenance and class invariants across a corpus")
{
    SplitMix64 rng(23);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 4 + static_cast<int>(rng.below(14));
        Embedding t = random_flips(stacked(n, rng.next()), n, rng.next());
        ConjugateGraph cg = conjugate(t, Mode::sphere);
        CHECK(cg.h.vertex_count() == t.edge_count());
        CHECK(cg.h.edge_count() == 2 * cg.h.vertex_count());
        FaceClassification cls = classify_faces(cg);
        CHECK(cls.class1_count() == 2 * n - 4);
        CHECK(cls.class2_count() == n);
        for (auto& [f, lv] : cls.class2)
            CHECK(cls.faces.face_length(f) == t.degree(lv));
        // every H-edge lies on exactly one class-1 face
        std::vector<int> on_class1(cg.h.edge_count(), 0);
        for (auto& [f, lf] : cls.class1)
            for (int e : cls.faces.face_edges(f))
                ++on_class1[e];
        CHECK(std::all_of(on_class1.begin(), on_class1.end(), [](int c) { return c == 1; }));
    }
}
