#include "doctest.h"
#include "fixtures.hpp"
#include "pct/conjugate.hpp"
#include "pct/euler.hpp"
#include "pct/generators.hpp"

using namespace pct;

namespace {

ConjugateGraph fan_conjugate()
{
    Embedding fan = fixtures::embed(fixtures::fan2());
    FaceSet fs = enumerate_faces(fan);
    int outer = -1;
    for (int f = 0; f < fs.face_count(); ++f)
        if (fs.face_length(f) == 4)
            outer = f;
    return conjugate(fan, Mode::disk, outer);
}

}  // namespace

TEST_CASE("circuit on the octahedron conjugate")
{
    ConjugateGraph cg = conjugate(fixtures::embed(fixtures::k4()), Mode::sphere);
    EulerCircuit c = euler_circuit(cg, 0);
    CHECK(c.darts.size() == 12);
    for (int v = 0; v < cg.h.vertex_count(); ++v)
        CHECK(c.visit_counts[v] == 2);
    CHECK(verify_bi_euler(c, cg.h).pass);
}

TEST_CASE("circuit on the degenerate triangle conjugate")
{
    ConjugateGraph cg = conjugate(fixtures::embed(fixtures::triangle()), Mode::sphere);
    EulerCircuit c = euler_circuit(cg, 0);
    CHECK(c.darts.size() == 6);
    CHECK(verify_bi_euler(c, cg.h).pass);
}

TEST_CASE("circuit on the fan conjugate")
{
    ConjugateGraph cg = fan_conjugate();
    EulerCircuit c = euler_circuit(cg, 0);
    CHECK(c.darts.size() == 6);
    CHECK(verify_bi_euler(c, cg.h).pass);
    for (int v = 0; v < cg.h.vertex_count(); ++v)
        CHECK(c.visit_counts[v] == (cg.h.degree(v) == 4 ? 2 : 1));
}

TEST_CASE("truncated circuits fail verification")
{
    ConjugateGraph cg = conjugate(fixtures::embed(fixtures::k4()), Mode::sphere);
    EulerCircuit c = euler_circuit(cg, 0);
    EulerCircuit cut = c;
    cut.darts.pop_back();
    CHECK(!verify_bi_euler(cut, cg.h).pass);
    EulerCircuit reordered = c;
    std::swap(reordered.darts[1], reordered.darts[4]);
    CHECK(!verify_bi_euler(reordered, cg.h).pass);
}

TEST_CASE("orientation invariants")
{
    ConjugateGraph cg = conjugate(fixtures::embed(fixtures::k4()), Mode::sphere);
    EulerCircuit c = euler_circuit(cg, 0);
    OrientedConjugate oc = orient_along(cg, c);
    CHECK(orientation_audit(oc, cg.h).pass);
    for (int v = 0; v < 6; ++v) {
        CHECK(oc.in_degree[v] == 2);
        CHECK(oc.out_degree[v] == 2);
    }

    ConjugateGraph fan = fan_conjugate();
    EulerCircuit fc = euler_circuit(fan, 0);
    OrientedConjugate foc = orient_along(fan, fc);
    CHECK(orientation_audit(foc, fan.h).pass);
    for (int v = 0; v < fan.h.vertex_count(); ++v)
        if (fan.h.degree(v) == 2)
            CHECK(foc.in_degree[v] == 1);
}

TEST_CASE("seeds give deterministic but varied circuits")
{
    ConjugateGraph cg = conjugate(stacked(8, 3), Mode::sphere);
    EulerCircuit a = euler_circuit(cg, 7);
    EulerCircuit b = euler_circuit(cg, 7);
    CHECK(a.darts == b.darts);
    bool some_difference = false;
    for (uint64_t seed = 1; seed <= 5 && !some_difference; ++seed)
        some_difference = euler_circuit(cg, seed).darts != a.darts;
    CHECK(some_difference);
    for (uint64_t seed = 0; seed <= 5; ++seed)
        CHECK(verify_bi_euler(euler_circuit(cg, seed), cg.h).pass);
}

TEST_CASE("circuit length and visit totals over a corpus")
{
    SplitMix64 rng(31);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 4 + static_cast<int>(rng.below(12));
        ConjugateGraph cg = conjugate(stacked(n, rng.next()), Mode::sphere);
        EulerCircuit c = euler_circuit(cg, rng.next());
        CHECK(static_cast<int>(c.darts.size()) == cg.h.edge_count());
        long total = 0;
        for (int v = 0; v < cg.h.vertex_count(); ++v)
            total += c.visit_counts[v];
        CHECK(total == cg.h.edge_count());
        CHECK(verify_bi_euler(c, cg.h).pass);
    }
}

TEST_CASE("non-eulerian input is rejected")
{
    CHECK_THROWS_AS(euler_circuit(fixtures::embed(fixtures::k4()), 0), NotEulerian);
}
