#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "pct/bitmatrix.hpp"
#include "pct/conjugate.hpp"
#include "pct/euler.hpp"
#include "pct/generators.hpp"

using namespace pct;

namespace {

OrientedConjugate orient_k4(uint64_t seed = 0)
{
    ConjugateGraph cg = conjugate(fixtures::embed(fixtures::k4()), Mode::sphere);
    return orient_along(cg, euler_circuit(cg, seed));
}

}  // namespace

TEST_CASE("matrices of the oriented octahedron")
{
    OrientedConjugate oc = orient_k4();
    BitMatrix f = vertex_adjacency_matrix(oc.g);
    CHECK(f.order() == 6);
    CHECK(f.total_ones() == 12);
    for (int i = 0; i < 6; ++i)
        CHECK(f.row_sum(i) == 2);

    BitMatrix r = arc_adjacency_matrix(oc.g);
    CHECK(r.order() == 12);
    CHECK(r.total_ones() == 24);
    for (int a = 0; a < 12; ++a)
        CHECK(r.row_sum(a) == 2);

    CHECK(antisymmetry_check(f).pass);
    CHECK(antisymmetry_check(r).pass);
}

TEST_CASE("degenerate digraphs")
{
    Digraph none{3, {}};
    CHECK(vertex_adjacency_matrix(none).total_ones() == 0);
    Digraph one{2, {{0, 1}}};
    BitMatrix r = arc_adjacency_matrix(one);
    CHECK(r.order() == 1);
    CHECK(r.total_ones() == 0);
}

TEST_CASE("antisymmetry negative control")
{
    BitMatrix m(2);
    m.set(0, 1, true);
    m.set(1, 0, true);
    CHECK(!antisymmetry_check(m).pass);
    BitMatrix d(2);
    d.set(0, 0, true);
    CHECK(!antisymmetry_check(d).pass);
}

TEST_CASE("quasicanonical decomposition of R")
{
    for (const auto& t : exhaustive_sphere(6)) {
        ConjugateGraph cg = conjugate(t, Mode::sphere);
        OrientedConjugate oc = orient_along(cg, euler_circuit(cg, 1));
        QuasiOutcome q = quasicanonical_decomposition(arc_adjacency_matrix(oc.g));
        REQUIRE(q.ok);
        CHECK(q.dec.all_blocks_2x2());
        CHECK(static_cast<int>(q.dec.blocks.size()) == cg.h.vertex_count());
        CHECK(q.dec.unassigned == 0);
        CHECK(q.dec.covered_ones == 2L * cg.h.edge_count());
    }
}

TEST_CASE("identity permutation matrix decomposes into 1x1 blocks")
{
    BitMatrix m(4);
    for (int i = 0; i < 4; ++i)
        m.set(i, (i + 1) % 4, true);
    QuasiOutcome q = quasicanonical_decomposition(m);
    REQUIRE(q.ok);
    CHECK(q.dec.blocks.size() == 4);
    for (const auto& b : q.dec.blocks)
        CHECK((b.rows.size() == 1 && b.cols.size() == 1));
}

TEST_CASE("overlapping unequal rows are refused with a witness")
{
    BitMatrix m(4);
    m.set(0, 0, true);
    m.set(0, 1, true);
    m.set(1, 0, true);
    m.set(1, 2, true);
    QuasiOutcome q = quasicanonical_decomposition(m);
    CHECK(!q.ok);
    CHECK(q.witness_a == 0);
    CHECK(q.witness_b == 1);
}

TEST_CASE("reverse conversion round trips the pipeline digraph")
{
    OrientedConjugate oc = orient_k4();
    BitMatrix r = arc_adjacency_matrix(oc.g);
    ReverseOutcome rev = reverse_convert(r);
    REQUIRE(rev.ok);
    CHECK(arc_adjacency_matrix(rev.g) == r);
    ArcIsoResult iso = check_arc_isomorphism(rev.g, oc.g);
    CHECK(iso.ok);
    CHECK(rev.g.vertex_count == 6);

    // and on a batch of bigger instances
    SplitMix64 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        ConjugateGraph cg =
            conjugate(stacked(4 + static_cast<int>(rng.below(10)), rng.next()), Mode::sphere);
        OrientedConjugate d = orient_along(cg, euler_circuit(cg, rng.next()));
        BitMatrix rm = arc_adjacency_matrix(d.g);
        ReverseOutcome b = reverse_convert(rm);
        REQUIRE(b.ok);
        CHECK(arc_adjacency_matrix(b.g) == rm);
        CHECK(check_arc_isomorphism(b.g, d.g).ok);
    }
}

TEST_CASE("reverse conversion keeps sources and sinks apart")
{
    // one isolated arc: zero row and zero column
    BitMatrix m(1);
    ReverseOutcome rev = reverse_convert(m);
    REQUIRE(rev.ok);
    CHECK(arc_adjacency_matrix(rev.g) == m);
}

TEST_CASE("F of a 7-vertex instance never decomposes")
{
    // n_H = 15 is odd while a 2-in 2-out realization forces 2x2 blocks
    for (const auto& t : exhaustive_sphere(7)) {
        ConjugateGraph cg = conjugate(t, Mode::sphere);
        OrientedConjugate oc = orient_along(cg, euler_circuit(cg, 2));
        CHECK(!quasicanonical_decomposition(vertex_adjacency_matrix(oc.g)).ok);
    }
}

TEST_CASE("multiplicity audit")
{
    OrientedConjugate oc = orient_k4();
    BitMatrix r = arc_adjacency_matrix(oc.g);
    MultiplicityAudit a = multiplicity_audit(Mode::sphere, 4, 6, 12, r);
    CHECK(!a.skipped);
    CHECK(a.verdict.pass);

    ConjugateGraph ico = conjugate(fixtures::embed(fixtures::icosahedron()), Mode::sphere);
    OrientedConjugate ioc = orient_along(ico, euler_circuit(ico, 1));
    BitMatrix ir = arc_adjacency_matrix(ioc.g);
    CHECK(ir.total_ones() == 120);
    MultiplicityAudit ia = multiplicity_audit(Mode::sphere, 12, 30, 60, ir);
    CHECK(ia.verdict.pass);

    CHECK(multiplicity_audit(Mode::disk, 4, 5, 6, r).skipped);
    CHECK(multiplicity_audit(Mode::sphere, 3, 3, 6, r).skipped);
}

TEST_CASE("compactness metrics")
{
    OrientedConjugate oc = orient_k4();
    BitMatrix f = vertex_adjacency_matrix(oc.g);
    CompactnessMetrics mf = compactness_metrics(f, MatrixKind::F);
    CHECK(mf.sigma == make_rational(1, 3));
    CHECK(mf.lambda == make_rational(3, 1));
    CHECK(mf.minimum_order_ok);

    BitMatrix r = arc_adjacency_matrix(oc.g);
    CompactnessMetrics mr = compactness_metrics(r, MatrixKind::R);
    CHECK(mr.sigma == make_rational(1, 6));
    CHECK(mr.lambda == make_rational(6, 1));
    CHECK(mr.minimum_order_ok);

    BitMatrix toy(3);
    toy.set(0, 1, true);
    CHECK(!compactness_metrics(toy, MatrixKind::F).minimum_order_ok);
    CHECK(compactness_metrics(toy, MatrixKind::F).sigma == make_rational(1, 9));
}

TEST_CASE("feasibility records")
{
    OrientedConjugate oc = orient_k4();
    FeasibilityRecord k4rec =
        reverse_feasibility_claim(fixtures::embed(fixtures::k4()), vertex_adjacency_matrix(oc.g));
    CHECK(k4rec.n_h == 6);
    CHECK(k4rec.size_candidate);
    CHECK(!k4rec.predicted_infeasible);
    CHECK(k4rec.deg4_count == 0);
    CHECK(k4rec.agreement);  // candidate status cannot disagree

    ConjugateGraph octa = conjugate(fixtures::embed(fixtures::octahedron()), Mode::sphere);
    OrientedConjugate ooc = orient_along(octa, euler_circuit(octa, 1));
    FeasibilityRecord orec = reverse_feasibility_claim(fixtures::embed(fixtures::octahedron()),
                                                       vertex_adjacency_matrix(ooc.g));
    CHECK(orec.n_h == 12);
    CHECK(orec.deg4_count == 6);
    CHECK(orec.deg4_condition);
    CHECK(orec.size_candidate);

    Embedding seven = stacked(7, 4);
    ConjugateGraph cg7 = conjugate(seven, Mode::sphere);
    OrientedConjugate oc7 = orient_along(cg7, euler_circuit(cg7, 1));
    FeasibilityRecord rec7 = reverse_feasibility_claim(seven, vertex_adjacency_matrix(oc7.g));
    CHECK(rec7.predicted_infeasible);
    CHECK(!rec7.empirical_success);
    CHECK(rec7.agreement);
}

TEST_CASE("matrix text round trip")
{
    OrientedConjugate oc = orient_k4();
    BitMatrix r = arc_adjacency_matrix(oc.g);
    CHECK(BitMatrix::from_text(r.to_text()) == r);
    CHECK_THROWS_AS(BitMatrix::from_text("2\n01\n0"), FormatError);
    CHECK_THROWS_AS(BitMatrix::from_text("2\n01\n0x"), FormatError);
}
