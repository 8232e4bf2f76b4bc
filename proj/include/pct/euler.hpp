#pragma once

#include <cstdint>
#include <vector>

#include "pct/conjugate.hpp"
#include "pct/embedding.hpp"

namespace pct {

/// Closed trail covering every edge once.  darts[i] runs head-to-tail into
/// darts[i+1], wrapping at the end; visit_counts[v] is the number of times
/// the trail passes through v.
struct EulerCircuit {
    std::vector<int> darts;
    std::vector<int> visit_counts;
};

/// Hierholzer's algorithm.  With seed 0 the walk always takes the unused
/// edge of smallest id; other seeds shuffle each vertex's preference order
/// deterministically.  Throws NotEulerian on odd degrees or leftover edges.
EulerCircuit euler_circuit(const Embedding& h, uint64_t seed = 0);

inline EulerCircuit euler_circuit(const ConjugateGraph& cg, uint64_t seed = 0)
{
    return euler_circuit(cg.h, seed);
}

/// Passes iff the circuit covers each edge once, chains head-to-tail, closes,
/// and visits every vertex exactly degree/2 times (so twice through every
/// degree-4 vertex, once through every degree-2 vertex).
Verdict verify_bi_euler(const EulerCircuit& c, const Embedding& h);

struct Digraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> arcs;  // (tail, head)

    int arc_count() const { return static_cast<int>(arcs.size()); }
};

/// H with every edge directed the way the circuit traverses it.  Arc ids
/// coincide with H edge ids.
struct OrientedConjugate {
    Digraph g;
    std::vector<int> in_degree;
    std::vector<int> out_degree;
};

OrientedConjugate orient_along(const Embedding& h, const EulerCircuit& c);

inline OrientedConjugate orient_along(const ConjugateGraph& cg, const EulerCircuit& c)
{
    return orient_along(cg.h, c);
}

/// In-degree equals out-degree everywhere; no pair of opposite arcs when the
/// underlying graph is simple.
Verdict orientation_audit(const OrientedConjugate& oc, const Embedding& h);

}  // namespace pct
