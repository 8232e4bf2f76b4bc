#include "pct/euler.hpp"

#include <algorithm>

#include "pct/generators.hpp"

namespace pct {

EulerCircuit euler_circuit(const Embedding& h, uint64_t seed)
{
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) % 2 != 0)
            throw NotEulerian("vertex " + std::to_string(v) + " has odd degree");

    // Per-vertex preference order over outgoing darts.
    std::vector<std::vector<int>> pref(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v) {
        pref[v] = h.rotation(v);
        std::sort(pref[v].begin(), pref[v].end());  // ascending edge id
        if (seed != 0) {
            SplitMix64 rng(seed * 0x9E3779B97F4A7C15ull + v);
            for (int i = static_cast<int>(pref[v].size()) - 1; i > 0; --i)
                std::swap(pref[v][i], pref[v][rng.below(i + 1)]);
        }
    }

    std::vector<char> used(h.edge_count(), 0);
    std::vector<size_t> cursor(h.vertex_count(), 0);
    std::vector<std::pair<int, int>> stack;  // (vertex, dart entered by)
    std::vector<int> circuit;
    stack.emplace_back(0, -1);
    while (!stack.empty()) {
        auto [v, din] = stack.back();
        size_t& cur = cursor[v];
        while (cur < pref[v].size() && used[Embedding::edge_of(pref[v][cur])])
            ++cur;
        if (cur == pref[v].size()) {
            stack.pop_back();
            if (din >= 0)
                circuit.push_back(din);
        } else {
            int d = pref[v][cur];
            used[Embedding::edge_of(d)] = 1;
            stack.emplace_back(h.head(d), d);
        }
    }
    if (static_cast<int>(circuit.size()) != h.edge_count())
        throw NotEulerian("trail covers " + std::to_string(circuit.size()) + " of " +
                          std::to_string(h.edge_count()) + " edges");
    std::reverse(circuit.begin(), circuit.end());

    EulerCircuit out;
    out.darts = std::move(circuit);
    out.visit_counts.assign(h.vertex_count(), 0);
    for (int d : out.darts)
        ++out.visit_counts[h.tail(d)];
    return out;
}

Verdict verify_bi_euler(const EulerCircuit& c, const Embedding& h)
{
    Verdict v;
    if (static_cast<int>(c.darts.size()) != h.edge_count()) {
        v.fail("circuit length " + std::to_string(c.darts.size()) + " != m = " +
               std::to_string(h.edge_count()));
        return v;
    }
    std::vector<int> uses(h.edge_count(), 0);
    for (int d : c.darts)
        ++uses[Embedding::edge_of(d)];
    for (int e = 0; e < h.edge_count(); ++e)
        if (uses[e] != 1)
            v.fail("edge " + std::to_string(e) + " traversed " + std::to_string(uses[e]) +
                   " times");
    for (size_t i = 0; i < c.darts.size(); ++i) {
        int next = c.darts[(i + 1) % c.darts.size()];
        if (h.head(c.darts[i]) != h.tail(next))
            v.fail("darts " + std::to_string(i) + "," + std::to_string((i + 1) % c.darts.size()) +
                   " do not chain");
    }
    std::vector<int> counts(h.vertex_count(), 0);
    for (int d : c.darts)
        ++counts[h.tail(d)];
    for (int u = 0; u < h.vertex_count(); ++u)
        if (counts[u] != h.degree(u) / 2)
            v.fail("vertex " + std::to_string(u) + " visited " + std::to_string(counts[u]) +
                   " times, expected " + std::to_string(h.degree(u) / 2));
    return v;
}

OrientedConjugate orient_along(const Embedding& h, const EulerCircuit& c)
{
    OrientedConjugate oc;
    oc.g.vertex_count = h.vertex_count();
    oc.g.arcs.assign(h.edge_count(), {-1, -1});
    for (int d : c.darts)
        oc.g.arcs[Embedding::edge_of(d)] = {h.tail(d), h.head(d)};
    oc.in_degree.assign(h.vertex_count(), 0);
    oc.out_degree.assign(h.vertex_count(), 0);
    for (auto [t, hd] : oc.g.arcs) {
        ++oc.out_degree[t];
        ++oc.in_degree[hd];
    }
    return oc;
}

Verdict orientation_audit(const OrientedConjugate& oc, const Embedding& h)
{
    Verdict v;
    for (int u = 0; u < oc.g.vertex_count; ++u) {
        if (oc.in_degree[u] != oc.out_degree[u])
            v.fail("vertex " + std::to_string(u) + ": in " + std::to_string(oc.in_degree[u]) +
                   " != out " + std::to_string(oc.out_degree[u]));
        if (oc.in_degree[u] + oc.out_degree[u] != h.degree(u))
            v.fail("vertex " + std::to_string(u) + ": arc count disagrees with degree");
    }
    if (h.is_simple()) {
        std::vector<std::pair<int, int>> seen(oc.g.arcs);
        std::sort(seen.begin(), seen.end());
        for (auto [t, hd] : oc.g.arcs)
            if (std::binary_search(seen.begin(), seen.end(), std::make_pair(hd, t)))
                v.fail("opposite arcs " + std::to_string(t) + "<->" + std::to_string(hd));
    }
    return v;
}

}  // namespace pct
