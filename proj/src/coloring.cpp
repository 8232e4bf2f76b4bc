#include "pct/coloring.hpp"

#include <algorithm>

namespace pct {

namespace {

struct Searcher {
    const std::vector<std::vector<int>>& adj;
    int k;
    std::vector<int> colors;

    bool feasible(int v, int c) const
    {
        for (int u : adj[v])
            if (colors[u] == c)
                return false;
        return true;
    }

    int pick_vertex() const
    {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
            if (colors[v] != -1)
                continue;
            int sat = 0;
            for (int c = 0; c < k; ++c)
                if (!feasible(v, c))
                    ++sat;
            int deg = static_cast<int>(adj[v].size());
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool solve(int colored, int max_used)
    {
        if (colored == static_cast<int>(adj.size()))
            return true;
        int v = pick_vertex();
        for (int c = 0; c <= std::min(max_used + 1, k - 1); ++c) {
            if (!feasible(v, c))
                continue;
            colors[v] = c;
            if (solve(colored + 1, std::max(max_used, c)))
                return true;
            colors[v] = -1;
        }
        return false;
    }
};

}  // namespace

bool is_proper_coloring(const Embedding& g, const std::vector<int>& colors, int cap)
{
    if (static_cast<int>(colors.size()) != g.vertex_count())
        return false;
    for (int c : colors)
        if (c < 0 || c >= cap)
            return false;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge_ends(e);
        if (colors[u] == colors[v])
            return false;
    }
    return true;
}

ChromaticVerdict chromatic_check(const Embedding& g, int color_cap, int size_cap)
{
    if (g.vertex_count() > size_cap)
        throw SizeCapExceeded("graph has " + std::to_string(g.vertex_count()) +
                              " vertices, cap is " + std::to_string(size_cap));

    std::vector<std::vector<int>> adj(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge_ends(e);
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& lst : adj) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }

    ChromaticVerdict verdict;
    for (int k = 1; k <= color_cap; ++k) {
        Searcher s{adj, k, std::vector<int>(g.vertex_count(), -1)};
        if (s.solve(0, -1)) {
            if (!is_proper_coloring(g, s.colors, k))
                throw std::logic_error("coloring witness failed revalidation");
            verdict.gamma_upper = k;
            verdict.within_cap = true;
            verdict.witness = std::move(s.colors);
            return verdict;
        }
    }
    return verdict;
}

}  // namespace pct
