#include "pct/canonical.hpp"

#include <algorithm>
#include <cstdio>

namespace pct {

namespace {

// Labeled traversal from one root dart.  Vertices are labeled in discovery
// order; each vertex's rotation is read starting at its discovery dart,
// stepping forward (dir=+1) or backward (dir=-1, the mirror map).  The token
// stream lists neighbor labels per vertex, -1 terminated.
CanonicalCode traverse(const Embedding& e, int root, int dir, std::vector<int>* order_out)
{
    const int n = e.vertex_count();
    std::vector<int> label(n, -1);
    std::vector<int> start(n, -1);
    std::vector<int> order;
    order.reserve(n);

    label[e.tail(root)] = 0;
    start[e.tail(root)] = root;
    order.push_back(e.tail(root));

    CanonicalCode tokens;
    tokens.reserve(2 * e.edge_count() + n);

    for (size_t idx = 0; idx < order.size(); ++idx) {
        int v = order[idx];
        const auto& rot = e.rotation(v);
        const int deg = static_cast<int>(rot.size());
        int p = e.rotation_pos(start[v]);
        for (int step = 0; step < deg; ++step) {
            int d = rot[((p + step * dir) % deg + deg) % deg];
            int u = e.head(d);
            if (label[u] == -1) {
                label[u] = static_cast<int>(order.size());
                start[u] = Embedding::twin(d);
                order.push_back(u);
            }
            tokens.push_back(label[u]);
        }
        tokens.push_back(-1);
    }
    if (order_out)
        *order_out = order;
    return tokens;
}

}  // namespace

CanonicalCode canonical_code(const Embedding& e)
{
    return canonical_form(e).first;
}

std::pair<CanonicalCode, Embedding> canonical_form(const Embedding& e)
{
    if (!e.is_simple())
        throw MalformedRotation("canonical codes are defined for simple embeddings only");

    CanonicalCode best;
    int best_root = -1;
    int best_dir = 0;
    for (int root = 0; root < e.dart_count(); ++root) {
        for (int dir : {+1, -1}) {
            CanonicalCode code = traverse(e, root, dir, nullptr);
            if (best.empty() || code < best) {
                best = std::move(code);
                best_root = root;
                best_dir = dir;
            }
        }
    }

    std::vector<int> order;
    traverse(e, best_root, best_dir, &order);
    std::vector<int> label(e.vertex_count());
    for (int i = 0; i < e.vertex_count(); ++i)
        label[order[i]] = i;

    // Rebuild neighbor lists directly from the winning token stream: the
    // tokens between separators are exactly the relabeled rotations.
    std::vector<std::vector<int>> neighbors(e.vertex_count());
    size_t t = 0;
    for (int v = 0; v < e.vertex_count(); ++v) {
        while (best[t] != -1)
            neighbors[v].push_back(best[t++]);
        ++t;
    }
    return {best, Embedding::from_rotations(neighbors)};
}

std::string code_to_hex(const CanonicalCode& code)
{
    std::string out;
    out.reserve(code.size() * 3);
    char buf[16];
    for (int v : code) {
        if (v < 0) {
            out.push_back('.');
        } else {
            std::snprintf(buf, sizeof buf, "%x", v);
            out += buf;
            out.push_back(',');
        }
    }
    return out;
}

}  // namespace pct
