#include "pct/generators.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <stdexcept>

namespace pct {

namespace {

// Insert w into rot[x] between the cyclically adjacent neighbors q and p,
// with q immediately followed by p.  The pair is unique in a simple rotation.
void insert_between(std::vector<int>& rot, int q, int p, int w)
{
    const int deg = static_cast<int>(rot.size());
    for (int i = 0; i < deg; ++i) {
        if (rot[i] == q && rot[(i + 1) % deg] == p) {
            rot.insert(rot.begin() + i + 1, w);
            return;
        }
    }
    throw std::logic_error("adjacent neighbor pair not found in rotation");
}

// Same, but the pair may appear in either order (orientation unknown).
void insert_between_either(std::vector<int>& rot, int u, int v, int w)
{
    const int deg = static_cast<int>(rot.size());
    for (int i = 0; i < deg; ++i) {
        int a = rot[i], b = rot[(i + 1) % deg];
        if ((a == u && b == v) || (a == v && b == u)) {
            rot.insert(rot.begin() + i + 1, w);
            return;
        }
    }
    throw std::logic_error("corner not found in rotation");
}

// Insert a new vertex w into the triangular face walked (a, b, c).
// At each corner x with walk successor q and predecessor p, the new edge xw
// lands between q and p; the rotation of w is the face walk itself.
void insert_into_face(std::vector<std::vector<int>>& rots, int a, int b, int c)
{
    const int w = static_cast<int>(rots.size());
    insert_between(rots[a], b, c, w);
    insert_between(rots[b], c, a, w);
    insert_between(rots[c], a, b, w);
    rots.push_back({a, b, c});
}

// Diagonal flip of edge {u, v}: the two opposite corners x, y replace it.
// Returns false (input untouched) when the flip would create a parallel edge.
bool try_flip(std::vector<std::vector<int>>& rots, int u, int v)
{
    auto& ru = rots[u];
    const int du = static_cast<int>(ru.size());
    auto it = std::find(ru.begin(), ru.end(), v);
    if (it == ru.end())
        return false;
    const int i = static_cast<int>(it - ru.begin());
    const int x = ru[(i + du - 1) % du];
    const int y = ru[(i + 1) % du];
    if (x == y)
        return false;
    if (std::find(rots[x].begin(), rots[x].end(), y) != rots[x].end())
        return false;

    insert_between_either(rots[x], u, v, y);
    insert_between_either(rots[y], u, v, x);
    ru.erase(ru.begin() + i);
    auto& rv = rots[v];
    rv.erase(std::find(rv.begin(), rv.end(), u));
    return true;
}

std::vector<std::vector<int>> neighbor_lists(const Embedding& e)
{
    auto rows = e.rotations_with_edges();
    std::vector<std::vector<int>> rots(rows.size());
    for (size_t v = 0; v < rows.size(); ++v)
        for (auto [u, eid] : rows[v])
            rots[v].push_back(u);
    return rots;
}

}  // namespace

std::vector<std::vector<int>> tetrahedron_rotations()
{
    return {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
}

Embedding stacked(int target_n, uint64_t seed)
{
    if (target_n < 4)
        throw std::invalid_argument("stacked() needs target_n >= 4");
    SplitMix64 rng(seed);
    std::vector<std::vector<int>> rots = tetrahedron_rotations();
    while (static_cast<int>(rots.size()) < target_n) {
        Embedding e = Embedding::from_rotations(rots);
        FaceSet fs = enumerate_faces(e);
        int f = static_cast<int>(rng.below(fs.face_count()));
        auto vs = fs.face_vertices(e, f);
        insert_into_face(rots, vs[0], vs[1], vs[2]);
    }
    return Embedding::from_rotations(rots);
}

Embedding random_flips(const Embedding& t, int steps, uint64_t seed)
{
    if (t.vertex_count() < 4)
        throw std::invalid_argument("random_flips() needs n >= 4");
    SplitMix64 rng(seed);
    auto rots = neighbor_lists(t);

    for (int s = 0; s < steps; ++s) {
        // Deterministic edge order: scan rotations, keep u < v pairs.
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < static_cast<int>(rots.size()); ++v)
            for (int u : rots[v])
                if (v < u)
                    edges.emplace_back(v, u);
        auto [u, v] = edges[rng.below(edges.size())];
        try_flip(rots, u, v);
    }
    return Embedding::from_rotations(rots);
}

std::vector<Embedding> exhaustive_sphere(int n, bool allow_large, uint64_t start_seed)
{
    if (n < 4)
        throw std::invalid_argument("exhaustive_sphere() needs n >= 4");
    if (n > 9 && !allow_large)
        throw ResourceGuard("class counts grow quickly beyond n = 9; pass the override to proceed");

    std::map<CanonicalCode, Embedding> classes;
    std::deque<CanonicalCode> queue;

    auto visit = [&](const Embedding& t) {
        auto [code, form] = canonical_form(t);
        if (classes.emplace(code, std::move(form)).second)
            queue.push_back(std::move(code));
    };

    visit(stacked(n, start_seed));
    while (!queue.empty()) {
        Embedding t = classes.at(queue.front());
        queue.pop_front();
        auto rots = neighbor_lists(t);
        for (int e = 0; e < t.edge_count(); ++e) {
            auto [u, v] = t.edge_ends(e);
            auto copy = rots;
            if (try_flip(copy, u, v))
                visit(Embedding::from_rotations(copy));
        }
    }

    std::vector<Embedding> out;
    out.reserve(classes.size());
    for (auto& [code, emb] : classes)
        out.push_back(std::move(emb));
    return out;
}

DiskTriangulation disk_polygon(int boundary_size, int interior_points, uint64_t seed)
{
    if (boundary_size < 3)
        throw std::invalid_argument("disk_polygon() needs boundary_size >= 3");
    if (interior_points < 0)
        throw std::invalid_argument("interior_points must be >= 0");
    SplitMix64 rng(seed);

    const int b = boundary_size;
    // Boundary rotations start as [next, prev] on the polygon 0..b-1; ear
    // clipping inserts chords between them, keeping counterclockwise order.
    std::vector<std::vector<int>> rots(b);
    for (int v = 0; v < b; ++v)
        rots[v] = {(v + 1) % b, (v + b - 1) % b};

    std::vector<int> polygon(b);
    for (int v = 0; v < b; ++v)
        polygon[v] = v;
    std::vector<std::array<int, 3>> triangles;

    while (polygon.size() > 3) {
        const int sz = static_cast<int>(polygon.size());
        int i = static_cast<int>(rng.below(sz));
        int a = polygon[(i + sz - 1) % sz];
        int mid = polygon[i];
        int c = polygon[(i + 1) % sz];
        // Chord a-c: at a it sits right after mid, at c right before mid.
        auto& ra = rots[a];
        ra.insert(std::find(ra.begin(), ra.end(), mid) + 1, c);
        auto& rc = rots[c];
        rc.insert(std::find(rc.begin(), rc.end(), mid), a);
        triangles.push_back({a, mid, c});
        polygon.erase(polygon.begin() + i);
    }
    triangles.push_back({polygon[0], polygon[1], polygon[2]});

    for (int k = 0; k < interior_points; ++k) {
        int f = static_cast<int>(rng.below(triangles.size()));
        auto [x, y, z] = triangles[f];
        insert_into_face(rots, x, y, z);
        int w = static_cast<int>(rots.size()) - 1;
        triangles[f] = {x, y, w};
        triangles.push_back({y, z, w});
        triangles.push_back({z, x, w});
    }

    DiskTriangulation out{Embedding::from_rotations(rots), {1, 0}, -1};
    FaceSet fs = enumerate_faces(out.embedding);
    for (int d : out.embedding.rotation(1))
        if (out.embedding.head(d) == 0) {
            out.outer_face_index = fs.face_of_dart[d];
            break;
        }
    return out;
}

}  // namespace pct
