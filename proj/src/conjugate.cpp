#include "pct/conjugate.hpp"

#include <algorithm>
#include <set>

namespace pct {

bool ConjugateGraph::has_two_cycle() const
{
    std::vector<std::pair<int, int>> pairs;
    for (int e = 0; e < h.edge_count(); ++e) {
        auto [u, v] = h.edge_ends(e);
        pairs.push_back(std::minmax(u, v));
    }
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end();
}

ConjugateGraph conjugate(const Embedding& t, Mode mode, int outer_face_index)
{
    Verdict ok = validate_triangulation(t, mode, outer_face_index);
    if (!ok)
        throw ModeViolation("input fails " + std::string(to_string(mode)) +
                            " validation: " + ok.summary());

    FaceSet fs = enumerate_faces(t);
    ConjugateGraph cg;
    cg.mode = mode;
    cg.l_vertex_count = t.vertex_count();
    cg.l_face_count = fs.face_count();
    cg.l_degree = t.degree_sequence();
    for (int f = 0; f < fs.face_count(); ++f)
        cg.l_face_len.push_back(fs.face_length(f));
    for (int f = 0; f < fs.face_count(); ++f)
        if (mode == Mode::sphere || f != outer_face_index)
            cg.median_faces.push_back(f);
    cg.median_face_count = static_cast<int>(cg.median_faces.size());

    // H-edges: one per corner of each median face, numbered face by face in
    // walk order.  corner j of face F joins the midpoints of the j-th and
    // (j+1)-th boundary edges and passes the head of the j-th dart.
    std::vector<std::pair<int, int>> h_edges;
    // corner_id[face][j]; only median faces filled
    std::vector<std::vector<int>> corner_id(fs.face_count());
    for (int f : cg.median_faces) {
        const auto& walk = fs.faces[f];
        const int k = static_cast<int>(walk.size());
        corner_id[f].resize(k);
        for (int j = 0; j < k; ++j) {
            corner_id[f][j] = static_cast<int>(h_edges.size());
            int a = Embedding::edge_of(walk[j]);
            int b = Embedding::edge_of(walk[(j + 1) % k]);
            h_edges.emplace_back(a, b);
            cg.edge_origin.push_back({f, t.head(walk[j])});
        }
        // The class-1 cycle of f is the face of H traced from this dart.
        cg.median_anchor_dart.push_back(2 * corner_id[f][0]);
    }

    // Rotation at the midpoint of L-edge e, counterclockwise: for the face
    // left of dart d = 2e first the corner ahead of d then the corner behind
    // it, then the same for the twin's face.  Skipped faces (disk outer)
    // drop both corners, leaving a degree-2 vertex.
    std::vector<int> pos_in_face(t.dart_count());
    for (int f = 0; f < fs.face_count(); ++f)
        for (int j = 0; j < static_cast<int>(fs.faces[f].size()); ++j)
            pos_in_face[fs.faces[f][j]] = j;

    std::vector<std::vector<int>> h_rot(t.edge_count());
    for (int e = 0; e < t.edge_count(); ++e) {
        for (int d : {2 * e, 2 * e + 1}) {
            int f = fs.face_of_dart[d];
            if (corner_id[f].empty())
                continue;
            const int k = static_cast<int>(corner_id[f].size());
            int j = pos_in_face[d];
            int ahead = corner_id[f][j];
            int behind = corner_id[f][(j + k - 1) % k];
            // the corner ahead stores e as its first endpoint, the corner
            // behind as its second; pick the dart leaving e's midpoint
            h_rot[e].push_back(2 * ahead);
            h_rot[e].push_back(2 * behind + 1);
        }
    }

    cg.h = Embedding::from_darts(t.edge_count(), h_edges, h_rot);
    for (int e = 0; e < t.edge_count(); ++e)
        cg.vertex_origin.push_back(t.edge_ends(e));

    cg.external.assign(t.edge_count(), 0);
    if (mode == Mode::disk)
        for (int d : fs.faces[outer_face_index])
            cg.external[Embedding::edge_of(d)] = 1;
    return cg;
}

std::pair<int, int> FaceClassification::counts_excluding(int excluded_face) const
{
    int c1 = class1_count(), c2 = class2_count();
    for (auto& [f, _] : class1)
        if (f == excluded_face)
            --c1;
    for (auto& [f, _] : class2)
        if (f == excluded_face)
            --c2;
    return {c1, c2};
}

FaceClassification classify_faces(const ConjugateGraph& cg)
{
    FaceClassification cls;
    cls.faces = enumerate_faces(cg.h);
    if (!cls.faces.euler_ok)
        throw ClassificationDefect("conjugate embedding is not spherical");

    std::vector<char> claimed(cls.faces.face_count(), 0);

    // Class 1 by construction: the cycle of f's medians is the face traced
    // from f's anchor dart.  Its edge set must be exactly f's corners; both
    // sides of that cycle have the same provenance for a lone triangle, so
    // the anchor, not the provenance, picks the inner side.
    for (size_t i = 0; i < cg.median_faces.size(); ++i) {
        int lf = cg.median_faces[i];
        int hf = cls.faces.face_of_dart[cg.median_anchor_dart[i]];
        if (claimed[hf])
            throw ClassificationDefect("two median cycles trace the same face");
        auto edges = cls.faces.face_edges(hf);
        std::sort(edges.begin(), edges.end());
        bool ok = std::adjacent_find(edges.begin(), edges.end()) == edges.end() &&
                  static_cast<int>(edges.size()) == cg.l_face_len[lf];
        for (int e : edges)
            ok &= cg.edge_origin[e].l_face == lf;
        if (!ok)
            throw ClassificationDefect("median cycle of face " + std::to_string(lf) +
                                       " is not a face of the conjugate");
        claimed[hf] = 1;
        cls.class1.emplace_back(hf, lf);
    }

    for (int f = 0; f < cls.faces.face_count(); ++f) {
        if (claimed[f])
            continue;
        auto edges = cls.faces.face_edges(f);
        std::vector<int> sorted = edges;
        std::sort(sorted.begin(), sorted.end());
        bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        bool same_corner = true;
        int cv = cg.edge_origin[edges[0]].corner_vertex;
        for (int e : edges)
            same_corner &= (cg.edge_origin[e].corner_vertex == cv);

        if (same_corner && distinct) {
            cls.class2.emplace_back(f, cv);
        } else if (cg.mode == Mode::disk && cls.unmatched_face == -1) {
            cls.unmatched_face = f;
            cls.infinite_face_class = InfiniteFaceClass::separate;
        } else {
            throw ClassificationDefect("face " + std::to_string(f) +
                                       " of the conjugate fits neither class");
        }
    }

    std::set<int> origins;
    for (auto& [f, v] : cls.class2)
        if (!origins.insert(v).second)
            throw ClassificationDefect("two class-2 faces surround vertex " + std::to_string(v));
    return cls;
}

DegreeAudit degree_audit(const ConjugateGraph& cg)
{
    DegreeAudit audit;
    for (int v = 0; v < cg.h.vertex_count(); ++v) {
        int deg = cg.h.degree(v);
        ++audit.histogram[deg];
        if (deg != 2 && deg != 4)
            audit.verdict.fail("vertex " + std::to_string(v) + " has degree " + std::to_string(deg));
        else if (deg == 2 && !cg.external[v])
            audit.verdict.fail("internal vertex " + std::to_string(v) + " has degree 2");
    }
    return audit;
}

Verdict face_intersection_audit(const ConjugateGraph& cg, const FaceClassification& cls)
{
    Verdict v;
    auto edge_set = [&](int f) {
        auto es = cls.faces.face_edges(f);
        std::sort(es.begin(), es.end());
        return es;
    };
    auto vertex_set = [&](int f) {
        auto vs = cls.faces.face_vertices(cg.h, f);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    };

    std::vector<std::vector<int>> es(cls.faces.face_count()), vs(cls.faces.face_count());
    for (int f = 0; f < cls.faces.face_count(); ++f) {
        es[f] = edge_set(f);
        vs[f] = vertex_set(f);
    }
    auto shared = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    };

    for (size_t i = 0; i < cls.class1.size(); ++i)
        for (size_t j = i + 1; j < cls.class1.size(); ++j) {
            int a = cls.class1[i].first, b = cls.class1[j].first;
            if (!shared(es[a], es[b]).empty())
                v.fail("class-1 faces " + std::to_string(a) + "," + std::to_string(b) +
                       " share an edge");
        }
    for (size_t i = 0; i < cls.class2.size(); ++i)
        for (size_t j = i + 1; j < cls.class2.size(); ++j) {
            int a = cls.class2[i].first, b = cls.class2[j].first;
            if (!shared(es[a], es[b]).empty())
                v.fail("class-2 faces " + std::to_string(a) + "," + std::to_string(b) +
                       " share an edge");
        }
    for (auto& [a, lf] : cls.class1)
        for (auto& [b, lv] : cls.class2) {
            auto se = shared(es[a], es[b]);
            auto sv = shared(vs[a], vs[b]);
            if (se.empty() && sv.empty())
                continue;
            if (se.size() == 1) {
                auto [x, y] = cg.h.edge_ends(se[0]);
                std::vector<int> ends{std::min(x, y), std::max(x, y)};
                if (sv == ends)
                    continue;
            }
            v.fail("faces " + std::to_string(a) + "," + std::to_string(b) +
                   " share " + std::to_string(se.size()) + " edges, " +
                   std::to_string(sv.size()) + " vertices");
        }
    for (auto& [b, lv] : cls.class2)
        for (int u : vs[b])
            if (cg.h.degree(u) != 4)
                v.fail("vertex " + std::to_string(u) + " on class-2 face " + std::to_string(b) +
                       " has degree " + std::to_string(cg.h.degree(u)));
    return v;
}

namespace {

// Articulation points by iterative depth-first lowpoints.
std::vector<int> articulation_points(const Embedding& g)
{
    const int n = g.vertex_count();
    std::vector<int> tin(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
    std::vector<char> art(n, 0);
    int timer = 0;

    for (int root = 0; root < n; ++root) {
        if (tin[root] != -1)
            continue;
        std::vector<std::pair<int, size_t>> stack{{root, 0}};
        tin[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            if (idx < g.rotation(v).size()) {
                int d = g.rotation(v)[idx++];
                int u = g.head(d);
                if (parent[v] != -1 && Embedding::twin(d) == parent[v])
                    continue;
                if (tin[u] == -1) {
                    parent[u] = d;  // dart used to enter u
                    tin[u] = low[u] = timer++;
                    ++child_count[v];
                    stack.emplace_back(u, 0);
                } else {
                    low[v] = std::min(low[v], tin[u]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().first;
                    low[p] = std::min(low[p], low[v]);
                    if (p != root && low[v] >= tin[p])
                        art[p] = 1;
                }
            }
        }
        if (child_count[root] > 1)
            art[root] = 1;
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (art[v])
            out.push_back(v);
    return out;
}

}  // namespace

Verdict cut_vertex_audit(const ConjugateGraph& cg)
{
    Verdict v;
    for (int u : articulation_points(cg.h))
        if (cg.h.degree(u) != 4)
            v.fail("cut vertex " + std::to_string(u) + " has degree " +
                   std::to_string(cg.h.degree(u)));
    return v;
}

}  // namespace pct
