#include "pct/embedding.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace pct {

const char* to_string(Mode m)
{
    return m == Mode::sphere ? "sphere" : "disk";
}

std::string Verdict::summary() const
{
    if (pass)
        return "pass";
    std::ostringstream os;
    os << "fail:";
    for (const auto& s : issues)
        os << " [" << s << "]";
    return os.str();
}

Embedding Embedding::from_rotations(const std::vector<std::vector<int>>& neighbors)
{
    const int n = static_cast<int>(neighbors.size());
    if (n <= 0)
        throw MalformedRotation("empty rotation system");

    for (int v = 0; v < n; ++v) {
        std::vector<int> seen;
        for (int u : neighbors[v]) {
            if (u < 0 || u >= n)
                throw MalformedRotation("vertex " + std::to_string(v) +
                                        " lists out-of-range neighbor " + std::to_string(u));
            if (u == v)
                throw MalformedRotation("loop at vertex " + std::to_string(v));
            seen.push_back(u);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw MalformedRotation("vertex " + std::to_string(v) +
                                    " lists a neighbor twice (edge ids required for parallel edges)");
    }
    for (int v = 0; v < n; ++v)
        for (int u : neighbors[v])
            if (std::count(neighbors[u].begin(), neighbors[u].end(), v) != 1)
                throw MalformedRotation("edge " + std::to_string(v) + "-" + std::to_string(u) +
                                        " not mirrored in the rotation at " + std::to_string(u));

    Embedding e;
    e.n_ = n;
    std::map<std::pair<int, int>, int> edge_id;
    for (int v = 0; v < n; ++v) {
        for (int u : neighbors[v]) {
            auto key = std::minmax(v, u);
            if (edge_id.find({key.first, key.second}) == edge_id.end()) {
                edge_id[{key.first, key.second}] = static_cast<int>(e.edge_ends_.size());
                e.edge_ends_.emplace_back(v, u);
            }
        }
    }
    e.m_ = static_cast<int>(e.edge_ends_.size());
    e.rot_.assign(n, {});
    for (int v = 0; v < n; ++v) {
        for (int u : neighbors[v]) {
            auto key = std::minmax(v, u);
            int id = edge_id[{key.first, key.second}];
            int d = (e.edge_ends_[id].first == v) ? 2 * id : 2 * id + 1;
            e.rot_[v].push_back(d);
        }
    }
    e.index_positions();
    e.require_connected();
    return e;
}

Embedding Embedding::from_rotations_with_edges(
    int vertex_count, const std::vector<std::vector<std::pair<int, int>>>& neighbors)
{
    if (vertex_count <= 0 || static_cast<int>(neighbors.size()) != vertex_count)
        throw MalformedRotation("bad vertex count");

    int max_edge = -1;
    for (const auto& lst : neighbors)
        for (auto [u, eid] : lst)
            max_edge = std::max(max_edge, eid);
    const int m = max_edge + 1;
    if (m <= 0)
        throw MalformedRotation("no edges");

    Embedding e;
    e.n_ = vertex_count;
    e.m_ = m;
    e.edge_ends_.assign(m, {-1, -1});
    std::vector<int> uses(m, 0);
    e.rot_.assign(vertex_count, {});

    for (int v = 0; v < vertex_count; ++v) {
        for (auto [u, eid] : neighbors[v]) {
            if (u < 0 || u >= vertex_count || eid < 0 || eid >= m)
                throw MalformedRotation("out-of-range entry at vertex " + std::to_string(v));
            if (u == v)
                throw MalformedRotation("loop at vertex " + std::to_string(v));
            if (uses[eid] == 0) {
                e.edge_ends_[eid] = {v, u};
                e.rot_[v].push_back(2 * eid);
            } else if (uses[eid] == 1) {
                if (e.edge_ends_[eid] != std::make_pair(u, v))
                    throw MalformedRotation("edge " + std::to_string(eid) +
                                            " endpoints disagree between rotations");
                e.rot_[v].push_back(2 * eid + 1);
            } else {
                throw MalformedRotation("edge " + std::to_string(eid) + " used more than twice");
            }
            ++uses[eid];
        }
    }
    for (int eid = 0; eid < m; ++eid)
        if (uses[eid] != 2)
            throw MalformedRotation("edge " + std::to_string(eid) + " must appear at both endpoints");

    e.index_positions();
    e.require_connected();
    return e;
}

Embedding Embedding::from_darts(int vertex_count, std::vector<std::pair<int, int>> edges,
                                const std::vector<std::vector<int>>& rotations)
{
    Embedding e;
    e.n_ = vertex_count;
    e.m_ = static_cast<int>(edges.size());
    e.edge_ends_ = std::move(edges);
    e.rot_ = rotations;

    std::vector<int> uses(2 * e.m_, 0);
    for (int v = 0; v < vertex_count; ++v) {
        for (int d : e.rot_[v]) {
            if (d < 0 || d >= 2 * e.m_)
                throw MalformedRotation("dart out of range");
            if (e.tail(d) != v)
                throw MalformedRotation("dart " + std::to_string(d) + " listed at wrong vertex");
            ++uses[d];
        }
    }
    for (int d = 0; d < 2 * e.m_; ++d)
        if (uses[d] != 1)
            throw MalformedRotation("dart " + std::to_string(d) + " must appear exactly once");

    e.index_positions();
    e.require_connected();
    return e;
}

void Embedding::index_positions()
{
    pos_.assign(2 * m_, -1);
    for (int v = 0; v < n_; ++v)
        for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i)
            pos_[rot_[v][i]] = i;
}

void Embedding::require_connected() const
{
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int d : rot_[v]) {
            int u = head(d);
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                q.push(u);
            }
        }
    }
    if (reached != n_)
        throw Disconnected("embedding is not connected (" + std::to_string(reached) + "/" +
                           std::to_string(n_) + " vertices reached)");
}

bool Embedding::is_simple() const
{
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(m_);
    for (const auto& [u, v] : edge_ends_) {
        if (u == v)
            return false;
        pairs.push_back(std::minmax(u, v));
    }
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

bool Embedding::has_edge(int u, int v) const
{
    for (int d : rot_[u])
        if (head(d) == v)
            return true;
    return false;
}

std::vector<std::vector<std::pair<int, int>>> Embedding::rotations_with_edges() const
{
    std::vector<std::vector<std::pair<int, int>>> out(n_);
    for (int v = 0; v < n_; ++v)
        for (int d : rot_[v])
            out[v].emplace_back(head(d), edge_of(d));
    return out;
}

std::vector<int> Embedding::degree_sequence() const
{
    std::vector<int> deg(n_);
    for (int v = 0; v < n_; ++v)
        deg[v] = degree(v);
    return deg;
}

FaceSet enumerate_faces(const Embedding& e)
{
    FaceSet fs;
    fs.face_of_dart.assign(e.dart_count(), -1);
    for (int d0 = 0; d0 < e.dart_count(); ++d0) {
        if (fs.face_of_dart[d0] != -1)
            continue;
        std::vector<int> walk;
        int d = d0;
        do {
            fs.face_of_dart[d] = static_cast<int>(fs.faces.size());
            walk.push_back(d);
            d = e.next_face_dart(d);
        } while (d != d0);
        fs.faces.push_back(std::move(walk));
    }
    fs.euler_ok = (e.vertex_count() - e.edge_count() + fs.face_count() == 2);
    return fs;
}

std::vector<int> FaceSet::face_vertices(const Embedding& e, int f) const
{
    std::vector<int> vs;
    vs.reserve(faces[f].size());
    for (int d : faces[f])
        vs.push_back(e.tail(d));
    return vs;
}

std::vector<int> FaceSet::face_edges(int f) const
{
    std::vector<int> es;
    es.reserve(faces[f].size());
    for (int d : faces[f])
        es.push_back(Embedding::edge_of(d));
    return es;
}

GraphStats graph_stats(const Embedding& e, const FaceSet& fs)
{
    GraphStats s;
    s.n = e.vertex_count();
    s.m = e.edge_count();
    s.f = fs.face_count();
    s.mu_finite = fs.finite_count();
    s.nu = s.m - s.n + 1;
    for (int v = 0; v < s.n; ++v)
        ++s.degree_histogram[e.degree(v)];
    return s;
}

int cyclomatic_number(const Embedding& e)
{
    return e.edge_count() - e.vertex_count() + 1;
}

Verdict validate_triangulation(const Embedding& e, Mode mode, int outer_face_index)
{
    Verdict v;
    FaceSet fs = enumerate_faces(e);
    if (!fs.euler_ok) {
        v.fail("rotation system is not spherical: n - m + f = " +
               std::to_string(e.vertex_count() - e.edge_count() + fs.face_count()));
        return v;
    }
    if (!e.is_simple())
        v.fail("graph has parallel edges");

    if (mode == Mode::sphere) {
        for (int f = 0; f < fs.face_count(); ++f)
            if (fs.face_length(f) != 3)
                v.fail("face " + std::to_string(f) + " has length " +
                       std::to_string(fs.face_length(f)));
        if (e.edge_count() != 3 * e.vertex_count() - 6)
            v.fail("m=" + std::to_string(e.edge_count()) + " differs from 3n-6=" +
                   std::to_string(3 * e.vertex_count() - 6));
    } else {
        if (outer_face_index < 0 || outer_face_index >= fs.face_count()) {
            v.fail("disk mode requires a designated outer face");
            return v;
        }
        for (int f = 0; f < fs.face_count(); ++f)
            if (f != outer_face_index && fs.face_length(f) != 3)
                v.fail("finite face " + std::to_string(f) + " has length " +
                       std::to_string(fs.face_length(f)));
    }
    return v;
}

}  // namespace pct
