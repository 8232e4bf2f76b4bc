#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pct {

struct MalformedRotation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Disconnected : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ModeViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotEulerian : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ResourceGuard : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SizeCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ClassificationDefect : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Mode { sphere, disk };
const char* to_string(Mode m);

/// Outcome of an audit.  pass == true means no issues were recorded; a
/// failing verdict carries one message per violation and never throws.
struct Verdict {
    bool pass = true;
    std::vector<std::string> issues;

    void fail(std::string msg)
    {
        pass = false;
        issues.push_back(std::move(msg));
    }
    explicit operator bool() const { return pass; }
    std::string summary() const;
};

// A planar embedding stored as a rotation system over darts.
//
// Edge e owns darts 2e and 2e+1 (each the other's twin); dart 2e runs from
// edge_ends(e).first to edge_ends(e).second.  rotation(v) lists the darts
// leaving v in counterclockwise order.  Parallel edges are allowed (they
// carry distinct edge ids); loops are not.
class Embedding {
public:
    Embedding() = default;  // empty; fill via one of the from_* builders

    /// Build from counterclockwise neighbor lists of a simple graph.
    /// Throws MalformedRotation on asymmetric/duplicate/loop entries and
    /// Disconnected when the graph is not connected.
    static Embedding from_rotations(const std::vector<std::vector<int>>& neighbors);

    /// Multigraph variant: each rotation entry names (neighbor, edge id).
    /// Edge ids must be exactly 0..m-1, each appearing at both endpoints.
    static Embedding from_rotations_with_edges(
        int vertex_count,
        const std::vector<std::vector<std::pair<int, int>>>& neighbors);

    /// Assemble from an explicit edge list plus per-vertex dart rotations.
    static Embedding from_darts(int vertex_count,
                                std::vector<std::pair<int, int>> edges,
                                const std::vector<std::vector<int>>& rotations);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int dart_count() const { return 2 * m_; }

    std::pair<int, int> edge_ends(int e) const { return edge_ends_[e]; }
    static int twin(int d) { return d ^ 1; }
    static int edge_of(int d) { return d >> 1; }
    int tail(int d) const
    {
        const auto& e = edge_ends_[d >> 1];
        return (d & 1) ? e.second : e.first;
    }
    int head(int d) const { return tail(d ^ 1); }

    const std::vector<int>& rotation(int v) const { return rot_[v]; }
    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    int rotation_pos(int d) const { return pos_[d]; }

    // Face-tracing convention used throughout: from dart (u,v) the next dart
    // of the same face leaves v toward the neighbor listed immediately
    // before u in the counterclockwise rotation at v.  Every face count in
    // this library refers to the orbits of this rule.
    int next_face_dart(int d) const
    {
        int t = twin(d);
        int v = tail(t);
        const auto& r = rot_[v];
        int i = pos_[t];
        int deg = static_cast<int>(r.size());
        return r[(i + deg - 1) % deg];
    }

    bool is_simple() const;
    bool has_edge(int u, int v) const;

    /// Rotation lists annotated with edge ids (serialization, surgery).
    std::vector<std::vector<std::pair<int, int>>> rotations_with_edges() const;

    std::vector<int> degree_sequence() const;

private:
    void index_positions();
    void require_connected() const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::pair<int, int>> edge_ends_;
    std::vector<std::vector<int>> rot_;  // vertex -> outgoing darts, ccw
    std::vector<int> pos_;               // dart -> index within rot_[tail]
};

/// Faces of an embedding: one directed boundary walk per face, each dart in
/// exactly one walk.  euler_ok records whether n - m + f == 2.
struct FaceSet {
    std::vector<std::vector<int>> faces;  // walks of darts
    std::vector<int> face_of_dart;
    int outer_face_index = -1;  // designated by the caller (disk), else -1
    bool euler_ok = false;

    int face_count() const { return static_cast<int>(faces.size()); }
    int finite_count() const { return face_count() - 1; }
    int face_length(int f) const { return static_cast<int>(faces[f].size()); }
    std::vector<int> face_vertices(const Embedding& e, int f) const;
    std::vector<int> face_edges(int f) const;
};

FaceSet enumerate_faces(const Embedding& e);

struct GraphStats {
    int n = 0;
    int m = 0;
    int f = 0;
    int mu_finite = 0;
    int nu = 0;
    std::map<int, int> degree_histogram;
};

GraphStats graph_stats(const Embedding& e, const FaceSet& fs);

/// nu = m - n + 1 (connected embeddings).
int cyclomatic_number(const Embedding& e);

/// Sphere mode: every face a triangle and m == 3n - 6.
/// Disk mode: every face except the designated outer one a triangle.
/// Both modes require a simple graph and a genus-zero rotation system.
Verdict validate_triangulation(const Embedding& e, Mode mode, int outer_face_index = -1);

}  // namespace pct
