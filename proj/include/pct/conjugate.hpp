#pragma once

#include <map>
#include <vector>

#include "pct/embedding.hpp"

namespace pct {

/// Where an edge of the conjugate graph comes from: the face of L it lies
/// in and the corner vertex of L it passes.
struct MedianOrigin {
    int l_face;
    int corner_vertex;
};

// The conjugate H of a triangulation L: one H-vertex per L-edge (ids equal),
// and for every median-carrying face of L its boundary edges are joined into
// a cycle of side midpoints.  Sphere mode places medians in every face, disk
// mode only in faces other than the designated outer one.
struct ConjugateGraph {
    Embedding h;
    Mode mode;
    std::vector<std::pair<int, int>> vertex_origin;  // H-vertex -> L-edge endpoints
    std::vector<MedianOrigin> edge_origin;           // H-edge -> (L-face, L-corner)
    std::vector<char> external;                      // H-vertex on L's outer boundary
    int l_vertex_count = 0;
    int l_face_count = 0;
    int median_face_count = 0;
    std::vector<int> l_degree;
    std::vector<int> l_face_len;
    std::vector<int> median_faces;        // L-face ids carrying medians
    std::vector<int> median_anchor_dart;  // per median face: an H-dart on its class-1 cycle

    bool has_two_cycle() const;
};

ConjugateGraph conjugate(const Embedding& t, Mode mode, int outer_face_index = -1);

enum class InfiniteFaceClass { not_designated, separate };

// Faces of H split into the two classes: class 1 sits inside one face of L
// (its edges are that face's medians), class 2 surrounds one vertex of L.
// In disk mode exactly one face (the outer region) belongs to neither class.
struct FaceClassification {
    FaceSet faces;
    std::vector<std::pair<int, int>> class1;  // (H-face, L-face)
    std::vector<std::pair<int, int>> class2;  // (H-face, L-vertex)
    int unmatched_face = -1;                  // disk outer region, else -1
    InfiniteFaceClass infinite_face_class = InfiniteFaceClass::not_designated;

    int class1_count() const { return static_cast<int>(class1.size()); }
    int class2_count() const { return static_cast<int>(class2.size()); }
    /// Face-class counts of a plane drawing whose infinite face is `excluded`.
    std::pair<int, int> counts_excluding(int excluded_face) const;
};

/// Throws ClassificationDefect when some finite face fits neither class;
/// that can only happen on a corrupted construction.
FaceClassification classify_faces(const ConjugateGraph& cg);

struct DegreeAudit {
    Verdict verdict;
    std::map<int, int> histogram;
};

/// All degrees in {2, 4}; degree 2 only on external vertices; every internal
/// vertex of degree exactly 4.
DegreeAudit degree_audit(const ConjugateGraph& cg);

/// Clause (a): no two class-1 faces share an edge.
/// Clause (b): no two class-2 faces share an edge.
/// Clause (c): each class-1/class-2 pair shares nothing or exactly one edge
///             together with that edge's two endpoints.
/// Clause (d): vertices on class-2 boundaries have degree 4.
Verdict face_intersection_audit(const ConjugateGraph& cg, const FaceClassification& cls);

/// Cut vertices of H (when any exist) must have degree 4.
Verdict cut_vertex_audit(const ConjugateGraph& cg);

}  // namespace pct
