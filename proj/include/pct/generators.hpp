#pragma once

#include <cstdint>
#include <vector>

#include "pct/canonical.hpp"
#include "pct/embedding.hpp"

namespace pct {

/// splitmix64 (Steele/Lea/Vigna).  Chosen over std::mt19937 +
/// distributions because its output is fully specified, so seeded corpora
/// are byte-identical across platforms and standard libraries.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next()
    {
        uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, n) by 128-bit multiply-shift.
    uint64_t below(uint64_t n)
    {
        return static_cast<uint64_t>((static_cast<__uint128_t>(next()) * n) >> 64);
    }
};

/// The tetrahedron rotation system used as the seed of all sphere generators.
std::vector<std::vector<int>> tetrahedron_rotations();

/// Sphere triangulation grown from the tetrahedron by repeatedly inserting a
/// vertex into a uniformly chosen face and joining it to the three corners.
Embedding stacked(int target_n, uint64_t seed);

/// Apply up to `steps` random diagonal flips; flips that would create a
/// parallel edge are skipped.  Vertex and edge counts are preserved.
Embedding random_flips(const Embedding& t, int steps, uint64_t seed);

/// One canonical representative per isomorphism class of simple sphere
/// triangulations on n vertices, sorted by canonical code.  Found by
/// breadth-first search of the diagonal-flip graph starting from stacked(n);
/// the flip graph of sphere triangulations is connected (Wagner 1936), so
/// the search is exhaustive.  Guarded at n > 9 unless allow_large is set.
std::vector<Embedding> exhaustive_sphere(int n, bool allow_large = false,
                                         uint64_t start_seed = 0);

struct DiskTriangulation {
    Embedding embedding;
    std::pair<int, int> outer_dart;  // a dart on the outer face walk
    int outer_face_index = -1;       // under enumerate_faces
};

/// Triangulated polygon (random ear decomposition) with `interior_points`
/// extra vertices inserted into random finite faces.
DiskTriangulation disk_polygon(int boundary_size, int interior_points, uint64_t seed);

}  // namespace pct
