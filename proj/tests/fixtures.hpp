#pragma once

#include <vector>

#include "pct/embedding.hpp"

namespace fixtures {

// Counterclockwise rotation systems, traced by hand.

inline std::vector<std::vector<int>> triangle()
{
    return {{1, 2}, {2, 0}, {0, 1}};
}

inline std::vector<std::vector<int>> k4()
{
    return {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
}

// Antipodal pairs (0,5), (1,4), (2,3); faces {0,1,2}, {0,3,1}, {0,2,4},
// {0,4,3}, {5,1,3}, {1,5,2}, {2,5,4}, {4,5,3}.
inline std::vector<std::vector<int>> octahedron()
{
    return {{1, 2, 4, 3}, {0, 3, 5, 2}, {0, 1, 5, 4}, {0, 4, 5, 1}, {0, 2, 5, 3}, {1, 3, 4, 2}};
}

// 4-cycle 0-1-2-3 with the chord 0-2; finite faces {0,1,2} and {0,2,3},
// outer walk of length 4 through the dart (1,0).
inline std::vector<std::vector<int>> fan2()
{
    return {{1, 2, 3}, {2, 0}, {3, 0, 1}, {0, 2}};
}

// Gyroelongated bipyramid on 12 vertices: apex 0, upper ring 1..5, lower
// ring 6..10 (vertex 5+j below the gap between ring vertices j and j+1),
// apex 11.  All degrees 5, 20 triangular faces.
inline std::vector<std::vector<int>> icosahedron()
{
    auto up = [](int i) { return 1 + (i - 1 + 5) % 5; };    // ring index 1..5
    auto down = [](int j) { return 6 + (j - 1 + 5) % 5; };  // ring index 1..5 -> 6..10
    std::vector<std::vector<int>> rot(12);
    rot[0] = {1, 2, 3, 4, 5};
    for (int i = 1; i <= 5; ++i)
        rot[i] = {0, up(i - 1), down(i - 1), down(i), up(i + 1)};
    for (int j = 1; j <= 5; ++j)
        rot[5 + j] = {up(j), down(j - 1), 11, down(j + 1), up(j + 1)};
    rot[11] = {down(5), down(4), down(3), down(2), down(1)};
    return rot;
}

inline pct::Embedding embed(const std::vector<std::vector<int>>& rots)
{
    return pct::Embedding::from_rotations(rots);
}

}  // namespace fixtures
