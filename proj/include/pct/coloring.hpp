#pragma once

#include <vector>

#include "pct/embedding.hpp"

namespace pct {

struct ChromaticVerdict {
    int gamma_upper = 0;     // smallest color count found, 0 if none within cap
    bool within_cap = false;
    std::vector<int> witness;  // proper coloring when within_cap
};

/// Exact backtracking search for a proper vertex coloring with at most
/// color_cap colors.  Saturation-ordered with the usual symmetry cut (a
/// vertex may only open one new color).  The witness is revalidated against
/// the raw edge list before being returned.  Throws SizeCapExceeded when the
/// graph has more than size_cap vertices.
ChromaticVerdict chromatic_check(const Embedding& g, int color_cap = 3, int size_cap = 30);

/// Independent witness check: every edge bicolored, all colors in [0, cap).
bool is_proper_coloring(const Embedding& g, const std::vector<int>& colors, int cap);

}  // namespace pct
