#pragma once

#include <string>
#include <vector>

#include "pct/embedding.hpp"

namespace pct {

/// Canonical code of a simple embedding, invariant under vertex relabeling
/// and reflection.  Computed by running a breadth-style labeled traversal
/// from every dart in both rotation directions and keeping the
/// lexicographically smallest token sequence.  Quadratic, fine at the
/// instance sizes handled here.
using CanonicalCode = std::vector<int>;

CanonicalCode canonical_code(const Embedding& e);

/// The relabeled embedding realizing the canonical code: vertices renamed in
/// traversal order, rotations rotated to the traversal start.  Two isomorphic
/// maps yield byte-identical canonical forms.
std::pair<CanonicalCode, Embedding> canonical_form(const Embedding& e);

std::string code_to_hex(const CanonicalCode& code);

}  // namespace pct
