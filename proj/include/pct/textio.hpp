#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pct/embedding.hpp"

namespace pct {

// Triangulation text format, one record per embedding:
//
//   # comment (anywhere)
//   !outer: u v          optional; names a dart whose face is the outer face
//   0: 1 2 3             counterclockwise neighbors of vertex 0
//   1: 0 3 2
//   ...
//
// Records are separated by blank lines.  A neighbor token may carry an edge
// id suffix `v@e`; the suffix is required whenever the record has parallel
// edges and must then be present on every token of the record.
struct ParsedInstance {
    Embedding embedding;
    std::optional<std::pair<int, int>> outer_dart;  // from !outer
};

std::vector<ParsedInstance> parse_instances(std::istream& in);
std::vector<ParsedInstance> parse_instances_file(const std::string& path);

void write_instance(std::ostream& out, const Embedding& e,
                    std::optional<std::pair<int, int>> outer_dart = std::nullopt,
                    const std::string& comment = "");
std::string instance_to_string(const Embedding& e,
                               std::optional<std::pair<int, int>> outer_dart = std::nullopt,
                               const std::string& comment = "");

/// Face index of the face containing the dart (u, v), or -1.
int face_of_dart_pair(const Embedding& e, const FaceSet& fs, int u, int v);

}  // namespace pct
