#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kgck/alignment.hpp"

namespace kgck {

/// Reads a graph document {rank, vertices, edges: [{id, color, range,
/// source}], squares: [[e, f, f', e'], ...]}. Throws ParseError with the
/// offending field (or the JSON position) on malformed input, and
/// DuplicateId / UnknownColor / UnknownVertex from the structural check.
SkeletonSpec parse_graph(std::string_view text);
SkeletonSpec read_graph_file(const std::string& path);

/// Canonical form of a valid spec: ids sorted, squares normalised and
/// sorted, two-space indentation.
std::string emit_graph(const SkeletonSpec& spec);

/// Reads {"generators": [[path, ...], ...]} where each inner list is one
/// family given by path words; an entry may also be {"range": v, "paths":
/// [...]}, which allows the empty family.
std::vector<PathFamily> parse_generators(const KGraph& g, std::string_view text);
std::vector<PathFamily> read_generators_file(const KGraph& g, const std::string& path);
std::string emit_generators(const KGraph& g, const std::vector<PathFamily>& families);

/// Degree written as comma-separated coordinates, e.g. "2,1".
DegreeVector parse_degree(std::string_view text, std::size_t rank);

std::string read_text_file(const std::string& path);

}  // namespace kgck
