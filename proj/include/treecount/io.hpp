#pragma once

#include <iosfwd>
#include <string>

#include "treecount/multigraph.hpp"

namespace treecount {

/// Parse the edge-list text format: `#` starts a comment, an optional
/// leading `vertices N` header fixes the vertex count, data lines are
/// `u v m` with positive multiplicity m. Duplicate pairs accumulate.
/// Self-loop lines are ignored; when `warnings` is non-null a note per
/// ignored line is written to it. Throws ParseError with the line number.
MultiGraph parse_edge_list(std::istream& in, std::ostream* warnings = nullptr);
MultiGraph parse_edge_list_file(const std::string& path, std::ostream* warnings = nullptr);

/// Emit the same format; parse(write(g)) reproduces g exactly.
void write_edge_list(const MultiGraph& g, std::ostream& out);

/// DOT output; parallel edges appear as repeated edge statements.
void write_dot(const MultiGraph& g, std::ostream& out, const std::string& name = "g");

/// {"vertices": N, "edges": [{"u":..,"v":..,"mult":..}, ...]}
void write_json(const MultiGraph& g, std::ostream& out);

}  // namespace treecount
