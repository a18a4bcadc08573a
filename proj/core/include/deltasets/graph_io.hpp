#pragma once

#include "deltasets/graph.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <string_view>

namespace deltasets {

enum class GraphFormat { dimacs, edgelist };

GraphFormat parse_graph_format(std::string_view name);

/// Reads DIMACS "p edge n m" / "e u v" text (1-based ids, "c" comments).
/// A header edge count that disagrees with the deduplicated edge set is
/// reported in `diag`, never rejected.
Graph parse_dimacs(std::istream& in, Diagnostics* diag = nullptr);
Graph parse_dimacs(std::string_view text, Diagnostics* diag = nullptr);

/// Reads whitespace-separated "u v" lines with an optional "# n=<count>"
/// header. Numeric tokens are 1-based ids. If any token is not a positive
/// integer the whole file is read as labels, numbered by first appearance.
Graph parse_edgelist(std::istream& in, Diagnostics* diag = nullptr);
Graph parse_edgelist(std::string_view text, Diagnostics* diag = nullptr);

void write_dimacs(std::ostream& out, const Graph& g);
void write_edgelist(std::ostream& out, const Graph& g);

std::string to_dimacs(const Graph& g);
std::string to_edgelist(const Graph& g);

Graph read_graph_file(const std::string& path, GraphFormat format, Diagnostics* diag = nullptr);

}  // namespace deltasets
