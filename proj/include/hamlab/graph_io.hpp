#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

// Edge-list text format:
//
//   # comment
//   n m
//   u v        (m lines, u < v on output, lexicographic order)
//
// Blank lines and anything after '#' are ignored on input.

/// Throws std::runtime_error with a line number on malformed input.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

/// Whitespace-separated vertex ids; '#' comments allowed.
std::vector<Vertex> read_vertex_sequence(std::istream& in);
std::vector<Vertex> read_vertex_sequence_file(const std::string& path);

}  // namespace hamlab
