#ifndef CHROMASTAT_GRAPH_IO_HPP
#define CHROMASTAT_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "chromastat/graph.hpp"

namespace chromastat {

// DIMACS .col: `c` comment lines, one `p edge N M` line, `e u v` edge lines
// with 1-based endpoints. Duplicate edge lines collapse. Vertices are stored
// 0-based; the original 1-based labels are retained on the graph.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs(const std::string& text);

// Plain edge list: `u v` pairs, 0-based, one per line; optional leading
// `n <count>` line declares the vertex count (for isolated vertices).
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

// Writers emit edges sorted lexicographically; output is deterministic and
// round-trips through the matching parser.
void write_dimacs(std::ostream& out, const Graph& g);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_dimacs(const Graph& g);
std::string to_edge_list(const Graph& g);

enum class GraphFormat { dimacs, edge_list };

// A leading `c`/`p` line means DIMACS, anything else is an edge list.
GraphFormat detect_format(const std::string& text);

// Reads a graph file with format auto-detection.
Graph read_graph_file(const std::string& path);

}  // namespace chromastat

#endif
