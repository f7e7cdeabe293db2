#ifndef PPR_IO_HPP
#define PPR_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ppr/graph.hpp"

namespace ppr {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, const std::string& source, int line)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
          line_number(line) {}
    int line_number;
};

// Graph file: `graph <order> <edge_count>`, then `u v` per line, 0-indexed, u < v.
// Coloring file: `coloring <edge_count>`, then `u v R|B` per line, total on the host.
// Witness file: `witness <R|B> <k> <length>`, then one vertex id per line.
// Classes file: one space-separated class of vertex ids per line.
// `#` starts a comment everywhere; blank lines are ignored.

Graph read_graph(std::istream& in, const std::string& source = "<stream>");
Graph read_graph_file(const std::string& path);
void write_graph(const Graph& g, std::ostream& out);
void write_graph_file(const Graph& g, const std::string& path);

TwoColoring read_coloring(std::istream& in, const Graph& host, const std::string& source = "<stream>");
TwoColoring read_coloring_file(const std::string& path, const Graph& host);
void write_coloring(const TwoColoring& c, const Graph& host, std::ostream& out);
void write_coloring_file(const TwoColoring& c, const Graph& host, const std::string& path);

Witness read_witness(std::istream& in, const std::string& source = "<stream>");
Witness read_witness_file(const std::string& path);
void write_witness(const Witness& w, std::ostream& out);
void write_witness_file(const Witness& w, const std::string& path);

std::vector<std::vector<int>> read_classes(std::istream& in, const std::string& source = "<stream>");
std::vector<std::vector<int>> read_classes_file(const std::string& path);

}  // namespace ppr

#endif
