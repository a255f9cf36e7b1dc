#ifndef TRUEMPER_IO_HPP
#define TRUEMPER_IO_HPP

#include "truemper/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace truemper {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Edge list: first line "n m", then m lines "u v" (0-based). Text after '#'
/// is ignored, as are blank lines. Repeated edges, in either orientation,
/// are rejected.
Graph parse_edge_list(std::string_view text);
std::string render_edge_list(const Graph& g);

/// One graph in graph6 (an optional ">>graph6<<" header is accepted).
Graph parse_graph6(std::string_view line);
std::string render_graph6(const Graph& g);

/// One graph6 string per non-empty line.
std::vector<Graph> parse_graph6_lines(std::string_view text);

enum class GraphFormat { EdgeList, Graph6 };

/// Parses a whole file's contents in the given format.
std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace truemper

#endif  // TRUEMPER_IO_HPP
