#ifndef FERRERSLAB_IO_HPP
#define FERRERSLAB_IO_HPP

#include <string>

#include "ferrerslab/graph.hpp"
#include "ferrerslab/matrix.hpp"

namespace ferrerslab {

struct parse_error : std::runtime_error {
    int line;
    parse_error(const std::string& msg, int line_no)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// File grammar ('#' starts a comment, blank lines ignored):
//   graph n        followed by edge lines "u v" and optional "loop v" (1-based)
//   bigraph nX nY  followed by edge lines "xi yj" (x index, y index)
//   matrix r c     followed by r rows of c characters from {0,1}
Graph parse_graph(const std::string& text);
Bigraph parse_bigraph(const std::string& text);
BinaryMatrix parse_matrix(const std::string& text);

/// Header keyword of the given text: "graph", "bigraph" or "matrix".
std::string sniff_kind(const std::string& text);

// Serialization emits sorted edges; parse(serialize(x)) == x.
std::string serialize(const Graph& g);
std::string serialize(const Bigraph& b);
std::string serialize(const BinaryMatrix& m);

std::string read_file(const std::string& path);
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace ferrerslab

#endif
