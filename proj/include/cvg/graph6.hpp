#ifndef CVG_GRAPH6_HPP
#define CVG_GRAPH6_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cvg/graph.hpp"

namespace cvg {

struct InvalidGraph6 : std::runtime_error {
  explicit InvalidGraph6(const std::string& what) : std::runtime_error(what) {}
};

// Strict graph6 codec for graphs on up to 16 vertices: one header byte n+63,
// then the upper triangle in column order (0,1),(0,2),(1,2),(0,3),... packed
// six bits per byte, most significant bit first, zero-padded, each byte +63.
// decode rejects bytes outside 63..126, wrong lengths, nonzero padding and
// n > 16 (including the multi-byte '~' headers used for larger graphs).
Graph decode_graph6(const std::string& s);
std::string encode_graph6(const Graph& g);

// Newline-delimited graph6; blank lines and '#'-prefixed comments skipped.
std::vector<Graph> read_graph6_lines(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace cvg

#endif
