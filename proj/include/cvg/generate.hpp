#ifndef CVG_GENERATE_HPP
#define CVG_GENERATE_HPP

#include <stdexcept>
#include <vector>

#include "cvg/graph.hpp"

namespace cvg {

struct UnsupportedSize : std::runtime_error {
  explicit UnsupportedSize(const std::string& what) : std::runtime_error(what) {}
};

enum class GenFilter {
  All,
  // Graphs with g and complement(g) both connected, one representative per
  // complement pair: the one whose canonical form is lexicographically
  // smaller (self-complementary graphs appear once).
  ConnectedCoConnected,
};

// All isomorphism classes on n vertices (1 <= n <= 8), built by augmenting
// the (n-1)-vertex classes with one new vertex over every attachment subset
// and deduplicating by canonical form.  Returned as canonically labeled
// graphs in sorted canonical order.
std::vector<Graph> generate_all(int n, GenFilter filter);

}  // namespace cvg

#endif
