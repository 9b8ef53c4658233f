#ifndef CVG_CANONICAL_HPP
#define CVG_CANONICAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "cvg/graph.hpp"

namespace cvg {

// Canonical form of a graph: the lexicographically smallest upper-triangle
// bit string over all vertex relabelings, bits in the same column order used
// by graph6.  Two graphs are isomorphic iff their forms compare equal, and
// forms order totally, so they double as set/map keys.
struct CanonicalForm {
  std::uint8_t n = 0;
  // Pair index t gets bit 63-t of word 0 (t < 64) or bit 63-(t-64) of word 1,
  // so lexicographic bit order coincides with numeric comparison.
  std::array<std::uint64_t, 2> bits{0, 0};

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Graph& g);

// Also reports a relabeling taking g to its canonical graph:
// permute(g, perm) == canonical_graph(form).
struct CanonicalResult {
  CanonicalForm form;
  std::vector<int> perm;
};
CanonicalResult canonical_form_with_perm(const Graph& g);

Graph canonical_graph(const CanonicalForm& f);

// A relabeling perm with permute(g, perm) == h, when one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

std::size_t canonical_hash(const CanonicalForm& f);

}  // namespace cvg

#endif
