#ifndef CVG_STRUCTURE_HPP
#define CVG_STRUCTURE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cvg/graph.hpp"
#include "cvg/mdatabase.hpp"
#include "cvg/rules.hpp"

namespace cvg {

// Cograph-style decomposition: a disconnected graph splits into its
// components (Union), a graph with disconnected complement splits into the
// complements of the complement's components (Join), anything else is a
// Leaf (connected with connected complement).
struct DecompositionTree {
  enum class Kind { Leaf, Union, Join };
  Kind kind = Kind::Leaf;
  Graph graph;                             // graph at this node
  std::vector<DecompositionTree> children; // >= 2 unless Leaf
};

DecompositionTree decompose(const Graph& g);

// Rebuild the graph from its tree; the result is isomorphic (vertices are
// renumbered by child order).
Graph recompose(const DecompositionTree& tree);

// The leaves of the tree, in traversal order.
std::vector<Graph> decomposition_leaves(const Graph& g);

enum class Membership { Yes, No, Unknown };

// Is g in the union/join/complement closure of the building-block catalog?
// Yes when every decomposition leaf is catalogued; No when a leaf within the
// catalog's exhaustive range is absent; Unknown when the only failures are
// leaves beyond that range.
Membership in_R(const Graph& g, const MDatabase& db);

enum class Verdict { CV, NotCV, Unknown };

struct ClassificationReport {
  Verdict verdict = Verdict::Unknown;
  std::vector<std::string> reasons;  // rule chain, in the order applied
  std::optional<bool> robust_alpha;  // set only when verdict == CV
  std::optional<bool> robust_beta;
  std::optional<std::string> certificate_ref;
};

// Full decision procedure: the obstruction triple refutes; otherwise
// closure membership decides; an Unknown from the closure test may still be
// refuted combinatorially.
ClassificationReport classify(const Graph& g, const MDatabase& db);

// For a graph classified CV: can the kernel of A (alpha) / of B (beta)
// contain a nowhere-zero vector?  Decided by the leaf-at-a-branching-vertex
// rule on g and its complement.
std::pair<bool, bool> robustness(const Graph& g, const MDatabase& db);

}  // namespace cvg

#endif
