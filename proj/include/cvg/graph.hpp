#ifndef CVG_GRAPH_HPP
#define CVG_GRAPH_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvg {

// Simple undirected graph on at most 16 vertices.  Adjacency is kept as one
// 16-bit neighbor mask per vertex, which keeps set operations (neighborhood
// containment, common neighbors, component search) branch-free and cheap.
class Graph {
 public:
  static constexpr int kMaxVertices = 16;

  Graph() : n_(0) {}
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("Graph: order out of range 0..16");
  }

  int order() const { return n_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && (adj_[u] >> v) & 1u;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    adj_[u] |= std::uint16_t(1u << v);
    adj_[v] |= std::uint16_t(1u << u);
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= std::uint16_t(~(1u << v));
    adj_[v] &= std::uint16_t(~(1u << u));
  }

  // Open neighborhood N(v) as a bit mask.
  std::uint16_t neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  // Closed neighborhood N[v].
  std::uint16_t closed_neighbors(int v) const {
    check_vertex(v);
    return std::uint16_t(adj_[v] | (1u << v));
  }

  int degree(int v) const;
  int edge_count() const;

  // Mask with one bit per vertex of the graph.
  std::uint16_t vertex_mask() const { return std::uint16_t((1u << n_) - 1u); }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
  }

  int n_;
  std::array<std::uint16_t, kMaxVertices> adj_{};
};

Graph complement(const Graph& g);

// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);

// Relabels: vertex i of g becomes vertex perm[i] of the result.
Graph permute(const Graph& g, const std::vector<int>& perm);

// Subgraph induced by the vertices present in `mask`, relabeled to
// 0..popcount-1 preserving the original vertex order.
Graph induced_subgraph(const Graph& g, std::uint16_t mask);
Graph remove_vertex(const Graph& g, int v);

// Two distinct vertices are twins when N(u) \ {v} == N(v) \ {u}; this covers
// both the adjacent and the nonadjacent flavor and is invariant under
// complementation.
bool are_twins(const Graph& g, int u, int v);

// Partition of V into maximal classes of pairwise twins (the twin relation is
// transitive, and every class is either a clique or an independent set).
// Classes are sorted, ordered by smallest vertex; singletons allowed.
std::vector<std::vector<int>> twin_partition(const Graph& g);

// -1 when absent.  A dominating vertex is adjacent to every other vertex
// (vacuously present in K1); an isolated vertex has no neighbors.
int find_dominating_vertex(const Graph& g);
int find_isolated_vertex(const Graph& g);

// Construction helpers.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join_graphs(const Graph& a, const Graph& b);

}  // namespace cvg

#endif
