#include "cvg/graph.hpp"

#include <bit>

namespace cvg {

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph h(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

std::vector<std::vector<int>> components(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> out;
  std::uint16_t seen = 0;
  for (int s = 0; s < n; ++s) {
    if ((seen >> s) & 1u) continue;
    // Breadth-first closure over neighbor masks.
    std::uint16_t comp = std::uint16_t(1u << s);
    for (;;) {
      std::uint16_t grow = comp;
      std::uint16_t m = comp;
      while (m) {
        int v = std::countr_zero(m);
        m &= std::uint16_t(m - 1);
        grow |= g.neighbors(v);
      }
      if (grow == comp) break;
      comp = grow;
    }
    seen |= comp;
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if ((comp >> v) & 1u) verts.push_back(v);
    out.push_back(std::move(verts));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return components(g).size() == 1;
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permute: permutation size mismatch");
  Graph h(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
  return h;
}

Graph induced_subgraph(const Graph& g, std::uint16_t mask) {
  std::vector<int> verts;
  for (int v = 0; v < g.order(); ++v)
    if ((mask >> v) & 1u) verts.push_back(v);
  Graph h(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j])) h.add_edge(int(i), int(j));
  return h;
}

Graph remove_vertex(const Graph& g, int v) {
  std::uint16_t mask = std::uint16_t(g.vertex_mask() & ~(1u << v));
  return induced_subgraph(g, mask);
}

bool are_twins(const Graph& g, int u, int v) {
  if (u == v) return false;
  std::uint16_t skip = std::uint16_t((1u << u) | (1u << v));
  return std::uint16_t(g.neighbors(u) & ~skip) ==
         std::uint16_t(g.neighbors(v) & ~skip);
}

std::vector<std::vector<int>> twin_partition(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> classes;
  std::vector<bool> placed(n, false);
  for (int u = 0; u < n; ++u) {
    if (placed[u]) continue;
    std::vector<int> cls{u};
    placed[u] = true;
    for (int v = u + 1; v < n; ++v) {
      if (!placed[v] && are_twins(g, u, v)) {
        cls.push_back(v);
        placed[v] = true;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

int find_dominating_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.closed_neighbors(v) == g.vertex_mask()) return v;
  return -1;
}

int find_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.neighbors(v) == 0) return v;
  return -1;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (int u = 0; u < a.order(); ++u)
    for (int v = u + 1; v < a.order(); ++v)
      if (a.has_edge(u, v)) g.add_edge(u, v);
  const int off = a.order();
  for (int u = 0; u < b.order(); ++u)
    for (int v = u + 1; v < b.order(); ++v)
      if (b.has_edge(u, v)) g.add_edge(off + u, off + v);
  return g;
}

Graph join_graphs(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
  return g;
}

}  // namespace cvg
