#include "cvg/canonical.hpp"

#include <bit>

namespace cvg {

namespace {

// Depth-first minimization over vertex assignments.  Position j of the new
// labeling is chosen level by level; the j bits of column j are compared
// against the incumbent best as soon as they are known.  The invariant is
// that dfs() is only entered on paths whose columns equal the incumbent's
// prefix: strictly larger columns are pruned, and a strictly smaller column
// first installs a greedy completion as the new incumbent (any completion of
// the smaller prefix beats the old best), restoring the invariant.  Among the
// unused candidates at a node, twins of an already-tried candidate are
// skipped: swapping two twins is an automorphism, so their subtrees realize
// the same bit strings.
struct Minimizer {
  const Graph& g;
  int n;
  std::array<std::uint16_t, 16> twin{};  // twin[u] bit v => u,v twins
  std::array<int, 16> assigned{};        // position -> original vertex
  std::array<std::uint32_t, 16> cols{};  // column values along current path
  std::array<std::uint32_t, 16> best_cols{};
  std::array<int, 16> best_assigned{};

  explicit Minimizer(const Graph& graph) : g(graph), n(graph.order()) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && are_twins(g, u, v)) twin[u] |= std::uint16_t(1u << v);
  }

  std::uint32_t column_value(int j, int v) const {
    std::uint32_t col = 0;
    const std::uint16_t nb = g.neighbors(v);
    for (int i = 0; i < j; ++i) col = (col << 1) | ((nb >> assigned[i]) & 1u);
    return col;
  }

  // Completes the current path greedily (minimal column at each level) and
  // installs the result as the incumbent best.
  void greedy_complete(int j, std::uint16_t used) {
    for (; j < n; ++j) {
      int pick = -1;
      std::uint32_t pick_col = 0;
      for (int v = 0; v < n; ++v) {
        if ((used >> v) & 1u) continue;
        std::uint32_t col = column_value(j, v);
        if (pick < 0 || col < pick_col) {
          pick = v;
          pick_col = col;
        }
      }
      assigned[j] = pick;
      cols[j] = pick_col;
      used |= std::uint16_t(1u << pick);
    }
    best_cols = cols;
    for (int i = 0; i < n; ++i) best_assigned[i] = assigned[i];
  }

  void dfs(int j, std::uint16_t used) {
    if (j == n) return;
    std::uint16_t tried = 0;
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1u) continue;
      if (twin[v] & tried) continue;
      tried |= std::uint16_t(1u << v);
      const std::uint32_t col = column_value(j, v);
      if (col > best_cols[j]) continue;
      assigned[j] = v;
      cols[j] = col;
      const std::uint16_t used2 = std::uint16_t(used | (1u << v));
      if (col < best_cols[j]) greedy_complete(j + 1, used2);
      dfs(j + 1, used2);
    }
  }

  void run() {
    if (n == 0) return;
    greedy_complete(0, 0);
    dfs(0, 0);
  }
};

CanonicalForm pack(int n, const std::array<std::uint32_t, 16>& cols) {
  CanonicalForm f;
  f.n = std::uint8_t(n);
  int t = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++t) {
      if ((cols[j] >> (j - 1 - i)) & 1u) {
        if (t < 64)
          f.bits[0] |= std::uint64_t(1) << (63 - t);
        else
          f.bits[1] |= std::uint64_t(1) << (63 - (t - 64));
      }
    }
  }
  return f;
}

}  // namespace

CanonicalResult canonical_form_with_perm(const Graph& g) {
  const int n = g.order();
  if (n == 0) return {CanonicalForm{0, {0, 0}}, {}};
  Minimizer m(g);
  m.run();
  CanonicalResult r;
  r.form = pack(n, m.best_cols);
  // best_assigned maps position -> vertex; invert to vertex -> position.
  r.perm.assign(n, 0);
  for (int pos = 0; pos < n; ++pos) r.perm[m.best_assigned[pos]] = pos;
  return r;
}

CanonicalForm canonical_form(const Graph& g) {
  return canonical_form_with_perm(g).form;
}

Graph canonical_graph(const CanonicalForm& f) {
  Graph g(f.n);
  int t = 0;
  for (int j = 1; j < f.n; ++j) {
    for (int i = 0; i < j; ++i, ++t) {
      bool set = t < 64 ? (f.bits[0] >> (63 - t)) & 1u
                        : (f.bits[1] >> (63 - (t - 64))) & 1u;
      if (set) g.add_edge(i, j);
    }
  }
  return g;
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return std::nullopt;
  CanonicalResult cg = canonical_form_with_perm(g);
  CanonicalResult ch = canonical_form_with_perm(h);
  if (cg.form != ch.form) return std::nullopt;
  // permute(g, pg) == permute(h, ph), so g -> h via ph^{-1} . pg.
  const int n = g.order();
  std::vector<int> inv(n), out(n);
  for (int v = 0; v < n; ++v) inv[ch.perm[v]] = v;
  for (int v = 0; v < n; ++v) out[v] = inv[cg.perm[v]];
  return out;
}

std::size_t canonical_hash(const CanonicalForm& f) {
  std::uint64_t x = f.bits[0] ^ (f.bits[1] * 0x9e3779b97f4a7c15ULL) ^ f.n;
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return std::size_t(x);
}

}  // namespace cvg
