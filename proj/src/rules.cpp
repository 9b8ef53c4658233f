#include "cvg/rules.hpp"

#include <bit>
#include <sstream>

namespace cvg {

namespace {

std::string pair_reason(const char* rule, char matrix, int i, int j,
                        bool comp) {
  std::ostringstream os;
  os << rule << "(" << matrix << "; i=" << i << ",j=" << j
     << (comp ? "; complement)" : ")");
  return os.str();
}

struct Propagator {
  DiagonalConstraints dc;

  explicit Propagator(int n) { dc.n = n; }

  std::array<DiagStatus, Graph::kMaxVertices>& status(char m) {
    return m == 'A' ? dc.status_a : dc.status_b;
  }
  std::array<std::string, Graph::kMaxVertices>& reason(char m) {
    return m == 'A' ? dc.reason_a : dc.reason_b;
  }

  void apply(char m, int v, DiagStatus s, const std::string& why) {
    if (dc.contradiction) return;  // keep the first witness only
    DiagStatus cur = status(m)[v];
    if (cur == DiagStatus::Free) {
      status(m)[v] = s;
      reason(m)[v] = why;
      return;
    }
    if (cur == s) return;
    DiagonalConstraints::Contradiction c;
    c.vertex = v;
    c.matrix = m;
    if (s == DiagStatus::Zero) {
      c.zero_reason = why;
      c.nonzero_reason = reason(m)[v];
    } else {
      c.zero_reason = reason(m)[v];
      c.nonzero_reason = why;
    }
    dc.contradiction = c;
  }
};

}  // namespace

DiagonalConstraints diagonal_constraints(const Graph& g) {
  const int n = g.order();
  Propagator p(n);
  const Graph co = complement(g);

  // Pairwise rules on a host graph; `first` and `second` name the matrix
  // patterned on the host and on its complement respectively.
  auto run_pairs = [&](const Graph& h, char first, char second, bool comp) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const bool adjacent = h.has_edge(i, j);
        const std::uint16_t priv =
            std::uint16_t(h.neighbors(i) & ~h.closed_neighbors(j));
        if (priv == 0) {
          if (adjacent)
            p.apply(second, j, DiagStatus::Zero,
                    pair_reason("containment", second, i, j, comp));
          else
            p.apply(first, i, DiagStatus::Zero,
                    pair_reason("containment", first, i, j, comp));
        } else if (std::popcount(priv) == 1) {
          if (adjacent) {
            p.apply(second, j, DiagStatus::Nonzero,
                    pair_reason("private-neighbor", second, i, j, comp));
            p.apply(first, j, DiagStatus::Zero,
                    pair_reason("private-neighbor", first, i, j, comp));
          } else {
            p.apply(first, i, DiagStatus::Nonzero,
                    pair_reason("private-neighbor", first, i, j, comp));
            p.apply(second, i, DiagStatus::Zero,
                    pair_reason("private-neighbor", second, i, j, comp));
          }
        }
      }
    }
  };

  run_pairs(g, 'A', 'B', false);
  run_pairs(co, 'B', 'A', true);

  // Closure: the two diagonals at a vertex cannot both be nonzero.
  for (int v = 0; v < n; ++v) {
    if (p.dc.status_a[v] == DiagStatus::Nonzero) {
      std::ostringstream os;
      os << "diagonal-product(B; v=" << v << "; from " << p.dc.reason_a[v]
         << ")";
      p.apply('B', v, DiagStatus::Zero, os.str());
    }
    if (p.dc.status_b[v] == DiagStatus::Nonzero) {
      std::ostringstream os;
      os << "diagonal-product(A; v=" << v << "; from " << p.dc.reason_b[v]
         << ")";
      p.apply('A', v, DiagStatus::Zero, os.str());
    }
  }
  return p.dc;
}

std::optional<ObstructionTriple> find_obstruction_triple(const Graph& g) {
  const int n = g.order();
  auto scan = [&](const Graph& h, bool comp) -> std::optional<ObstructionTriple> {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (v == u || h.has_edge(u, v)) continue;
        if (std::uint16_t(h.neighbors(u) & ~h.neighbors(v))) continue;
        for (int w = 0; w < n; ++w) {
          if (w == u || w == v || h.has_edge(u, w)) continue;
          if (std::popcount(
                  std::uint16_t(h.neighbors(u) & ~h.neighbors(w))) == 1)
            return ObstructionTriple{u, v, w, comp};
        }
      }
    }
    return std::nullopt;
  };
  if (auto t = scan(g, false)) return t;
  return scan(complement(g), true);
}

bool in_class_C(const Graph& g) { return find_obstruction_triple(g).has_value(); }

std::optional<OddCycleWitness> odd_cycle_obstruction(
    const Graph& g, const DiagonalConstraints& dc) {
  if (dc.contradiction)
    throw PreconditionViolated(
        "odd_cycle_obstruction: constraints already contradictory");
  const int n = g.order();

  auto scan = [&](const Graph& h,
                  const std::array<DiagStatus, Graph::kMaxVertices>& status,
                  bool comp) -> std::optional<OddCycleWitness> {
    for (std::uint32_t sub = 0; sub < (1u << n); ++sub) {
      const int size = std::popcount(sub);
      if (size < 3 || size % 2 == 0) continue;
      bool zeros = true;
      for (int v = 0; v < n && zeros; ++v)
        if ((sub >> v) & 1u)
          if (status[v] != DiagStatus::Zero) zeros = false;
      if (!zeros) continue;
      // Induced cycle: every member has exactly two neighbors inside, and
      // the subset is connected.
      bool two_regular = true;
      for (int v = 0; v < n && two_regular; ++v)
        if ((sub >> v) & 1u)
          if (std::popcount(std::uint16_t(h.neighbors(v) & sub)) != 2)
            two_regular = false;
      if (!two_regular) continue;
      const int start = std::countr_zero(sub);
      std::uint16_t reach = std::uint16_t(1u << start);
      for (;;) {
        std::uint16_t grow = reach;
        std::uint16_t m = reach;
        while (m) {
          int v = std::countr_zero(m);
          m &= std::uint16_t(m - 1);
          grow |= std::uint16_t(h.neighbors(v) & sub);
        }
        if (grow == reach) break;
        reach = grow;
      }
      if (reach != sub) continue;
      // External neighborhood of the cycle.
      std::uint16_t ext = 0;
      for (int v = 0; v < n; ++v)
        if ((sub >> v) & 1u) ext |= h.neighbors(v);
      ext &= std::uint16_t(~sub);
      for (int v = 0; v < n; ++v) {
        if ((sub >> v) & 1u) continue;
        if (h.neighbors(v) & sub) continue;  // must avoid the cycle
        if ((ext & ~h.neighbors(v)) != 0) continue;
        // Walk the cycle to report it in cyclic order.
        std::vector<int> order{start};
        std::uint16_t seen = std::uint16_t(1u << start);
        int cur = start;
        while (int(order.size()) < size) {
          std::uint16_t next =
              std::uint16_t(h.neighbors(cur) & sub & ~seen);
          if (!next) break;
          cur = std::countr_zero(next);
          order.push_back(cur);
          seen |= std::uint16_t(1u << cur);
        }
        return OddCycleWitness{order, v, comp};
      }
    }
    return std::nullopt;
  };

  if (auto w = scan(g, dc.status_a, false)) return w;
  return scan(complement(g), dc.status_b, true);
}

bool in_class_D(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 1) continue;
    const int u = std::countr_zero(g.neighbors(v));
    if (g.degree(u) >= 2) return true;
  }
  return false;
}

RefuteResult refute(const Graph& g) {
  DiagonalConstraints dc = diagonal_constraints(g);
  if (dc.contradiction) {
    const auto& c = *dc.contradiction;
    std::ostringstream os;
    os << "diagonal of " << c.matrix << " at vertex " << c.vertex
       << ": zero by " << c.zero_reason << ", nonzero by " << c.nonzero_reason;
    return {RefuteOutcome::NotCV, RefuteReason::DiagonalContradiction,
            os.str()};
  }
  if (auto w = odd_cycle_obstruction(g, dc)) {
    std::ostringstream os;
    os << "induced odd cycle {";
    for (std::size_t k = 0; k < w->cycle.size(); ++k)
      os << (k ? "," : "") << w->cycle[k];
    os << "} with cover vertex " << w->v
       << (w->in_complement ? " in complement" : "");
    return {RefuteOutcome::NotCV, RefuteReason::OddCycle, os.str()};
  }
  return {RefuteOutcome::Inconclusive, RefuteReason::None, ""};
}

}  // namespace cvg
