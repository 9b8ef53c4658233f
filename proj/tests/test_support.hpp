#ifndef CVG_TEST_SUPPORT_HPP
#define CVG_TEST_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cvg/graph.hpp"

namespace test_support {

// Deterministic splitmix64 stream so tests reproduce across platforms.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [lo, hi] inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + std::int64_t(next() % std::uint64_t(hi - lo + 1));
  }
};

inline cvg::Graph random_graph(int n, Rng& rng) {
  cvg::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next() & 1u) g.add_edge(u, v);
  return g;
}

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[std::size_t(rng.next() % i)]);
}

// Counts isomorphism classes of graphs on n vertices by enumerating all
// labeled graphs and reducing each to the minimum upper-triangle bit string
// over every permutation.  Deliberately brute force: it shares no code with
// the library's canonical-form search.
inline int orbit_count_brute_force(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  auto pair_index = [](int i, int j) {  // i < j, column order
    return j * (j - 1) / 2 + i;
  };

  std::set<std::uint32_t> orbits;
  for (std::uint32_t code = 0; code < (1u << pairs); ++code) {
    std::uint32_t best = ~0u;
    for (const auto& perm : perms) {
      std::uint32_t relab = 0;
      for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
          int a = perm[i], b = perm[j];
          if (a > b) std::swap(a, b);
          if ((code >> pair_index(a, b)) & 1u)
            relab |= 1u << pair_index(i, j);
        }
      }
      // Compare as bit strings with pair 0 most significant.
      std::uint32_t key = 0;
      for (int t = 0; t < pairs; ++t)
        if ((relab >> t) & 1u) key |= 1u << (pairs - 1 - t);
      best = std::min(best, key);
    }
    orbits.insert(best);
  }
  return int(orbits.size());
}

}  // namespace test_support

#endif
