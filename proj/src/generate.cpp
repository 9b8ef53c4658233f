#include "cvg/generate.hpp"

#include <algorithm>
#include <set>

#include "cvg/canonical.hpp"

namespace cvg {

namespace {

std::vector<Graph> all_classes(int n) {
  std::set<CanonicalForm> forms;
  if (n == 1) {
    forms.insert(canonical_form(Graph(1)));
  } else {
    for (const Graph& parent : all_classes(n - 1)) {
      for (std::uint32_t attach = 0; attach < (1u << (n - 1)); ++attach) {
        Graph g(n);
        for (int u = 0; u < n - 1; ++u) {
          for (int v = u + 1; v < n - 1; ++v)
            if (parent.has_edge(u, v)) g.add_edge(u, v);
          if ((attach >> u) & 1u) g.add_edge(u, n - 1);
        }
        forms.insert(canonical_form(g));
      }
    }
  }
  std::vector<Graph> out;
  out.reserve(forms.size());
  for (const CanonicalForm& f : forms) out.push_back(canonical_graph(f));
  return out;
}

}  // namespace

std::vector<Graph> generate_all(int n, GenFilter filter) {
  if (n < 1 || n > 8)
    throw UnsupportedSize("generate_all: order must be between 1 and 8");
  std::vector<Graph> all = all_classes(n);
  if (filter == GenFilter::All) return all;

  std::set<CanonicalForm> reps;
  for (const Graph& g : all) {
    if (!is_connected(g)) continue;
    Graph co = complement(g);
    if (!is_connected(co)) continue;
    reps.insert(std::min(canonical_form(g), canonical_form(co)));
  }
  std::vector<Graph> out;
  out.reserve(reps.size());
  for (const CanonicalForm& f : reps) out.push_back(canonical_graph(f));
  return out;
}

}  // namespace cvg
