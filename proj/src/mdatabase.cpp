#include "cvg/mdatabase.hpp"

#include <stdexcept>

#include "cvg/graph6.hpp"

namespace cvg {

const std::vector<std::pair<std::string, std::string>>&
embedded_pair_strings() {
  static const std::vector<std::pair<std::string, std::string>> pairs = {
      {"@", "@"},
      // order 7
      {"FxKGW", "FErv_"},
      {"FzWWw", "FCff?"},
      {"FxKWo", "FErfG"},
      {"FzCWW", "FCzf_"},
      // order 8
      {"G_Kpe[", "G^rMX_"},
      {"G?\\s^c", "G~aJ_W"},
      {"G?qipk", "G~LTMO"},
      {"G?z\\bc", "G~Ca[W"},
      {"G@PL|w", "G}mqAC"},
      {"G@ejQk", "G}XSlO"},
      {"GCdXrK", "GzYeKo"},
      {"GGE[rK", "GvxbKo"},
      {"G}KoW[", "G@rNf_"},
      {"GTPAX{", "Gim|e?"},
      {"G`Xksk", "G]eRJO"},
      {"G`hkqk", "G]URLO"},
      {"G?C^NK", "G~z_oo"},
      {"G?C^^W", "G~z__c"},
      {"G?C^NG", "G~z_os"},
      {"G}~@`_", "G@?}]["},
      {"G?NMPk", "G~opmO"},
      {"G?Ku][", "G~rH`_"},
      {"G?eRzw", "G~XkCC"},
      {"G?Mre[", "G~pKX_"},
      {"G@Ku][", "G}rH`_"},
      {"G?NMX{", "G~ope?"},
      {"G`?MX{", "G]~pe?"},
      {"G_C^@{", "G^z_}?"},
      {"GGDc{{", "GvyZB?"},
      {"G`?xu[", "G]~EH_"},
      {"G@Ku]W", "G}rH`c"},
      {"G`G]vK", "G]v`Go"},
      {"G@NE?{", "G}ox~?"},
      {"G@NE@{", "G}ox}?"},
      {"G@K]MK", "G}r`po"},
      {"G@NEH{", "G}oxu?"},
  };
  return pairs;
}

MDatabase MDatabase::from_graphs(const std::vector<Graph>& graphs,
                                 int complete_up_to) {
  MDatabase db;
  db.complete_up_to_ = complete_up_to;
  for (const Graph& g : graphs) {
    db.forms_.insert(canonical_form(g));
    db.forms_.insert(canonical_form(complement(g)));
  }
  return db;
}

MDatabase MDatabase::embedded() {
  std::vector<Graph> graphs;
  for (const auto& [s, cs] : embedded_pair_strings()) {
    graphs.push_back(decode_graph6(s));
    graphs.push_back(decode_graph6(cs));
  }
  return from_graphs(graphs, 8);
}

MDatabase MDatabase::from_graph6_file(const std::string& path,
                                      int complete_up_to) {
  return from_graphs(read_graph6_file(path), complete_up_to);
}

bool MDatabase::contains(const Graph& g) const {
  return contains(canonical_form(g));
}

bool MDatabase::contains(const CanonicalForm& form) const {
  return forms_.count(form) != 0;
}

int MDatabase::pair_count(int n) const {
  int count = 0;
  for (const CanonicalForm& f : forms_) {
    if (f.n != n) continue;
    const Graph g = canonical_graph(f);
    const CanonicalForm cf = canonical_form(complement(g));
    if (!(cf < f)) ++count;  // count each complement pair once
  }
  return count;
}

}  // namespace cvg
