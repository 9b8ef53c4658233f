#ifndef CVG_MDATABASE_HPP
#define CVG_MDATABASE_HPP

#include <set>
#include <string>
#include <vector>

#include "cvg/canonical.hpp"
#include "cvg/graph.hpp"

namespace cvg {

// Catalog of the minimal building blocks: graphs that admit a vanishing
// product pair and are connected with connected complement.  The embedded
// catalog is complete for every order up to 8; membership of larger graphs
// is undecided.  Entries are stored canonically and closed under complement.
class MDatabase {
 public:
  // The built-in catalog (complete through order 8).
  static MDatabase embedded();

  // Load from a graph6 file, one graph per line.  `complete_up_to` declares
  // through which order the file is exhaustive; absence at or below that
  // order is then a definite "no".
  static MDatabase from_graph6_file(const std::string& path,
                                    int complete_up_to = 8);
  static MDatabase from_graphs(const std::vector<Graph>& graphs,
                               int complete_up_to = 8);

  bool contains(const Graph& g) const;
  bool contains(const CanonicalForm& form) const;

  // Number of entries of order n, counting a graph and its complement once.
  int pair_count(int n) const;

  // Largest order through which the catalog is exhaustive.
  int complete_up_to() const { return complete_up_to_; }

  const std::set<CanonicalForm>& forms() const { return forms_; }

 private:
  std::set<CanonicalForm> forms_;
  int complete_up_to_ = 0;
};

// The raw graph6 strings behind the embedded catalog, including the listed
// complements (kept verbatim so codec tests can exercise every string).
const std::vector<std::pair<std::string, std::string>>& embedded_pair_strings();

}  // namespace cvg

#endif
