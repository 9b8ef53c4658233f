#ifndef CVG_GROEBNER_HPP
#define CVG_GROEBNER_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cvg/graph.hpp"
#include "cvg/polynomial.hpp"
#include "cvg/rules.hpp"

namespace cvg {

// Which matrix donates the spanning forest whose entries get scaled to 1.
enum class TreeSide { G, Complement };

struct FixedVar {
  VarId var;
  long value = 1;
  std::string reason;
};

struct IdealOptions {
  TreeSide side = TreeSide::G;
  // BFS root for the spanning forest; -1 picks the maximum-degree vertex.
  int tree_root = -1;
  // Explicit spanning forest (overrides the BFS choice when nonempty).
  std::vector<std::pair<int, int>> tree_edges;
  // Nonzero diagonal on the tree side scaled to 1; default: the smallest
  // vertex whose diagonal is forced Nonzero, skipped when none exists.
  std::optional<VarId> unit_diagonal;
  // Variable of the other matrix scaled to 1; default: its lexicographically
  // first off-diagonal entry, falling back to a forced-nonzero diagonal.
  std::optional<VarId> unit_other;
};

// The ideal of the entrywise symbolic product A*B after the paper's variable
// reductions: forced-zero diagonals substituted by 0, the spanning forest of
// the tree side plus one forced-nonzero diagonal there scaled to 1, and one
// entry of the other matrix scaled to 1.
struct IdealBuild {
  VarTable vars;
  std::vector<Polynomial> generators;  // nonzero entries, deduplicated
  std::vector<FixedVar> fixed;         // every substituted variable, in order
  std::vector<std::pair<int, int>> tree;
  std::vector<bool> known_nonzero;  // per variable index (edges always true)
};

IdealBuild build_ideal(const Graph& g, const DiagonalConstraints& dc,
                       const IdealOptions& options = {});

struct GroebnerLimits {
  long max_spolys = 200000;
  int max_degree = 12;
  double timeout_seconds = 600.0;
};

enum class BuchbergerStatus { Basis, ResourceExceeded };

struct BuchbergerResult {
  BuchbergerStatus status = BuchbergerStatus::Basis;
  // Reduced Groebner basis on success; the partial basis (still inside the
  // ideal, so still usable for refutation witnesses) when limits were hit.
  std::vector<Polynomial> basis;
  long spolys = 0;
  long pairs_skipped = 0;
};

// Buchberger's algorithm under degrevlex with the product and chain
// criteria, normal pair-selection strategy, and a short-circuit as soon as a
// nonzero constant appears.
BuchbergerResult buchberger(std::vector<Polynomial> gens,
                            const GroebnerLimits& limits);

// S-polynomial and full normal form (every term irreducible), exposed so the
// basis property can be verified independently of the run that produced it.
Polynomial s_polynomial(const Polynomial& p, const Polynomial& q);
Polynomial normal_form(Polynomial p, const std::vector<Polynomial>& basis);

struct GroebnerRun {
  IdealBuild ideal;
  BuchbergerResult result;
  // Renderable basis element proving the ideal excludes every valid pair:
  // a nonzero constant, or c*v^k (more generally a univariate polynomial
  // with no nonzero real root) in a known-nonzero variable.
  std::optional<std::string> refutation;
};

GroebnerRun groebner_run(const Graph& g, const IdealOptions& options,
                         const GroebnerLimits& limits = {});

enum class RefuteVerdict { Refuted, Inconclusive };

struct GroebnerReport {
  RefuteVerdict verdict = RefuteVerdict::Inconclusive;
  std::string witness;               // filled when refuted
  std::vector<std::string> log;      // one line per attempted run
};

// Tries the default run on both tree sides (all BFS roots when
// `iterate_roots`), stopping at the first refutation.
GroebnerReport groebner_refutes(const Graph& g, const GroebnerLimits& limits = {},
                                bool iterate_roots = false);

}  // namespace cvg

#endif
