#ifndef CVG_RULES_HPP
#define CVG_RULES_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cvg/graph.hpp"

namespace cvg {

struct PreconditionViolated : std::logic_error {
  explicit PreconditionViolated(const std::string& what)
      : std::logic_error(what) {}
};

// Status of a diagonal entry of A (the matrix patterned on g) or B (patterned
// on the complement) that every product-vanishing pair (A, B) must satisfy.
enum class DiagStatus { Free, Zero, Nonzero };

// Forced diagonal statuses, derived by the neighborhood rules below run to a
// fixed point, plus the closure "a_ii and b_ii cannot both be nonzero".
//
// For every ordered pair (i, j), i != j, applied to g (target matrix B for
// the adjacent case, A for the nonadjacent case) and dually to the complement
// with the roles of A and B swapped:
//   containment  N(i) subset of N[j]:  i~j  => b_jj = 0
//                                      i!~j => a_ii = 0
//   private      |N(i) \ N[j]| == 1:   i~j  => b_jj != 0 and a_jj = 0
//                                      i!~j => a_ii != 0 and b_ii = 0
struct DiagonalConstraints {
  int n = 0;
  std::array<DiagStatus, Graph::kMaxVertices> status_a{};
  std::array<DiagStatus, Graph::kMaxVertices> status_b{};
  // reason_a/b[v]: rule that first forced the status (empty while Free).
  std::array<std::string, Graph::kMaxVertices> reason_a{};
  std::array<std::string, Graph::kMaxVertices> reason_b{};

  struct Contradiction {
    int vertex = -1;
    char matrix = 'A';           // which diagonal clashed
    std::string zero_reason;     // rule that forced Zero
    std::string nonzero_reason;  // rule that forced Nonzero
  };
  std::optional<Contradiction> contradiction;
};

DiagonalConstraints diagonal_constraints(const Graph& g);

// Obstruction triple: distinct u, v, w with v,w not adjacent to u,
// |N(u) \ N(w)| == 1 and N(u) subset of N(v), in g or in its complement.
// Such a triple forces a_uu both zero and nonzero, so the graph (and its
// complement) admits no product-vanishing pair.
struct ObstructionTriple {
  int u, v, w;
  bool in_complement;
};
std::optional<ObstructionTriple> find_obstruction_triple(const Graph& g);
bool in_class_C(const Graph& g);

// Induced odd cycle whose diagonals are all forced to zero on one side,
// together with a vertex v nonadjacent to the cycle that covers the cycle's
// external neighborhood.  A sign-count argument on the cycle entries then
// contradicts the forced zeros.
struct OddCycleWitness {
  std::vector<int> cycle;  // cyclic order
  int v;
  bool in_complement;  // true: cycle lives in the complement, zeros on B
};
std::optional<OddCycleWitness> odd_cycle_obstruction(
    const Graph& g, const DiagonalConstraints& dc);

// Leaf attached to a vertex of degree >= 2.
bool in_class_D(const Graph& g);

enum class RefuteOutcome { NotCV, Inconclusive };
enum class RefuteReason { None, DiagonalContradiction, OddCycle };

struct RefuteResult {
  RefuteOutcome outcome = RefuteOutcome::Inconclusive;
  RefuteReason reason = RefuteReason::None;
  std::string detail;
};

// Combinatorial refutation: diagonal contradiction first (it subsumes the
// obstruction-triple test), then the odd-cycle obstruction on both sides.
RefuteResult refute(const Graph& g);

}  // namespace cvg

#endif
