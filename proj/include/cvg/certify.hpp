#ifndef CVG_CERTIFY_HPP
#define CVG_CERTIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cvg/graph.hpp"
#include "cvg/rational.hpp"

namespace cvg {

struct CertifyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PatternMismatch : CertifyError {
  using CertifyError::CertifyError;
};
struct ZeroRowPresent : CertifyError {
  using CertifyError::CertifyError;
};
struct SingletonTwinClass : CertifyError {
  using CertifyError::CertifyError;
};
struct NonzeroDiagonal : CertifyError {
  using CertifyError::CertifyError;
};
struct InvalidCertificate : CertifyError {
  using CertifyError::CertifyError;
};
struct BadVector : CertifyError {
  using CertifyError::CertifyError;
};
struct InvalidInput : CertifyError {
  using CertifyError::CertifyError;
};

enum class Provenance {
  Twin,
  Duplication,
  Union,
  Join,
  AppendK1,
  RandomTrial,
  Manual,
  Imported
};

std::string provenance_name(Provenance p);
std::optional<Provenance> provenance_from_name(const std::string& name);

// A pair of matrices whose product vanishes: A patterned on the graph, B on
// its complement (off-diagonal support exactly the edges; diagonals free).
struct Certificate {
  Graph graph;
  RationalMatrix A, B;
  Provenance provenance = Provenance::Manual;
};

enum class KernelSide { Alpha, Beta };  // Alpha: A*v = 0; Beta: B*v = 0

struct RobustCertificate {
  Certificate base;
  RatVec kernel_vector;  // nowhere-zero
  KernelSide side = KernelSide::Alpha;
};

struct VerifyResult {
  bool valid = false;
  std::string reason;  // first failure, empty when valid
};

VerifyResult verify(const Certificate& c);
VerifyResult verify(const RobustCertificate& rc);

// Exchanges the two matrices: a certificate for the complement graph.
Certificate complement_certificate(const Certificate& c);

// Relabels vertices: entry (i, j) moves to (perm[i], perm[j]).
Certificate permute_certificate(const Certificate& c,
                                const std::vector<int>& perm);

// --- solve for the second matrix at a fixed first matrix -----------------

struct SolveResult {
  std::optional<Certificate> certificate;  // engaged iff solvable
  // Complement edges forced to zero across the whole solution space; the
  // emptiness of this list decides solvability at this A.
  std::vector<std::pair<int, int>> missing_edges;
};

// Exact kernel of the linear system A*B = O over B's free entries; when no
// complement edge is identically zero on that kernel, returns a random
// integer combination realizing the full pattern.
SolveResult solve_for_B(const Graph& g, const RationalMatrix& A,
                        std::uint64_t seed);

// --- constructions --------------------------------------------------------

// A nowhere-zero x with B*x nowhere-zero (greedy column perturbation).
RatVec nowhere_zero_colspace_vector(const RationalMatrix& B);

// Requires every twin class of g to have at least two members.
Certificate twin_certificate(const Graph& g);

// Adds `copies` new nonadjacent twins of vertex i; needs A[i][i] == 0.
Certificate duplicate_vertex(const Certificate& c, int i, int copies);

RobustCertificate union_certificate(const RobustCertificate& cg,
                                    const RobustCertificate& ch);
RobustCertificate join_certificate(const RobustCertificate& cg,
                                   const RobustCertificate& ch);

// Appends an isolated vertex; x must be nowhere-zero with B*x nowhere-zero.
RobustCertificate append_K1(const Certificate& c, const RatVec& x);

// Kernel vector extracted from the opposite matrix's column space.  Alpha
// needs no dominating vertex, Beta no isolated vertex.
std::optional<RobustCertificate> robustify(const Certificate& c,
                                           KernelSide side);

// --- randomized search ----------------------------------------------------

struct TrialResult {
  std::optional<Certificate> certificate;
  int attempts_used = 0;
};

// Samples A and solves for B; even attempts work on g, odd attempts on the
// complement.  Attempts rotate through four sampling styles: plain entrywise
// (uniform nonzero integers in [-100, 100] on edges, diagonals guided by the
// forced statuses), two-random-vector kernel forcing, sign-vector kernel
// forcing on non-neighborhoods, and a unit-entry switching sweep.
// `forced_zero_diag` marks vertices whose A-diagonal must come out zero
// (used by the reduction search).
TrialResult random_trial(const Graph& g, int attempts, std::uint64_t seed,
                         std::uint16_t forced_zero_diag = 0);

// --- search driver ---------------------------------------------------------

enum class Method { Twin, Duplication, Compose, Random };

struct SearchOptions {
  std::vector<Method> methods{Method::Twin, Method::Duplication,
                              Method::Compose, Method::Random};
  // Methods allowed when certifying the reduced graph inside a duplication
  // step; the outer method restriction never propagates into reductions.
  std::vector<Method> nested_methods{Method::Twin, Method::Duplication,
                                     Method::Compose, Method::Random};
  int attempts = 1000;         // total random attempts (both sides)
  int nested_attempts = 600;   // budget inside reductions
  std::uint64_t seed = 1;
};

// First certificate found by the requested methods, in order.
std::optional<Certificate> find_certificate(const Graph& g,
                                            const SearchOptions& options);

// Union/join recursion for decomposable graphs: builds a certificate along
// the decomposition tree together with the kernel vectors needed to glue
// the pieces; leaves are handled by twin/duplication/random search.
struct BuiltCertificate {
  Certificate cert;
  std::optional<RatVec> alpha;  // nowhere-zero kernel of A, when possible
  std::optional<RatVec> beta;   // nowhere-zero kernel of B, when possible
};

std::optional<BuiltCertificate> compose_certificate(
    const Graph& g, const SearchOptions& options);

// --- file format ------------------------------------------------------------

struct CertificateDocument {
  Certificate cert;
  std::optional<KernelSide> kernel_side;
  std::optional<RatVec> kernel_vector;
};

std::string certificate_to_text(const CertificateDocument& doc);
CertificateDocument certificate_from_text(const std::string& text);
CertificateDocument read_certificate_file(const std::string& path);
void write_certificate_file(const std::string& path,
                            const CertificateDocument& doc);

// Certificates known only from manual constructions, keyed by canonical
// form; returns certificates whose graph is permuted to match g exactly.
std::optional<Certificate> imported_certificate(const Graph& g);

}  // namespace cvg

#endif
