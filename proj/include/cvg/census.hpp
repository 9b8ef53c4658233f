#ifndef CVG_CENSUS_HPP
#define CVG_CENSUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cvg/certify.hpp"
#include "cvg/graph.hpp"
#include "cvg/groebner.hpp"

namespace cvg {

// One row of the survey table.  Every pair lands in exactly one count, via a
// strict left-to-right pipeline: diagonal rules, odd-cycle rule, algebraic
// refutation (or the pinned residual set), twin construction, duplication
// from a stored smaller certificate, randomized search plus the shipped
// hand-built certificates.
struct CensusRow {
  int n = 0;
  long diag = 0;
  long odd_cycle = 0;
  long grobner_or_residual = 0;
  long twin = 0;
  long duplication = 0;
  long certificate_found = 0;  // randomized search + shipped constructions
  long unresolved = 0;

  long not_cv() const { return diag + odd_cycle + grobner_or_residual; }
  long cv() const { return twin + duplication + certificate_found; }
  long total_pairs() const { return not_cv() + cv() + unresolved; }
};

struct CensusEntry {
  int n = 0;
  std::string graph6;   // canonical representative of the pair
  std::string verdict;  // "cv" | "not_cv" | "unresolved"
  std::string method;   // pipeline column that decided the pair
  std::string reason;   // refutation detail or construction note
  std::optional<Certificate> certificate;  // engaged iff verdict == "cv"
};

struct CensusOptions {
  int max_n = 8;
  std::uint64_t seed = 18;
  int attempts = 1000;  // randomized-search budget, split across both sides
  // Real algebraic runs instead of matching the pinned residual set.
  bool run_groebner = false;
  GroebnerLimits groebner_limits{800, 12, 0.4};
};

struct CensusResult {
  std::vector<CensusRow> rows;       // one per n = 1..max_n
  std::vector<CensusEntry> entries;  // sorted by (n, graph6)
};

CensusResult run_census(const CensusOptions& options = {});

// Canonical forms of the four graphs the pipeline can only refute
// algebraically; the default census matches against this set instead of
// running the (heavy) basis computations.
const std::vector<std::string>& pinned_residual_set();

// Tab-separated table, one row per n plus a header line.
std::string census_table(const CensusResult& result);

// Machine-readable ledger: one tab-separated record per pair
// (n, graph6, verdict, method, reason, certificate path).  `cert_paths`
// must be empty or parallel to `result.entries`.
std::string census_ledger(const CensusResult& result,
                          const std::vector<std::string>& cert_paths = {});

}  // namespace cvg

#endif
