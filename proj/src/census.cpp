#include "cvg/census.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cvg/canonical.hpp"
#include "cvg/generate.hpp"
#include "cvg/graph6.hpp"
#include "cvg/rng.hpp"
#include "cvg/rules.hpp"

namespace cvg {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

std::string canonical6(const Graph& g) {
  return encode_graph6(canonical_graph(canonical_form(g)));
}

// Certificates from earlier pipeline stages, keyed by the canonical form of
// their graph; the duplication stage consumes them when growing a twin.
class CertificateStore {
 public:
  void put(const Certificate& cert) {
    insert(cert);
    insert(complement_certificate(cert));
  }

  const Certificate* find(const std::string& canonical) const {
    const auto it = store_.find(canonical);
    return it == store_.end() ? nullptr : &it->second;
  }

 private:
  void insert(const Certificate& cert) {
    const Graph form = canonical_graph(canonical_form(cert.graph));
    const auto perm = find_isomorphism(cert.graph, form);
    if (!perm) throw std::logic_error("graph not isomorphic to its canonical form");
    store_[encode_graph6(form)] = permute_certificate(cert, *perm);
  }

  std::map<std::string, Certificate> store_;
};

bool every_vertex_twinned(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    bool has = false;
    for (int v = 0; v < g.order() && !has; ++v)
      if (v != u && are_twins(g, u, v)) has = true;
    if (!has) return false;
  }
  return true;
}

// Grows a stored certificate of host-minus-a-twin back to `g` (or to its
// complement when `parity` is set).  The stored matrix must carry a zero
// diagonal at the kept twin.
std::optional<Certificate> duplication_step(const Graph& g,
                                            const CertificateStore& store,
                                            std::string* note) {
  const int n = g.order();
  const Graph co = complement(g);
  for (int parity = 0; parity < 2; ++parity) {
    const Graph& host = parity ? co : g;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (!are_twins(host, u, v) || host.has_edge(u, v)) continue;
        const Graph reduced = remove_vertex(host, v);
        const Certificate* stored = store.find(canonical6(reduced));
        if (!stored) continue;
        const auto iso = find_isomorphism(stored->graph, reduced);
        if (!iso) continue;
        const Certificate on_reduced = permute_certificate(*stored, *iso);
        if (on_reduced.A.at(u, u) != 0) continue;
        // remove_vertex kept u's label (u < v); the clone lands last.
        Certificate grown = duplicate_vertex(on_reduced, u, 1);
        std::vector<int> back(static_cast<std::size_t>(n));
        for (int i = 0; i + 1 < n; ++i) back[std::size_t(i)] = i < v ? i : i + 1;
        back[std::size_t(n - 1)] = v;
        Certificate cert = permute_certificate(grown, back);
        if (parity) cert = complement_certificate(cert);
        if (!(cert.graph == g))
          throw std::logic_error("duplication reassembled the wrong graph");
        cert.provenance = Provenance::Duplication;
        if (note)
          *note = std::string("doubled twin of vertex ") + std::to_string(u) +
                  (parity ? " in the complement" : "") + " from stored " +
                  encode_graph6(reduced);
        return cert;
      }
  }
  return std::nullopt;
}

void check_valid(const Certificate& cert, const char* stage) {
  const VerifyResult vr = verify(cert);
  if (!vr.valid)
    throw std::logic_error(std::string(stage) +
                           " produced an invalid certificate: " + vr.reason);
}

}  // namespace

const std::vector<std::string>& pinned_residual_set() {
  static const std::vector<std::string> pinned = {"G?C~NG", "G?LTMO", "G@TctG",
                                                  "G@UmvG"};
  return pinned;
}

CensusResult run_census(const CensusOptions& options) {
  if (options.max_n < 1 || options.max_n > Graph::kMaxVertices)
    throw std::invalid_argument("census order out of range");
  CensusResult out;
  CertificateStore store;
  for (int n = 1; n <= options.max_n; ++n) {
    CensusRow row;
    row.n = n;
    for (const Graph& g : generate_all(n, GenFilter::ConnectedCoConnected)) {
      CensusEntry entry;
      entry.n = n;
      entry.graph6 = encode_graph6(g);

      const RefuteResult refuted = refute(g);
      if (refuted.outcome == RefuteOutcome::NotCV) {
        const bool diag = refuted.reason == RefuteReason::DiagonalContradiction;
        (diag ? row.diag : row.odd_cycle) += 1;
        entry.verdict = "not_cv";
        entry.method = diag ? "diag" : "odd_cycle";
        entry.reason = refuted.detail;
        out.entries.push_back(std::move(entry));
        continue;
      }

      bool algebraic = false;
      if (options.run_groebner) {
        const GroebnerReport report =
            groebner_refutes(g, options.groebner_limits, true);
        if (report.verdict == RefuteVerdict::Refuted) {
          algebraic = true;
          entry.method = "groebner";
          entry.reason = report.witness;
        }
      } else {
        for (const std::string& pinned : pinned_residual_set())
          if (entry.graph6 == pinned) {
            algebraic = true;
            entry.method = "residual";
            entry.reason = "matches the pinned algebraic residual set";
          }
      }
      if (algebraic) {
        row.grobner_or_residual += 1;
        entry.verdict = "not_cv";
        out.entries.push_back(std::move(entry));
        continue;
      }

      std::optional<Certificate> cert;
      std::string note;
      if (every_vertex_twinned(g)) {
        cert = twin_certificate(g);
        check_valid(*cert, "twin construction");
        row.twin += 1;
        entry.method = "twin";
        entry.reason = "every vertex has a twin";
      } else if ((cert = duplication_step(g, store, &note))) {
        check_valid(*cert, "duplication");
        row.duplication += 1;
        entry.method = "duplication";
        entry.reason = note;
      } else {
        const TrialResult trial = random_trial(
            g, options.attempts, mix_seed(options.seed, fnv1a(entry.graph6)));
        if (trial.certificate) {
          cert = trial.certificate;
          check_valid(*cert, "randomized search");
          row.certificate_found += 1;
          entry.method = "random";
          entry.reason = "found after " +
                         std::to_string(trial.attempts_used) + " attempts";
        } else if ((cert = imported_certificate(g))) {
          row.certificate_found += 1;
          entry.method = "imported";
          entry.reason = "shipped hand-built construction";
        }
      }

      if (cert) {
        store.put(*cert);
        entry.verdict = "cv";
        entry.certificate = std::move(cert);
      } else {
        row.unresolved += 1;
        entry.verdict = "unresolved";
        entry.method = "";
        entry.reason = "no refutation and no certificate within budget";
      }
      out.entries.push_back(std::move(entry));
    }
    out.rows.push_back(row);
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const CensusEntry& a, const CensusEntry& b) {
              return a.n != b.n ? a.n < b.n : a.graph6 < b.graph6;
            });
  return out;
}

std::string census_table(const CensusResult& result) {
  std::ostringstream out;
  out << "n\tdiag\todd_cycle\tgrobner_or_residual\ttwin\tduplication"
         "\tcertificate_found\tunresolved\tnot_cv\tcv\ttotal_pairs\n";
  for (const CensusRow& row : result.rows)
    out << row.n << '\t' << row.diag << '\t' << row.odd_cycle << '\t'
        << row.grobner_or_residual << '\t' << row.twin << '\t'
        << row.duplication << '\t' << row.certificate_found << '\t'
        << row.unresolved << '\t' << row.not_cv() << '\t' << row.cv() << '\t'
        << row.total_pairs() << '\n';
  return out.str();
}

std::string census_ledger(const CensusResult& result,
                          const std::vector<std::string>& cert_paths) {
  if (!cert_paths.empty() && cert_paths.size() != result.entries.size())
    throw std::invalid_argument("certificate paths do not match the entries");
  std::ostringstream out;
  out << "n\tgraph6\tverdict\tmethod\treason\tcertificate\n";
  for (std::size_t i = 0; i < result.entries.size(); ++i) {
    const CensusEntry& e = result.entries[i];
    out << e.n << '\t' << e.graph6 << '\t' << e.verdict << '\t' << e.method
        << '\t' << e.reason << '\t'
        << (cert_paths.empty() ? std::string() : cert_paths[i]) << '\n';
  }
  return out.str();
}

}  // namespace cvg
