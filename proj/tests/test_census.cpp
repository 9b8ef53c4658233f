#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cvg/census.hpp"
#include "cvg/certify.hpp"
#include "cvg/graph6.hpp"
#include "cvg/mdatabase.hpp"
#include "cvg/structure.hpp"

using namespace cvg;

namespace {

// One full default run shared by all cases below.
const CensusResult& full_census() {
  static const CensusResult result = run_census(CensusOptions{});
  return result;
}

}  // namespace

TEST_CASE("row totals match the published survey") {
  const auto& rows = full_census().rows;
  REQUIRE(rows.size() == 8);
  const long totals[] = {1, 0, 0, 1, 5, 34, 331, 4949};
  const long cv[] = {1, 0, 0, 0, 0, 0, 4, 32};
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    const CensusRow& row = rows[std::size_t(n - 1)];
    CHECK(row.n == n);
    CHECK(row.total_pairs() == totals[n - 1]);
    CHECK(row.cv() == cv[n - 1]);
    CHECK(row.not_cv() == totals[n - 1] - cv[n - 1]);
    CHECK(row.unresolved == 0);
    CHECK(row.not_cv() + row.cv() + row.unresolved == row.total_pairs());
  }
}

TEST_CASE("method columns match the published breakdown") {
  const auto& rows = full_census().rows;
  REQUIRE(rows.size() == 8);
  const long diag[] = {0, 0, 0, 1, 5, 34, 326, 4905};
  for (int n = 4; n <= 8; ++n) CHECK(rows[std::size_t(n - 1)].diag == diag[n - 1]);
  CHECK(rows[6].odd_cycle == 1);
  CHECK(rows[7].odd_cycle == 8);
  CHECK(rows[6].grobner_or_residual == 0);
  CHECK(rows[7].grobner_or_residual == 4);
  CHECK(rows[6].twin == 0);
  CHECK(rows[7].twin == 6);
  CHECK(rows[6].duplication == 0);
  CHECK(rows[7].duplication == 14);
  CHECK(rows[6].certificate_found == 4);
  CHECK(rows[7].certificate_found == 12);
}

TEST_CASE("residual entries are exactly the pinned set") {
  std::set<std::string> residual;
  for (const CensusEntry& e : full_census().entries)
    if (e.method == "residual") residual.insert(e.graph6);
  const auto& pinned = pinned_residual_set();
  CHECK(residual == std::set<std::string>(pinned.begin(), pinned.end()));
}

TEST_CASE("exactly one pair needs the shipped construction") {
  std::vector<std::string> imported;
  for (const CensusEntry& e : full_census().entries)
    if (e.method == "imported") imported.push_back(e.graph6);
  REQUIRE(imported.size() == 1);
  CHECK(imported[0] == "G?]unO");
}

TEST_CASE("every claimed certificate verifies exactly") {
  const std::map<std::string, Provenance> provenance_of{
      {"twin", Provenance::Twin},
      {"duplication", Provenance::Duplication},
      {"random", Provenance::RandomTrial},
      {"imported", Provenance::Imported}};
  for (const CensusEntry& e : full_census().entries) {
    CAPTURE(e.graph6);
    if (e.verdict != "cv") {
      CHECK(!e.certificate.has_value());
      continue;
    }
    REQUIRE(e.certificate.has_value());
    CHECK(e.certificate->graph == decode_graph6(e.graph6));
    CHECK(e.certificate->provenance == provenance_of.at(e.method));
    const VerifyResult vr = verify(*e.certificate);
    CHECK(vr.valid);
    CHECK(vr.reason.empty());
  }
}

TEST_CASE("rows recount exactly from the ledger entries") {
  std::map<int, std::map<std::string, long>> by_method;
  for (const CensusEntry& e : full_census().entries) {
    const std::string key = e.verdict == "unresolved" ? "unresolved" : e.method;
    by_method[e.n][key] += 1;
  }
  for (const CensusRow& row : full_census().rows) {
    auto& m = by_method[row.n];
    CHECK(row.diag == m["diag"]);
    CHECK(row.odd_cycle == m["odd_cycle"]);
    CHECK(row.grobner_or_residual == m["residual"] + m["groebner"]);
    CHECK(row.twin == m["twin"]);
    CHECK(row.duplication == m["duplication"]);
    CHECK(row.certificate_found == m["random"] + m["imported"]);
    CHECK(row.unresolved == m["unresolved"]);
  }
  long entries = 0;
  for (const CensusRow& row : full_census().rows) entries += row.total_pairs();
  CHECK(entries == long(full_census().entries.size()));
}

TEST_CASE("ledger verdicts agree with the structural classifier") {
  const MDatabase db = MDatabase::embedded();
  for (const CensusEntry& e : full_census().entries) {
    CAPTURE(e.graph6);
    const ClassificationReport report = classify(decode_graph6(e.graph6), db);
    if (e.verdict == "cv")
      CHECK(report.verdict == Verdict::CV);
    else if (e.verdict == "not_cv")
      CHECK(report.verdict == Verdict::NotCV);
  }
}

TEST_CASE("identical options give byte-identical output") {
  const CensusResult again = run_census(CensusOptions{});
  CHECK(census_table(full_census()) == census_table(again));
  CHECK(census_ledger(full_census()) == census_ledger(again));
}

TEST_CASE("output formats are well-formed") {
  const std::string table = census_table(full_census());
  CHECK(table.rfind("n\tdiag\todd_cycle\tgrobner_or_residual\ttwin", 0) == 0);
  CHECK(std::count(table.begin(), table.end(), '\n') == 9);  // header + 8 rows

  const std::string ledger = census_ledger(full_census());
  CHECK(std::count(ledger.begin(), ledger.end(), '\n') ==
        long(full_census().entries.size()) + 1);

  std::vector<std::string> paths(full_census().entries.size(), "x.cert");
  CHECK(census_ledger(full_census(), paths).find("\tx.cert\n") !=
        std::string::npos);
  paths.pop_back();
  CHECK_THROWS_AS(census_ledger(full_census(), paths), std::invalid_argument);

  // Entries arrive sorted by (n, graph6).
  const auto& entries = full_census().entries;
  for (std::size_t i = 1; i < entries.size(); ++i)
    CHECK((entries[i - 1].n < entries[i].n ||
           (entries[i - 1].n == entries[i].n &&
            entries[i - 1].graph6 < entries[i].graph6)));
}

TEST_CASE("truncated surveys stop at the requested order") {
  CensusOptions options;
  options.max_n = 1;
  const CensusResult tiny = run_census(options);
  REQUIRE(tiny.rows.size() == 1);
  REQUIRE(tiny.entries.size() == 1);
  CHECK(tiny.entries[0].graph6 == "@");
  CHECK(tiny.entries[0].verdict == "cv");
  CHECK(tiny.rows[0].certificate_found == 1);

  CHECK_THROWS_AS(run_census(CensusOptions{.max_n = 0}), std::invalid_argument);
}
