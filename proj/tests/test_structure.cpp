#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cvg/canonical.hpp"
#include "cvg/generate.hpp"
#include "cvg/graph.hpp"
#include "cvg/graph6.hpp"
#include "cvg/mdatabase.hpp"
#include "cvg/structure.hpp"
#include "test_support.hpp"

using namespace cvg;

namespace {

Graph matched_bipartite_example() {
  // (K2 u K2) v (K2 u K2): complete bipartite K_{4,4} plus a perfect
  // matching on each side's pairs.
  const Graph side = disjoint_union(complete_graph(2), complete_graph(2));
  return join_graphs(side, side);
}

Graph threshold_graph(int n, std::uint64_t bits) {
  Graph g(1);
  for (int k = 1; k < n; ++k) {
    Graph h(k + 1);
    for (int u = 0; u < k; ++u)
      for (int v = u + 1; v < k; ++v)
        if (g.has_edge(u, v)) h.add_edge(u, v);
    if ((bits >> k) & 1u)
      for (int v = 0; v < k; ++v) h.add_edge(v, k);
    g = h;
  }
  return g;
}

void check_tree_shape(const DecompositionTree& t) {
  if (t.kind == DecompositionTree::Kind::Leaf) {
    CHECK(t.children.empty());
    CHECK(is_connected(t.graph));
    CHECK(is_connected(complement(t.graph)));
    return;
  }
  CHECK(t.children.size() >= 2);
  for (const auto& c : t.children) check_tree_shape(c);
}

}  // namespace

TEST_CASE("embedded catalog integrity") {
  const MDatabase db = MDatabase::embedded();
  CHECK(db.complete_up_to() == 8);
  CHECK(db.pair_count(1) == 1);
  for (int n = 2; n <= 6; ++n) CHECK(db.pair_count(n) == 0);
  CHECK(db.pair_count(7) == 4);
  CHECK(db.pair_count(8) == 32);
  // 1 + 2*4 + 2*32, minus four self-complementary order-8 entries.
  CHECK(db.forms().size() == 69);
  int self_complementary = 0;
  for (const auto& [s, cs] : embedded_pair_strings())
    if (canonical_form(decode_graph6(s)) ==
        canonical_form(complement(decode_graph6(s))))
      ++self_complementary;
  CHECK(self_complementary == 5);  // K1 and four order-8 blocks

  for (const CanonicalForm& f : db.forms()) {
    const Graph g = canonical_graph(f);
    CHECK(is_connected(g));
    CHECK(is_connected(complement(g)));
    CHECK(db.contains(complement(g)));
  }

  // Membership is isomorphism-invariant.
  test_support::Rng rng(77);
  const Graph g1 = decode_graph6("FxKGW");
  for (int it = 0; it < 20; ++it) {
    std::vector<int> perm{0, 1, 2, 3, 4, 5, 6};
    test_support::shuffle(perm, rng);
    CHECK(db.contains(permute(g1, perm)));
  }
  CHECK(!db.contains(path_graph(4)));
  CHECK(!db.contains(decode_graph6("G~U`}W")));
}

TEST_CASE("catalog can be loaded from a file") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "cvg_db_test.g6";
  {
    std::ofstream out(path);
    out << "@\n# comment line\nFxKGW\n";
  }
  const MDatabase db = MDatabase::from_graph6_file(path.string(), 3);
  CHECK(db.complete_up_to() == 3);
  CHECK(db.contains(complete_graph(1)));
  CHECK(db.contains(decode_graph6("FErv_")));  // complement closure
  CHECK(!db.contains(complete_graph(2)));
  // Beyond the declared range, absence is inconclusive rather than negative.
  CHECK(in_R(path_graph(4), db) == Membership::Unknown);
  CHECK(in_R(path_graph(3), db) == Membership::Yes);  // K1 leaves only
  fs::remove(path);
}

TEST_CASE("decomposition shapes") {
  const DecompositionTree leaf = decompose(path_graph(4));
  CHECK(leaf.kind == DecompositionTree::Kind::Leaf);
  CHECK(leaf.graph == path_graph(4));

  CHECK(decompose(complete_graph(1)).kind == DecompositionTree::Kind::Leaf);

  const DecompositionTree star = decompose(star_graph(3));
  REQUIRE(star.kind == DecompositionTree::Kind::Join);
  REQUIRE(star.children.size() == 2);
  bool saw_center = false, saw_leaves = false;
  for (const auto& c : star.children) {
    if (c.kind == DecompositionTree::Kind::Leaf && c.graph.order() == 1)
      saw_center = true;
    if (c.kind == DecompositionTree::Kind::Union) {
      CHECK(c.children.size() == 3);
      for (const auto& gc : c.children) CHECK(gc.graph.order() == 1);
      saw_leaves = true;
    }
  }
  CHECK(saw_center);
  CHECK(saw_leaves);

  const DecompositionTree matched = decompose(matched_bipartite_example());
  REQUIRE(matched.kind == DecompositionTree::Kind::Join);
  REQUIRE(matched.children.size() == 2);
  for (const auto& side : matched.children) {
    REQUIRE(side.kind == DecompositionTree::Kind::Union);
    REQUIRE(side.children.size() == 2);
    for (const auto& pair : side.children) {
      CHECK(pair.graph == complete_graph(2));
      // An edge is itself a join of two singletons.
      CHECK(pair.kind == DecompositionTree::Kind::Join);
    }
  }

  const DecompositionTree two_paths =
      decompose(disjoint_union(path_graph(3), path_graph(2)));
  REQUIRE(two_paths.kind == DecompositionTree::Kind::Union);
  REQUIRE(two_paths.children.size() == 2);
  CHECK(two_paths.children[0].graph.order() == 3);
  CHECK(two_paths.children[1].graph.order() == 2);
}

TEST_CASE("decomposition recomposes and its leaves are two-way connected") {
  auto check_graph = [](const Graph& g) {
    const DecompositionTree t = decompose(g);
    check_tree_shape(t);
    CHECK(canonical_form(recompose(t)) == canonical_form(g));
  };
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : generate_all(n, GenFilter::All)) check_graph(g);
  test_support::Rng rng(31);
  for (int it = 0; it < 200; ++it)
    check_graph(test_support::random_graph(int(rng.uniform(2, 8)), rng));
}

TEST_CASE("closure membership") {
  const MDatabase db = MDatabase::embedded();

  test_support::Rng rng(5150);
  for (int it = 0; it < 40; ++it) {
    const int n = int(rng.uniform(1, 8));
    CHECK(in_R(threshold_graph(n, rng.next()), db) == Membership::Yes);
  }
  CHECK(in_R(complete_bipartite(2, 3), db) == Membership::Yes);
  CHECK(in_R(join_graphs(complete_bipartite(3, 3), empty_graph(2)), db) ==
        Membership::Yes);

  // Cographs decompose to singleton leaves, so they always belong.
  CHECK(in_R(disjoint_union(path_graph(3), path_graph(2)), db) ==
        Membership::Yes);

  const Graph g1 = decode_graph6("FxKGW");
  CHECK(in_R(g1, db) == Membership::Yes);
  CHECK(in_R(disjoint_union(g1, complete_graph(1)), db) == Membership::Yes);

  CHECK(in_R(decode_graph6("G~U`}W"), db) == Membership::No);
  CHECK(in_R(path_graph(4), db) == Membership::No);
  CHECK(in_R(cycle_graph(5), db) == Membership::No);
  CHECK(in_R(cycle_graph(9), db) == Membership::Unknown);
}

TEST_CASE("classification examples") {
  const MDatabase db = MDatabase::embedded();

  auto report = classify(matched_bipartite_example(), db);
  CHECK(report.verdict == Verdict::CV);
  REQUIRE(report.robust_alpha.has_value());
  REQUIRE(report.robust_beta.has_value());
  CHECK(*report.robust_alpha);
  CHECK(*report.robust_beta);

  // Stars admit a pair; their kernels-of-A never carry nowhere-zero vectors.
  for (int leaves = 2; leaves <= 7; ++leaves) {
    auto star = classify(star_graph(leaves), db);
    CHECK(star.verdict == Verdict::CV);
    CHECK(!*star.robust_alpha);
    CHECK(*star.robust_beta);
    auto co = classify(complement(star_graph(leaves)), db);
    CHECK(co.verdict == Verdict::CV);
    CHECK(*co.robust_alpha);
    CHECK(!*co.robust_beta);
  }

  auto k1 = classify(complete_graph(1), db);
  CHECK(k1.verdict == Verdict::CV);
  CHECK(*k1.robust_alpha);
  CHECK(*k1.robust_beta);

  // Non-star trees fail.
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& g : generate_all(n, GenFilter::All)) {
      if (!is_connected(g) || g.edge_count() != n - 1) continue;
      bool star = false;
      for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) star = true;
      CHECK((classify(g, db).verdict == Verdict::CV) == star);
    }
  }

  CHECK(classify(decode_graph6("G~U`}W"), db).verdict == Verdict::NotCV);
  CHECK(classify(disjoint_union(path_graph(3), path_graph(2)), db).verdict ==
        Verdict::NotCV);

  CHECK_THROWS_AS(robustness(path_graph(4), db), PreconditionViolated);

  // A nine-vertex cycle escapes the catalog but still falls to the
  // combinatorial refuter.
  auto c9 = classify(cycle_graph(9), db);
  CHECK(c9.verdict == Verdict::NotCV);

  // Duplicating a vertex of a catalogued eight-vertex block gives
  // nine-vertex graphs the procedure must leave undecided (it is honest
  // about the catalog ending at order eight).
  const Graph g5 = decode_graph6("G_Kpe[");
  int unknowns = 0;
  for (int dup = 0; dup < 8; ++dup) {
    Graph g(9);
    for (int u = 0; u < 8; ++u)
      for (int v = u + 1; v < 8; ++v)
        if (g5.has_edge(u, v)) g.add_edge(u, v);
    for (int v = 0; v < 8; ++v)
      if (v != dup && g5.has_edge(dup, v)) g.add_edge(8, v);
    auto r = classify(g, db);
    CHECK(r.verdict != Verdict::CV);
    if (r.verdict == Verdict::Unknown) {
      ++unknowns;
      CHECK(!r.robust_alpha.has_value());
      CHECK(!r.robust_beta.has_value());
    }
  }
  CHECK(unknowns == 6);
}

TEST_CASE("verdict is complement-invariant") {
  const MDatabase db = MDatabase::embedded();
  auto check_graph = [&](const Graph& g) {
    CHECK(classify(g, db).verdict == classify(complement(g), db).verdict);
  };
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : generate_all(n, GenFilter::All)) check_graph(g);
  test_support::Rng rng(4242);
  for (int it = 0; it < 200; ++it)
    check_graph(test_support::random_graph(int(rng.uniform(2, 9)), rng));
}

TEST_CASE("verdict counts over the full census") {
  const MDatabase db = MDatabase::embedded();
  const int expected_cv[] = {0, 1, 0, 0, 0, 0, 0, 4, 32};
  const int expected_not[] = {0, 0, 0, 0, 1, 5, 34, 327, 4917};
  for (int n = 1; n <= 8; ++n) {
    int cv = 0, not_cv = 0, unknown = 0;
    for (const Graph& g : generate_all(n, GenFilter::ConnectedCoConnected)) {
      auto report = classify(g, db);
      CHECK(report.robust_alpha.has_value() ==
            (report.verdict == Verdict::CV));
      switch (report.verdict) {
        case Verdict::CV: {
          ++cv;
          // No dominating or isolated vertex means both kernels can carry
          // nowhere-zero vectors.
          if (find_dominating_vertex(g) < 0 && find_isolated_vertex(g) < 0) {
            CHECK(*report.robust_alpha);
            CHECK(*report.robust_beta);
          }
          break;
        }
        case Verdict::NotCV:
          ++not_cv;
          break;
        case Verdict::Unknown:
          ++unknown;
          break;
      }
      // The combinatorial refuter never contradicts the classifier.
      if (n <= 7 && refute(g).outcome == RefuteOutcome::NotCV)
        CHECK(report.verdict == Verdict::NotCV);
    }
    CHECK(cv == expected_cv[n]);
    CHECK(not_cv == expected_not[n]);
    CHECK(unknown == 0);
  }
}
