#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "cvg/canonical.hpp"
#include "cvg/generate.hpp"
#include "cvg/graph.hpp"
#include "cvg/graph6.hpp"
#include "test_support.hpp"

using namespace cvg;

TEST_CASE("graph basics") {
  Graph g = path_graph(4);
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)g.has_edge(0, 9), std::out_of_range);

  Graph co = complement(g);
  CHECK(co.edge_count() == 3);
  CHECK(co.has_edge(0, 2));
  CHECK(!co.has_edge(0, 1));
  CHECK(complement(co) == g);
}

TEST_CASE("components and connectivity") {
  Graph g = disjoint_union(path_graph(3), complete_graph(2));
  auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 1, 2});
  CHECK(comps[1] == std::vector<int>{3, 4});
  CHECK(!is_connected(g));
  CHECK(is_connected(path_graph(5)));
  CHECK(is_connected(Graph(1)));
  // The 5-cycle and its complement are both connected.
  CHECK(is_connected(cycle_graph(5)));
  CHECK(is_connected(complement(cycle_graph(5))));
}

TEST_CASE("twins") {
  // Complete bipartite K_{2,3}: each side is one twin class.
  Graph g = complete_bipartite(2, 3);
  auto classes = twin_partition(g);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == std::vector<int>{0, 1});
  CHECK(classes[1] == std::vector<int>{2, 3, 4});
  CHECK(are_twins(g, 0, 1));
  CHECK(!are_twins(g, 0, 2));
  // Twins are complement-invariant.
  Graph co = complement(g);
  CHECK(twin_partition(co) == classes);
  // C5 has no twins at all.
  for (auto& cls : twin_partition(cycle_graph(5))) CHECK(cls.size() == 1);
  // Adjacent twins: K3 is a single class.
  CHECK(twin_partition(complete_graph(3)).size() == 1);
}

TEST_CASE("dominating and isolated vertices") {
  CHECK(find_dominating_vertex(star_graph(3)) == 0);
  CHECK(find_dominating_vertex(path_graph(4)) == -1);
  CHECK(find_isolated_vertex(disjoint_union(Graph(1), complete_graph(2))) == 0);
  CHECK(find_isolated_vertex(path_graph(3)) == -1);
  // Vacuous conventions on K1.
  CHECK(find_dominating_vertex(Graph(1)) == 0);
  CHECK(find_isolated_vertex(Graph(1)) == 0);
}

TEST_CASE("graph6 decode/encode basics") {
  Graph k1 = decode_graph6("@");
  CHECK(k1.order() == 1);
  CHECK(encode_graph6(k1) == "@");

  Graph two = decode_graph6("A?");
  CHECK(two.order() == 2);
  CHECK(two.edge_count() == 0);
  CHECK(encode_graph6(two) == "A?");

  Graph k2 = decode_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.has_edge(0, 1));

  CHECK_THROWS_AS(decode_graph6(""), InvalidGraph6);
  CHECK_THROWS_AS(decode_graph6("A"), InvalidGraph6);     // truncated body
  CHECK_THROWS_AS(decode_graph6("A?_"), InvalidGraph6);   // trailing bytes
  CHECK_THROWS_AS(decode_graph6("A\x20"), InvalidGraph6); // byte below range
  CHECK_THROWS_AS(decode_graph6("~??????"), InvalidGraph6);  // long header
  CHECK_THROWS_AS(decode_graph6("Q"), InvalidGraph6);     // n = 18 > 16
  // Nonzero padding bits rejected: n=2 with low bits set.
  CHECK_THROWS_AS(decode_graph6("A!"), InvalidGraph6);
}

TEST_CASE("graph6 roundtrip on structured graphs") {
  for (int n = 1; n <= 8; ++n) {
    Graph g = path_graph(n);
    CHECK(decode_graph6(encode_graph6(g)) == g);
    Graph k = complete_graph(n);
    CHECK(decode_graph6(encode_graph6(k)) == k);
  }
  // 16-vertex graph exercises multi-byte bodies near the size cap.
  Graph big = complete_bipartite(8, 8);
  CHECK(decode_graph6(encode_graph6(big)) == big);
}

TEST_CASE("graph6 random roundtrips") {
  test_support::Rng rng(0xc0ffee);
  for (int iter = 0; iter < 2000; ++iter) {
    int n = 1 + int(rng.next() % 16);
    Graph g = test_support::random_graph(n, rng);
    Graph h = decode_graph6(encode_graph6(g));
    CHECK(h == g);
  }
}

TEST_CASE("canonical form is isomorphism-invariant") {
  test_support::Rng rng(42);
  for (int iter = 0; iter < 300; ++iter) {
    int n = 1 + int(rng.next() % 8);
    Graph g = test_support::random_graph(n, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    test_support::shuffle(perm, rng);
    Graph h = permute(g, perm);
    CHECK(canonical_form(g) == canonical_form(h));
    auto iso = find_isomorphism(g, h);
    REQUIRE(iso.has_value());
    CHECK(permute(g, *iso) == h);
  }
  // Non-isomorphic graphs with equal degree sequences separate.
  CHECK(canonical_form(cycle_graph(6)) !=
        canonical_form(disjoint_union(complete_graph(3), complete_graph(3))));
}

TEST_CASE("canonical graph realizes the form") {
  test_support::Rng rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 1 + int(rng.next() % 8);
    Graph g = test_support::random_graph(n, rng);
    auto res = canonical_form_with_perm(g);
    Graph cg = canonical_graph(res.form);
    CHECK(permute(g, res.perm) == cg);
    CHECK(canonical_form(cg) == res.form);
  }
}

TEST_CASE("canonical form handles the 16-vertex cap") {
  // Highly symmetric instances stress the search; twin classes collapse them.
  CHECK(canonical_form(complete_graph(16)) ==
        canonical_form(complete_graph(16)));
  Graph g = complete_bipartite(8, 8);
  std::vector<int> perm(16);
  std::iota(perm.begin(), perm.end(), 0);
  std::reverse(perm.begin(), perm.end());
  CHECK(canonical_form(g) == canonical_form(permute(g, perm)));
}

TEST_CASE("generate_all counts match the labeled-enumeration oracle") {
  // Oracle: enumerate all labeled graphs on n vertices and count orbits by
  // brute-force minimization over every permutation (independent of the
  // library's canonical search).
  const int expected[] = {0, 1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) {
    auto oracle = test_support::orbit_count_brute_force(n);
    CHECK(oracle == expected[n]);
    auto gen = generate_all(n, GenFilter::All);
    CHECK(int(gen.size()) == expected[n]);
    // Every returned graph is canonically labeled and distinct.
    std::set<CanonicalForm> forms;
    for (const Graph& g : gen) {
      CHECK(canonical_graph(canonical_form(g)) == g);
      forms.insert(canonical_form(g));
    }
    CHECK(int(forms.size()) == expected[n]);
  }
  CHECK_THROWS_AS(generate_all(9, GenFilter::All), UnsupportedSize);
  CHECK_THROWS_AS(generate_all(0, GenFilter::All), UnsupportedSize);
}

TEST_CASE("connected-coconnected pair counts for small orders") {
  const int expected[] = {0, 1, 0, 0, 1, 5, 34};
  for (int n = 1; n <= 6; ++n) {
    auto pairs = generate_all(n, GenFilter::ConnectedCoConnected);
    CHECK(int(pairs.size()) == expected[n]);
    for (const Graph& g : pairs) {
      CHECK(is_connected(g));
      CHECK(is_connected(complement(g)));
      // Representative is the lexicographically smaller form of the pair.
      CHECK(canonical_form(g) <= canonical_form(complement(g)));
    }
  }
  // P4 is the unique (self-complementary) representative at n=4.
  auto four = generate_all(4, GenFilter::ConnectedCoConnected);
  REQUIRE(four.size() == 1);
  CHECK(canonical_form(four[0]) == canonical_form(path_graph(4)));
}
