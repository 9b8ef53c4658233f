#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cvg/generate.hpp"
#include "cvg/graph.hpp"
#include "cvg/graph6.hpp"
#include "cvg/groebner.hpp"
#include "cvg/mdatabase.hpp"
#include "cvg/rules.hpp"
#include "test_support.hpp"

using namespace cvg;

namespace {

Monomial mono(const std::vector<int>& exps) {
  Monomial m;
  m.exp.assign(exps.begin(), exps.end());
  m.degree = std::accumulate(exps.begin(), exps.end(), 0);
  return m;
}

Polynomial poly(int nvars,
                const std::vector<std::pair<long, std::vector<int>>>& terms) {
  Polynomial p = Polynomial::zero();
  for (const auto& [coeff, exps] : terms) {
    REQUIRE(int(exps.size()) == nvars);
    p = poly_add_scaled(p, mpz_class(coeff), mono(exps), Polynomial::constant(1, nvars));
  }
  return p;
}

Monomial random_monomial(int nvars, int max_exp, test_support::Rng& rng) {
  std::vector<int> exps(static_cast<std::size_t>(nvars));
  for (int& e : exps) e = int(rng.uniform(0, max_exp));
  return mono(exps);
}

bool less(const Monomial& a, const Monomial& b) {
  return degrevlex(a, b) == std::strong_ordering::less;
}

// Every S-polynomial of the basis and every original generator must reduce
// to zero: the defining property, checked without trusting the run.
void check_basis_property(const std::vector<Polynomial>& gens,
                          const BuchbergerResult& result) {
  REQUIRE(result.status == BuchbergerStatus::Basis);
  REQUIRE(!result.basis.empty());
  for (std::size_t i = 0; i < result.basis.size(); ++i)
    for (std::size_t j = i + 1; j < result.basis.size(); ++j) {
      const Polynomial s = s_polynomial(result.basis[i], result.basis[j]);
      CHECK(normal_form(s, result.basis).is_zero());
    }
  for (const Polynomial& g : gens)
    CHECK(normal_form(g, result.basis).is_zero());
}

bool univariate_power_of(const Polynomial& p, int var) {
  if (p.is_zero()) return false;
  for (const Term& t : p.terms)
    for (std::size_t v = 0; v < t.mono.exp.size(); ++v)
      if (t.mono.exp[v] != 0 && int(v) != var) return false;
  return p.degree() > 0;
}

}  // namespace

TEST_CASE("degrevlex satisfies the monomial-order axioms") {
  test_support::Rng rng(0x5eed);
  for (int round = 0; round < 400; ++round) {
    const int nvars = int(rng.uniform(1, 6));
    const Monomial a = random_monomial(nvars, 4, rng);
    const Monomial b = random_monomial(nvars, 4, rng);
    const Monomial c = random_monomial(nvars, 4, rng);
    // Totality: equal exponents iff comparison says equal.
    CHECK((degrevlex(a, b) == std::strong_ordering::equal) == (a == b));
    CHECK((less(a, b) || less(b, a) || a == b));
    // Compatibility with multiplication.
    if (less(a, b)) CHECK(less(mono_mul(a, c), mono_mul(b, c)));
    // Transitivity.
    if (less(a, b) && less(b, c)) CHECK(less(a, c));
    // The unit monomial is the global minimum; divisors never rank higher.
    if (!(a == Monomial::one(nvars))) CHECK(less(Monomial::one(nvars), a));
    if (divides(a, b)) CHECK(!less(b, a));
  }
}

TEST_CASE("polynomial arithmetic keeps primitive sorted form") {
  // 2x + 2y has content 2; x - x cancels; to_string renders sorted terms.
  Polynomial two = poly(2, {{2, {1, 0}}, {2, {0, 1}}});
  two.normalize();
  REQUIRE(two.terms.size() == 2);
  CHECK(two.terms[0].coeff == 1);
  CHECK(two.terms[1].coeff == 1);
  const Polynomial x = poly(2, {{1, {1, 0}}});
  CHECK(poly_add(x, poly_scale(x, mpz_class(-1))).is_zero());

  VarTable vars({{'A', 0, 1}, {'A', 0, 0}});
  Polynomial mixed = poly(2, {{-3, {2, 0}}, {1, {0, 1}}});
  mixed.normalize();  // flips the sign so the leading coefficient is positive
  CHECK(to_string(mixed, vars) == "3*a[0,1]^2 - a[0]");
  CHECK(to_string(Polynomial::zero(), vars) == "0");
}

TEST_CASE("buchberger certifies a fixed suite of small ideals") {
  std::vector<std::vector<Polynomial>> suite;
  // 1: single variable.
  suite.push_back({poly(1, {{1, {1}}})});
  // 2: shifted variable; stays itself.
  suite.push_back({poly(1, {{1, {1}}, {-1, {0}}})});
  // 3: xy - 1 and x force 1 into the ideal.
  suite.push_back({poly(2, {{1, {1, 1}}, {-1, {0, 0}}}), poly(2, {{1, {1, 0}}})});
  // 4: the classic x^2 + y^2, xy pair.
  suite.push_back({poly(2, {{1, {2, 0}}, {1, {0, 2}}}), poly(2, {{1, {1, 1}}})});
  // 5: cyclic-3.
  suite.push_back({poly(3, {{1, {1, 0, 0}}, {1, {0, 1, 0}}, {1, {0, 0, 1}}}),
                   poly(3, {{1, {1, 1, 0}}, {1, {0, 1, 1}}, {1, {1, 0, 1}}}),
                   poly(3, {{1, {1, 1, 1}}, {-1, {0, 0, 0}}})});
  // 6: a katsura-style quadratic system.
  suite.push_back({poly(3, {{1, {1, 0, 0}}, {2, {0, 1, 0}}, {2, {0, 0, 1}}, {-1, {0, 0, 0}}}),
                   poly(3, {{1, {2, 0, 0}}, {2, {0, 2, 0}}, {2, {0, 0, 2}}, {-1, {1, 0, 0}}}),
                   poly(3, {{2, {1, 1, 0}}, {2, {0, 1, 1}}, {-1, {0, 1, 0}}})});
  // 7: intersecting parabolas.
  suite.push_back({poly(2, {{1, {2, 0}}, {-1, {0, 1}}}), poly(2, {{1, {0, 2}}, {-1, {1, 0}}})});
  // 8: a standard textbook pair with a nontrivial completion.
  suite.push_back({poly(2, {{1, {3, 0}}, {-2, {1, 1}}}),
                   poly(2, {{1, {2, 1}}, {-2, {0, 2}}, {1, {1, 0}}})});
  // 9: linear plus a square.
  suite.push_back({poly(2, {{1, {1, 0}}, {1, {0, 1}}}), poly(2, {{1, {2, 0}}})});
  // 10: an ideal straight from the pipeline (a certified 7-vertex graph).
  {
    const Graph g = decode_graph6("FxKGW");
    suite.push_back(build_ideal(g, diagonal_constraints(g)).generators);
  }
  REQUIRE(suite.size() == 10);

  for (std::size_t i = 0; i < suite.size(); ++i) {
    CAPTURE(i);
    const BuchbergerResult result = buchberger(suite[i], GroebnerLimits{});
    check_basis_property(suite[i], result);
  }

  // Pinned contents where the outcome is forced.
  const BuchbergerResult unit = buchberger(suite[2], GroebnerLimits{});
  REQUIRE(unit.basis.size() == 1);
  CHECK(unit.basis[0].is_constant());
  const BuchbergerResult shifted = buchberger(suite[1], GroebnerLimits{});
  REQUIRE(shifted.basis.size() == 1);
  CHECK(shifted.basis[0].terms.size() == 2);
  const BuchbergerResult classic = buchberger(suite[3], GroebnerLimits{});
  CHECK(classic.basis.size() == 3);
  bool has_cube = false;
  for (const Polynomial& p : classic.basis)
    has_cube |= p.terms.size() == 1 && p.terms[0].mono == mono({0, 3});
  CHECK(has_cube);
}

TEST_CASE("ideal construction matches the published fixing choices") {
  const Graph g = decode_graph6("G~U`}W");
  IdealOptions options;
  options.tree_edges = {{0, 7}, {1, 7}, {2, 6}, {3, 6}, {4, 7}, {5, 6}, {5, 7}};
  options.unit_diagonal = VarId{'A', 4, 4};
  options.unit_other = VarId{'B', 0, 4};
  const IdealBuild ideal = build_ideal(g, diagonal_constraints(g), options);

  REQUIRE(ideal.fixed.size() == 9);
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(ideal.fixed[i].var.side == 'A');
    CHECK(ideal.fixed[i].value == 1);
    CHECK(ideal.fixed[i].var.i == options.tree_edges[i].first);
    CHECK(ideal.fixed[i].var.j == options.tree_edges[i].second);
  }
  CHECK(ideal.fixed[7].var == VarId{'A', 4, 4});
  CHECK(ideal.fixed[8].var == VarId{'B', 0, 4});
  CHECK(ideal.vars.size() == 27);
  // Some product entries have empty support and are dropped outright.
  CHECK(ideal.generators.size() == 56);
  // Off-diagonal variables are always known nonzero; forced diagonals too.
  for (int t = 0; t < ideal.vars.size(); ++t) {
    const VarId& v = ideal.vars.var(t);
    if (v.i != v.j) CHECK(ideal.known_nonzero[std::size_t(t)]);
  }
  // The fixed variables never appear in the table.
  for (const FixedVar& f : ideal.fixed)
    CHECK(!ideal.vars.index_of(f.var).has_value());
}

TEST_CASE("worked example collapses to the unit basis") {
  const Graph g = decode_graph6("G~U`}W");
  IdealOptions options;
  options.tree_edges = {{0, 7}, {1, 7}, {2, 6}, {3, 6}, {4, 7}, {5, 6}, {5, 7}};
  options.unit_diagonal = VarId{'A', 4, 4};
  options.unit_other = VarId{'B', 0, 4};
  const GroebnerRun run = groebner_run(g, options);
  REQUIRE(run.result.status == BuchbergerStatus::Basis);
  REQUIRE(run.result.basis.size() == 1);
  CHECK(run.result.basis[0].is_constant());
  CHECK(run.refutation.has_value());
}

TEST_CASE("all four hard graphs refute across tree choices") {
  // The second one must refute even without iterating roots; the others are
  // allowed to need the tree-choice sweep.
  const GroebnerReport direct = groebner_refutes(decode_graph6("G~U`}W"));
  CHECK(direct.verdict == RefuteVerdict::Refuted);
  for (const char* s : {"G@BMP{", "G~U`}W", "G@hkac", "G@h^Ug"}) {
    CAPTURE(s);
    const GroebnerReport report =
        groebner_refutes(decode_graph6(s), GroebnerLimits{}, true);
    for (const std::string& line : report.log) INFO(line);
    CHECK(report.verdict == RefuteVerdict::Refuted);
    CHECK(!report.witness.empty());
  }
}

TEST_CASE("complement-side tree exposes a univariate witness") {
  const Graph g = decode_graph6("G@BMP{");
  IdealOptions options;
  options.side = TreeSide::Complement;
  options.tree_root = 2;
  const GroebnerRun run = groebner_run(g, options);
  REQUIRE(run.result.status == BuchbergerStatus::Basis);
  REQUIRE(run.refutation.has_value());
  const auto edge_var = run.ideal.vars.index_of(VarId{'A', 4, 7});
  REQUIRE(edge_var.has_value());
  bool found = false;
  for (const Polynomial& p : run.result.basis)
    found |= univariate_power_of(p, *edge_var);
  CHECK(found);
}

TEST_CASE("degenerate two-vertex ideal stays inconclusive") {
  const Graph g = decode_graph6("A_");
  const IdealBuild ideal = build_ideal(g, diagonal_constraints(g));
  CHECK(ideal.vars.size() == 2);       // both free diagonals of the edge side
  CHECK(ideal.generators.empty());     // forced zeros kill every product term
  REQUIRE(ideal.fixed.size() == 1);    // just the spanning edge
  CHECK(ideal.fixed[0].var == VarId{'A', 0, 1});
  const GroebnerReport report = groebner_refutes(g);
  CHECK(report.verdict == RefuteVerdict::Inconclusive);
}

TEST_CASE("contradictory constraints are rejected up front") {
  const Graph p4 = generate_all(4, GenFilter::ConnectedCoConnected).front();
  CHECK_THROWS_AS(build_ideal(p4, diagonal_constraints(p4)), PreconditionViolated);
}

TEST_SUITE("slow") {
  TEST_CASE("refutation never fires on a certified graph") {
    const GroebnerLimits modest{2000, 10, 2.0};
    for (const auto& [g6, c6] : embedded_pair_strings()) {
      for (const std::string& s : {g6, c6}) {
        CAPTURE(s);
        const Graph g = decode_graph6(s);
        const GroebnerReport report = groebner_refutes(g, modest);
        CHECK(report.verdict == RefuteVerdict::Inconclusive);
      }
    }
  }
}
