#include "cvg/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

namespace cvg {

namespace {

bool poly_less(const Polynomial& p, const Polynomial& q) {
  const std::size_t m = std::min(p.terms.size(), q.terms.size());
  for (std::size_t t = 0; t < m; ++t) {
    const auto cmp = degrevlex(p.terms[t].mono, q.terms[t].mono);
    if (cmp != std::strong_ordering::equal) return cmp == std::strong_ordering::less;
    if (p.terms[t].coeff != q.terms[t].coeff)
      return p.terms[t].coeff < q.terms[t].coeff;
  }
  return p.terms.size() < q.terms.size();
}

bool poly_equal(const Polynomial& p, const Polynomial& q) {
  if (p.terms.size() != q.terms.size()) return false;
  for (std::size_t t = 0; t < p.terms.size(); ++t)
    if (p.terms[t].coeff != q.terms[t].coeff ||
        !(p.terms[t].mono == q.terms[t].mono))
      return false;
  return true;
}

}  // namespace

IdealBuild build_ideal(const Graph& g, const DiagonalConstraints& dc,
                       const IdealOptions& options) {
  if (dc.contradiction)
    throw PreconditionViolated("diagonal rules already refute this graph");
  const int n = g.order();
  const Graph co = complement(g);
  const bool tree_on_g = options.side == TreeSide::G;
  const Graph& tree_host = tree_on_g ? g : co;
  const Graph& other_host = tree_on_g ? co : g;
  const char tree_matrix = tree_on_g ? 'A' : 'B';
  const char other_matrix = tree_on_g ? 'B' : 'A';
  const auto& tree_status = tree_on_g ? dc.status_a : dc.status_b;
  const auto& other_status = tree_on_g ? dc.status_b : dc.status_a;

  IdealBuild out;
  std::map<VarId, long> fixed;
  auto fix = [&](const VarId& v, long value, const char* reason) {
    fixed[v] = value;
    out.fixed.push_back({v, value, reason});
  };

  // Spanning forest of the tree side.
  std::vector<std::pair<int, int>> tree = options.tree_edges;
  if (tree.empty()) {
    std::vector<bool> seen(std::size_t(n), false);
    int root = options.tree_root;
    if (root < 0) {
      for (int v = 0; v < n; ++v)
        if (root < 0 || tree_host.degree(v) > tree_host.degree(root)) root = v;
    }
    if (root < 0 || root >= n) throw std::invalid_argument("bad tree root");
    std::vector<int> queue;
    auto bfs = [&](int r) {
      queue.assign(1, r);
      seen[std::size_t(r)] = true;
      for (std::size_t h = 0; h < queue.size(); ++h)
        for (int v = 0; v < n; ++v)
          if (tree_host.has_edge(queue[h], v) && !seen[std::size_t(v)]) {
            seen[std::size_t(v)] = true;
            tree.emplace_back(std::min(queue[h], v), std::max(queue[h], v));
            queue.push_back(v);
          }
    };
    bfs(root);
    for (int v = 0; v < n; ++v)
      if (!seen[std::size_t(v)]) bfs(v);
  } else {
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) parent[std::size_t(v)] = v;
    auto find = [&](int x) {
      while (parent[std::size_t(x)] != x)
        x = parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
      return x;
    };
    for (auto& [i, j] : tree) {
      if (i > j) std::swap(i, j);
      if (!tree_host.has_edge(i, j))
        throw std::invalid_argument("tree edge not in the tree-side graph");
      const int a = find(i), b = find(j);
      if (a == b) throw std::invalid_argument("tree edges contain a cycle");
      parent[std::size_t(a)] = b;
    }
  }
  for (const auto& [i, j] : tree)
    fix({tree_matrix, i, j}, 1, "spanning-forest edge");
  out.tree = std::move(tree);

  // One forced-nonzero diagonal on the tree side.
  std::optional<VarId> unit_diag = options.unit_diagonal;
  if (unit_diag) {
    if (unit_diag->side != tree_matrix || unit_diag->i != unit_diag->j ||
        tree_status[std::size_t(unit_diag->i)] != DiagStatus::Nonzero)
      throw PreconditionViolated("unit diagonal must be forced Nonzero on the tree side");
  } else {
    for (int v = 0; v < n; ++v)
      if (tree_status[std::size_t(v)] == DiagStatus::Nonzero) {
        unit_diag = VarId{tree_matrix, v, v};
        break;
      }
  }
  if (unit_diag) fix(*unit_diag, 1, "unit diagonal");

  // One entry of the other matrix, by the global scaling of that matrix.
  std::optional<VarId> unit_other = options.unit_other;
  if (unit_other) {
    if (unit_other->side != other_matrix)
      throw PreconditionViolated("unit scale must land on the other matrix");
    const bool diag = unit_other->i == unit_other->j;
    if (diag ? other_status[std::size_t(unit_other->i)] != DiagStatus::Nonzero
             : !other_host.has_edge(unit_other->i, unit_other->j))
      throw PreconditionViolated("unit scale must hit a nonzero entry");
  } else {
    for (int i = 0; i < n && !unit_other; ++i)
      for (int j = i + 1; j < n && !unit_other; ++j)
        if (other_host.has_edge(i, j)) unit_other = VarId{other_matrix, i, j};
    if (!unit_other)
      for (int v = 0; v < n && !unit_other; ++v)
        if (other_status[std::size_t(v)] == DiagStatus::Nonzero)
          unit_other = VarId{other_matrix, v, v};
  }
  if (unit_other) fix(*unit_other, 1, "unit scale");

  // Variable table in monomial-order priority: off-diagonal A, off-diagonal
  // B, diagonal A, diagonal B; fixed variables are substituted away.
  std::vector<VarId> vars;
  auto add_offdiag = [&](const Graph& host, char side) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const VarId v{side, i, j};
        if (host.has_edge(i, j) && !fixed.count(v)) vars.push_back(v);
      }
  };
  auto add_diag = [&](const std::array<DiagStatus, Graph::kMaxVertices>& st,
                      char side) {
    for (int v = 0; v < n; ++v) {
      const VarId id{side, v, v};
      if (st[std::size_t(v)] != DiagStatus::Zero && !fixed.count(id))
        vars.push_back(id);
    }
  };
  add_offdiag(g, 'A');
  add_offdiag(co, 'B');
  add_diag(dc.status_a, 'A');
  add_diag(dc.status_b, 'B');
  out.vars = VarTable(vars);
  const int nvars = out.vars.size();
  out.known_nonzero.assign(std::size_t(nvars), false);
  for (int t = 0; t < nvars; ++t) {
    const VarId& v = out.vars.var(t);
    out.known_nonzero[std::size_t(t)] =
        v.i != v.j ||
        (v.side == 'A' ? dc.status_a : dc.status_b)[std::size_t(v.i)] ==
            DiagStatus::Nonzero;
  }

  // Entry (i,k) of A, resolved against the fixings: -1 absent, -2 fixed to
  // one, else variable index.
  auto resolve = [&](char side, int i, int k) -> int {
    const Graph& host = side == 'A' ? g : co;
    const auto& st = side == 'A' ? dc.status_a : dc.status_b;
    if (i == k) {
      if (st[std::size_t(i)] == DiagStatus::Zero) return -1;
    } else if (!host.has_edge(i, k)) {
      return -1;
    }
    const VarId v{side, std::min(i, k), std::max(i, k)};
    if (fixed.count(v)) return -2;
    return *out.vars.index_of(v);
  };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Term> terms;
      for (int k = 0; k < n; ++k) {
        const int av = resolve('A', i, k);
        if (av == -1) continue;
        const int bv = resolve('B', k, j);
        if (bv == -1) continue;
        Monomial m = Monomial::one(nvars);
        for (const int v : {av, bv})
          if (v >= 0) {
            ++m.exp[std::size_t(v)];
            ++m.degree;
          }
        terms.push_back({std::move(m), mpz_class(1)});
      }
      if (terms.empty()) continue;
      std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return degrevlex(a.mono, b.mono) == std::strong_ordering::greater;
      });
      Polynomial f;
      for (Term& t : terms) {
        if (!f.terms.empty() && f.terms.back().mono == t.mono)
          f.terms.back().coeff += t.coeff;
        else
          f.terms.push_back(std::move(t));
      }
      f.normalize();
      if (!f.is_zero()) out.generators.push_back(std::move(f));
    }
  std::sort(out.generators.begin(), out.generators.end(), poly_less);
  out.generators.erase(
      std::unique(out.generators.begin(), out.generators.end(), poly_equal),
      out.generators.end());
  return out;
}

namespace {

Polynomial spoly(const Polynomial& p, const Polynomial& q) {
  const Term& lp = p.leading();
  const Term& lq = q.leading();
  const Monomial lcm = mono_lcm(lp.mono, lq.mono);
  mpz_class gamma;
  mpz_gcd(gamma.get_mpz_t(), lp.coeff.get_mpz_t(), lq.coeff.get_mpz_t());
  Polynomial s = poly_add_scaled(Polynomial::zero(), lq.coeff / gamma,
                                 mono_div(lcm, lp.mono), p);
  s = poly_add_scaled(s, -(lp.coeff / gamma), mono_div(lcm, lq.mono), q);
  s.normalize();
  return s;
}

using Deadline = std::chrono::steady_clock::time_point;

bool expired(const Deadline& deadline) {
  return std::chrono::steady_clock::now() > deadline;
}

// Reduces until the leading term is irreducible (or the polynomial is
// zero); tails are left alone, which Buchberger's criterion permits.  A hit
// deadline leaves the rest unreduced, flagged through `timed_out`.
Polynomial top_reduce(Polynomial p, const std::vector<Polynomial>& basis,
                      const Deadline& deadline, bool& timed_out) {
  p.normalize();
  while (!p.is_zero()) {
    if (expired(deadline)) {
      timed_out = true;
      return p;
    }
    const Term& lt = p.leading();
    const Polynomial* red = nullptr;
    for (const Polynomial& g : basis)
      if (!g.is_zero() && divides(g.leading().mono, lt.mono)) {
        red = &g;
        break;
      }
    if (!red) break;
    mpz_class gamma;
    mpz_gcd(gamma.get_mpz_t(), lt.coeff.get_mpz_t(),
            red->leading().coeff.get_mpz_t());
    mpz_class scale = red->leading().coeff / gamma;
    mpz_class mult = lt.coeff / gamma;
    if (sgn(scale) < 0) {
      scale = -scale;
      mult = -mult;
    }
    p = poly_add_scaled(poly_scale(p, scale), -mult,
                        mono_div(lt.mono, red->leading().mono), *red);
    p.normalize();
  }
  return p;
}

// Full normal form: every term irreducible modulo `basis`.
Polynomial full_reduce(Polynomial p, const std::vector<Polynomial>& basis,
                       const Deadline& deadline, bool& timed_out,
                       const Polynomial* skip = nullptr) {
  Polynomial done;
  p.normalize();
  while (!p.is_zero()) {
    if (expired(deadline)) {
      timed_out = true;
      for (const Term& t : p.terms) done.terms.push_back(t);
      done.normalize();
      return done;
    }
    const Term& lt = p.leading();
    const Polynomial* red = nullptr;
    for (const Polynomial& g : basis)
      if (&g != skip && !g.is_zero() && divides(g.leading().mono, lt.mono)) {
        red = &g;
        break;
      }
    if (!red) {
      done.terms.push_back(lt);
      p.terms.erase(p.terms.begin());
      continue;
    }
    mpz_class gamma;
    mpz_gcd(gamma.get_mpz_t(), lt.coeff.get_mpz_t(),
            red->leading().coeff.get_mpz_t());
    mpz_class scale = red->leading().coeff / gamma;
    mpz_class mult = lt.coeff / gamma;
    if (sgn(scale) < 0) {
      scale = -scale;
      mult = -mult;
    }
    if (scale != 1) done = poly_scale(done, scale);
    p = poly_add_scaled(poly_scale(p, scale), -mult,
                        mono_div(lt.mono, red->leading().mono), *red);
    // Shared content of the finished and pending parts must shrink together.
    mpz_class content = 0;
    for (const Term& t : done.terms)
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.coeff.get_mpz_t());
    for (const Term& t : p.terms)
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.coeff.get_mpz_t());
    if (content > 1) {
      for (Term& t : done.terms) t.coeff /= content;
      for (Term& t : p.terms) t.coeff /= content;
    }
  }
  done.normalize();
  return done;
}

struct PairKey {
  int deg;
  Monomial lcm;
  int i, j;
};

struct PairLess {
  bool operator()(const PairKey& a, const PairKey& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    const auto cmp = degrevlex(a.lcm, b.lcm);
    if (cmp != std::strong_ordering::equal)
      return cmp == std::strong_ordering::less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

BuchbergerResult buchberger(std::vector<Polynomial> gens,
                            const GroebnerLimits& limits) {
  const auto deadline =
      std::chrono::steady_clock::now() +
      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
          std::chrono::duration<double>(limits.timeout_seconds));
  BuchbergerResult out;
  std::vector<Polynomial> basis;
  int nvars = 0;
  for (Polynomial& p : gens) {
    if (p.is_zero()) continue;
    p.normalize();
    nvars = int(p.leading().mono.exp.size());
    basis.push_back(std::move(p));
  }
  std::sort(basis.begin(), basis.end(), poly_less);
  basis.erase(std::unique(basis.begin(), basis.end(), poly_equal), basis.end());

  auto unit_basis = [&] {
    out.basis.assign(1, Polynomial::constant(1, nvars));
    out.status = BuchbergerStatus::Basis;
    return out;
  };
  for (const Polynomial& p : basis)
    if (p.is_constant()) return unit_basis();

  std::set<PairKey, PairLess> queue;
  std::set<std::pair<int, int>> treated;
  auto push_pairs = [&](int t) {
    for (int i = 0; i < t; ++i) {
      const Monomial lcm =
          mono_lcm(basis[std::size_t(i)].leading().mono,
                   basis[std::size_t(t)].leading().mono);
      queue.insert({lcm.degree, lcm, i, t});
    }
  };
  for (int t = 1; t < int(basis.size()); ++t) push_pairs(t);

  while (!queue.empty()) {
    if (out.spolys >= limits.max_spolys ||
        std::chrono::steady_clock::now() > deadline) {
      out.status = BuchbergerStatus::ResourceExceeded;
      out.basis = std::move(basis);
      return out;
    }
    const PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    const Polynomial& gi = basis[std::size_t(pk.i)];
    const Polynomial& gj = basis[std::size_t(pk.j)];
    if (pk.deg > limits.max_degree) {
      ++out.pairs_skipped;
      continue;
    }
    treated.insert({pk.i, pk.j});
    if (mono_coprime(gi.leading().mono, gj.leading().mono)) continue;
    bool chained = false;
    for (int k = 0; k < int(basis.size()) && !chained; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!divides(basis[std::size_t(k)].leading().mono, pk.lcm)) continue;
      if (treated.count({std::min(pk.i, k), std::max(pk.i, k)}) &&
          treated.count({std::min(pk.j, k), std::max(pk.j, k)}))
        chained = true;
    }
    if (chained) continue;
    ++out.spolys;
    bool timed_out = false;
    Polynomial r = top_reduce(spoly(gi, gj), basis, deadline, timed_out);
    if (timed_out) {
      out.status = BuchbergerStatus::ResourceExceeded;
      out.basis = std::move(basis);
      return out;
    }
    if (r.is_zero()) continue;
    if (r.is_constant()) return unit_basis();
    const int t = int(basis.size());
    basis.push_back(std::move(r));
    push_pairs(t);
  }

  if (out.pairs_skipped > 0) {
    out.status = BuchbergerStatus::ResourceExceeded;
    out.basis = std::move(basis);
    return out;
  }

  // Minimal, then reduced basis: drop elements whose leading monomial is
  // divisible by another's, fully reduce the survivors against each other.
  std::vector<char> dead(basis.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size() && !dead[i]; ++j) {
      if (i == j || dead[j]) continue;
      const auto& li = basis[i].leading().mono;
      const auto& lj = basis[j].leading().mono;
      if (divides(lj, li) && (!(li == lj) || j < i)) dead[i] = 1;
    }
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!dead[i]) minimal.push_back(std::move(basis[i]));
  std::vector<Polynomial> reduced = minimal;
  bool timed_out = false;
  for (std::size_t i = 0; i < reduced.size() && !timed_out; ++i)
    reduced[i] = full_reduce(minimal[i], minimal, deadline, timed_out,
                             &minimal[i]);
  // Tail reduction only rewrites trailing terms, so even a timeout leaves a
  // set with the same leading monomials: still a Groebner basis.
  std::sort(reduced.begin(), reduced.end(), poly_less);
  out.basis = std::move(reduced);
  out.status = BuchbergerStatus::Basis;
  return out;
}

Polynomial s_polynomial(const Polynomial& p, const Polynomial& q) {
  return spoly(p, q);
}

Polynomial normal_form(Polynomial p, const std::vector<Polynomial>& basis) {
  bool timed_out = false;
  return full_reduce(std::move(p), basis,
                     std::chrono::steady_clock::time_point::max(), timed_out);
}

namespace {

// True when p, univariate in a variable that cannot be zero, has no nonzero
// real root: either c*v^k, or all exponents even with same-sign coefficients.
bool forces_zero(const Polynomial& p) {
  if (p.terms.size() == 1) return p.terms.front().mono.degree > 0;
  bool all_even = true;
  int sign = 0;
  for (const Term& t : p.terms) {
    if (t.mono.degree % 2 != 0) all_even = false;
    const int s = sgn(t.coeff);
    if (sign == 0) sign = s;
    if (s != sign) return false;
  }
  return all_even;
}

std::optional<int> univariate_in(const Polynomial& p) {
  int var = -1;
  for (const Term& t : p.terms)
    for (std::size_t v = 0; v < t.mono.exp.size(); ++v)
      if (t.mono.exp[v] != 0) {
        if (var == -1) var = int(v);
        if (var != int(v)) return std::nullopt;
      }
  if (var == -1) return std::nullopt;
  return var;
}

std::optional<std::string> scan_refutation(const IdealBuild& ideal,
                                           const BuchbergerResult& result) {
  for (const Polynomial& p : result.basis) {
    if (p.is_constant()) return std::string("basis contains ") +
                                to_string(p, ideal.vars);
    const auto var = univariate_in(p);
    if (!var || !ideal.known_nonzero[std::size_t(*var)]) continue;
    if (forces_zero(p))
      return "basis forces nonzero variable " +
             var_name(ideal.vars.var(*var)) + " to vanish: " +
             to_string(p, ideal.vars);
  }
  return std::nullopt;
}

}  // namespace

GroebnerRun groebner_run(const Graph& g, const IdealOptions& options,
                         const GroebnerLimits& limits) {
  GroebnerRun run{build_ideal(g, diagonal_constraints(g), options), {}, {}};
  run.result = buchberger(run.ideal.generators, limits);
  run.refutation = scan_refutation(run.ideal, run.result);
  return run;
}

GroebnerReport groebner_refutes(const Graph& g, const GroebnerLimits& limits,
                                bool iterate_roots) {
  GroebnerReport report;
  std::vector<int> roots{-1};
  if (iterate_roots) {
    roots.clear();
    for (int v = 0; v < g.order(); ++v) roots.push_back(v);
  }
  for (const TreeSide side : {TreeSide::G, TreeSide::Complement}) {
    for (const int root : roots) {
      IdealOptions options;
      options.side = side;
      options.tree_root = root;
      GroebnerRun run = groebner_run(g, options, limits);
      std::string line = std::string("side=") +
                         (side == TreeSide::G ? "G" : "complement") +
                         " root=" + std::to_string(root) + " status=" +
                         (run.result.status == BuchbergerStatus::Basis
                              ? "basis"
                              : "resource-exceeded") +
                         " size=" + std::to_string(run.result.basis.size()) +
                         " spolys=" + std::to_string(run.result.spolys);
      if (run.refutation) {
        report.verdict = RefuteVerdict::Refuted;
        report.witness = line + ": " + *run.refutation;
        report.log.push_back(report.witness);
        return report;
      }
      report.log.push_back(line + ": no witness");
    }
  }
  return report;
}

}  // namespace cvg
