#include "cvg/structure.hpp"

#include <sstream>

namespace cvg {

DecompositionTree decompose(const Graph& g) {
  DecompositionTree node;
  node.graph = g;
  auto member_mask = [](const std::vector<int>& vs) {
    std::uint16_t mask = 0;
    for (int v : vs) mask |= std::uint16_t(1u << v);
    return mask;
  };
  if (g.order() >= 2 && !is_connected(g)) {
    node.kind = DecompositionTree::Kind::Union;
    for (const auto& c : components(g))
      node.children.push_back(decompose(induced_subgraph(g, member_mask(c))));
    return node;
  }
  const Graph co = complement(g);
  if (g.order() >= 2 && !is_connected(co)) {
    node.kind = DecompositionTree::Kind::Join;
    for (const auto& c : components(co))
      node.children.push_back(
          decompose(complement(induced_subgraph(co, member_mask(c)))));
    return node;
  }
  node.kind = DecompositionTree::Kind::Leaf;
  return node;
}

Graph recompose(const DecompositionTree& tree) {
  if (tree.kind == DecompositionTree::Kind::Leaf) return tree.graph;
  Graph acc = recompose(tree.children.front());
  for (std::size_t i = 1; i < tree.children.size(); ++i) {
    const Graph next = recompose(tree.children[i]);
    acc = tree.kind == DecompositionTree::Kind::Union
              ? disjoint_union(acc, next)
              : join_graphs(acc, next);
  }
  return acc;
}

namespace {

void collect_leaves(const DecompositionTree& t, std::vector<Graph>& out) {
  if (t.kind == DecompositionTree::Kind::Leaf) {
    out.push_back(t.graph);
    return;
  }
  for (const DecompositionTree& c : t.children) collect_leaves(c, out);
}

}  // namespace

std::vector<Graph> decomposition_leaves(const Graph& g) {
  std::vector<Graph> leaves;
  collect_leaves(decompose(g), leaves);
  return leaves;
}

Membership in_R(const Graph& g, const MDatabase& db) {
  bool unknown = false;
  for (const Graph& leaf : decomposition_leaves(g)) {
    if (db.contains(leaf)) continue;
    if (leaf.order() <= db.complete_up_to()) return Membership::No;
    unknown = true;
  }
  return unknown ? Membership::Unknown : Membership::Yes;
}

ClassificationReport classify(const Graph& g, const MDatabase& db) {
  ClassificationReport report;
  if (auto t = find_obstruction_triple(g)) {
    std::ostringstream os;
    os << "obstruction triple (u=" << t->u << ", v=" << t->v << ", w=" << t->w
       << ")" << (t->in_complement ? " in complement" : "");
    report.verdict = Verdict::NotCV;
    report.reasons.push_back(os.str());
    return report;
  }
  report.reasons.push_back("no obstruction triple");

  switch (in_R(g, db)) {
    case Membership::No:
      report.verdict = Verdict::NotCV;
      report.reasons.push_back(
          "a decomposition leaf within catalog range is not a building block");
      return report;
    case Membership::Yes: {
      report.verdict = Verdict::CV;
      report.reasons.push_back("every decomposition leaf is a building block");
      auto [alpha, beta] = robustness(g, db);
      report.robust_alpha = alpha;
      report.robust_beta = beta;
      return report;
    }
    case Membership::Unknown:
      break;
  }

  report.reasons.push_back("a decomposition leaf exceeds catalog range");
  const RefuteResult r = refute(g);
  if (r.outcome == RefuteOutcome::NotCV) {
    report.verdict = Verdict::NotCV;
    report.reasons.push_back("combinatorial refutation: " + r.detail);
  } else {
    report.verdict = Verdict::Unknown;
    report.reasons.push_back("combinatorial refutation inconclusive");
  }
  return report;
}

std::pair<bool, bool> robustness(const Graph& g, const MDatabase& db) {
  if (in_class_C(g) || in_R(g, db) != Membership::Yes)
    throw PreconditionViolated(
        "robustness: graph does not admit a vanishing product pair");
  if (in_class_D(g)) return {false, true};
  if (in_class_D(complement(g))) return {true, false};
  return {true, true};
}

}  // namespace cvg
