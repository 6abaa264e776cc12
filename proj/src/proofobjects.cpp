#include "coinduct/proofobjects.hpp"

#include <algorithm>

namespace coinduct {

namespace {

// First rule of x whose premises all entered the trace strictly before x.
const Rule* rank_guided_rule(const RuleSet& r, const FixpointTrace& trace, std::size_t x) {
  const std::size_t own = *trace.rank[x];
  for (const auto& rule : r.rules_of(x)) {
    const auto prem = rule.premises.indices();
    const bool earlier = std::all_of(prem.begin(), prem.end(), [&](std::size_t z) {
      return trace.rank[z].has_value() && *trace.rank[z] < own;
    });
    if (earlier) return &rule;
  }
  return nullptr;
}

void require_least_trace(const RuleSet& r, const FixpointTrace& trace, std::size_t a) {
  if (trace.kind != FixpointKind::least || trace.rank.size() != r.size() || trace.stages.empty()) {
    throw InvalidInput("trace does not belong to a least fixed point over this carrier");
  }
  if (a >= r.size()) throw InvalidInput("element index out of range");
  if (!trace.rank[a]) throw SemanticError("'" + r.carrier().name(a) + "' is underivable");
}

DerivationTree extract_tree(const RuleSet& r, const FixpointTrace& trace, std::size_t x) {
  const Rule* rule = rank_guided_rule(r, trace, x);
  if (rule == nullptr) throw InvalidInput("trace inconsistent with rule set at '" + r.carrier().name(x) + "'");
  DerivationTree node{x, rule->id, {}};
  for (auto z : rule->premises.indices()) node.children.push_back({z, extract_tree(r, trace, z)});
  return node;
}

CoverProof extract_cover(const RuleSet& r, const Predicate& v, const FixpointTrace& trace, std::size_t x) {
  if (v.contains(x)) return CoverProof::rf(x);
  const Rule* rule = rank_guided_rule(r, trace, x);
  if (rule == nullptr) throw InvalidInput("trace inconsistent with rule set at '" + r.carrier().name(x) + "'");
  CoverProof node{CoverProof::Step::tr, x, rule->id, {}};
  for (auto z : rule->premises.indices()) node.children.push_back({z, extract_cover(r, v, trace, z)});
  return node;
}

std::string describe(const RuleSet& r, const std::string& path, std::size_t x) {
  return path + "/" + (x < r.size() ? r.carrier().name(x) : "#" + std::to_string(x));
}

// Checks rule membership and that child keys are exactly the premise set.
template <class Node, class ChildOf>
CheckResult check_children(const RuleSet& r, const Node& node, const std::string& at, ChildOf&& child_conclusion) {
  const auto k = r.find_rule(node.conclusion, node.rule);
  if (!k) return CheckResult::fail(at + ": no rule '" + node.rule + "'");
  const auto expected = r.rules_of(node.conclusion)[*k].premises.indices();
  if (node.children.size() != expected.size()) {
    return CheckResult::fail(at + ": rule '" + node.rule + "' has " + std::to_string(expected.size()) +
                             " premises, node has " + std::to_string(node.children.size()) + " children");
  }
  for (std::size_t c = 0; c < expected.size(); ++c) {
    if (node.children[c].premise != expected[c]) {
      return CheckResult::fail(at + ": children do not match the premises of '" + node.rule + "'");
    }
    if (child_conclusion(node.children[c]) != expected[c]) {
      return CheckResult::fail(describe(r, at, expected[c]) + ": subtree concludes a different element");
    }
  }
  return CheckResult::pass();
}

CheckResult check_tree(const RuleSet& r, const DerivationTree& t, const std::string& path) {
  if (t.conclusion >= r.size()) return CheckResult::fail(path + ": conclusion outside the carrier");
  const std::string at = describe(r, path, t.conclusion);
  if (auto verdict = check_children(r, t, at, [](const auto& c) { return c.tree.conclusion; }); !verdict) {
    return verdict;
  }
  for (const auto& child : t.children) {
    if (auto verdict = check_tree(r, child.tree, at); !verdict) return verdict;
  }
  return CheckResult::pass();
}

CheckResult check_cover(const RuleSet& r, const Predicate& v, const CoverProof& p, const std::string& path) {
  if (p.conclusion >= r.size()) return CheckResult::fail(path + ": conclusion outside the carrier");
  const std::string at = describe(r, path, p.conclusion);
  if (p.step == CoverProof::Step::rf) {
    if (!p.children.empty() || !p.rule.empty()) return CheckResult::fail(at + ": rf node carries a rule");
    if (!v.contains(p.conclusion)) return CheckResult::fail(at + ": rf outside V");
    return CheckResult::pass();
  }
  if (auto verdict = check_children(r, p, at, [](const auto& c) { return c.proof.conclusion; }); !verdict) {
    return verdict;
  }
  for (const auto& child : p.children) {
    if (auto verdict = check_cover(r, v, child.proof, at); !verdict) return verdict;
  }
  return CheckResult::pass();
}

std::size_t chosen_premise(const RuleSet& r, const CoinductionWitness& w, const std::string& rule_id) {
  if (r.rules_of(w.start).empty()) {
    throw SemanticError("'" + r.carrier().name(w.start) + "' has no rules to destruct");
  }
  r.rule(w.start, rule_id);  // unknown ids throw InvalidInput
  auto row = w.continuations.find(w.start);
  if (row == w.continuations.end()) throw InvalidInput("witness has no continuations at its start");
  auto cell = row->second.find(rule_id);
  if (cell == row->second.end()) throw InvalidInput("witness has no continuation for rule '" + rule_id + "'");
  return cell->second;
}

CoinductionWitness build_witness(const RuleSet& r, Predicate support, std::optional<Predicate> v, std::size_t a) {
  if (a >= r.size()) throw InvalidInput("element index out of range");
  if (!support.contains(a)) {
    throw SemanticError("'" + r.carrier().name(a) + "' is not in the " +
                        (v ? "positivity relation" : "coinductive predicate"));
  }
  CoinductionWitness w{support, a, std::move(v), {}};
  for (auto x : support.indices()) {
    auto& row = w.continuations[x];
    for (const auto& rule : r.rules_of(x)) {
      for (auto z : rule.premises.indices()) {
        if (support.contains(z)) {
          row.emplace(rule.id, z);
          break;
        }
      }
    }
  }
  return w;
}

}  // namespace

bool operator==(const DerivationTree& a, const DerivationTree& b) {
  return a.conclusion == b.conclusion && a.rule == b.rule && a.children == b.children;
}

bool operator==(const DerivationTree::Child& a, const DerivationTree::Child& b) {
  return a.premise == b.premise && a.tree == b.tree;
}

bool operator==(const CoverProof& a, const CoverProof& b) {
  return a.step == b.step && a.conclusion == b.conclusion && a.rule == b.rule && a.children == b.children;
}

bool operator==(const CoverProof::Child& a, const CoverProof::Child& b) {
  return a.premise == b.premise && a.proof == b.proof;
}

std::size_t DerivationTree::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.tree.node_count();
  return n;
}

std::size_t DerivationTree::depth() const {
  std::size_t d = 0;
  for (const auto& c : children) d = std::max(d, c.tree.depth());
  return d + 1;
}

CoverProof CoverProof::rf(std::size_t conclusion) { return CoverProof{Step::rf, conclusion, {}, {}}; }

std::size_t CoverProof::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.proof.node_count();
  return n;
}

std::size_t CoverProof::depth() const {
  std::size_t d = 0;
  for (const auto& c : children) d = std::max(d, c.proof.depth());
  return d + 1;
}

DerivationTree extract_derivation(const RuleSet& r, std::size_t a, const FixpointTrace& trace) {
  require_least_trace(r, trace, a);
  return extract_tree(r, trace, a);
}

DerivationTree extract_derivation(const RuleSet& r, std::size_t a) {
  return extract_derivation(r, a, ind_fixpoint(r).trace);
}

CoverProof extract_cover_proof(const RuleSet& r, const Predicate& v, std::size_t a, const FixpointTrace& trace) {
  require_carrier(r.carrier(), v);
  require_least_trace(r, trace, a);
  return extract_cover(r, v, trace, a);
}

CoverProof extract_cover_proof(const RuleSet& r, const Predicate& v, std::size_t a) {
  return extract_cover_proof(r, v, a, cover_fixpoint(r, v).trace);
}

CheckResult check_derivation(const RuleSet& r, const DerivationTree& t) { return check_tree(r, t, ""); }

CheckResult check_cover_proof(const RuleSet& r, const Predicate& v, const CoverProof& p) {
  require_carrier(r.carrier(), v);
  return check_cover(r, v, p, "");
}

CoinductionWitness build_coind_witness(const RuleSet& r, std::size_t a) {
  return build_witness(r, coind_predicate(r), std::nullopt, a);
}

CoinductionWitness build_coind_witness(const RuleSet& r, const Predicate& v, std::size_t a) {
  require_carrier(r.carrier(), v);
  return build_witness(r, positivity(r, v), v, a);
}

CheckResult verify_coind_witness(const RuleSet& r, const CoinductionWitness& w) {
  const auto& carrier = r.carrier();
  if (!w.support.carrier().same_as(carrier)) return CheckResult::fail("support: carrier mismatch");
  if (w.start >= carrier.size() || !w.support.contains(w.start)) {
    return CheckResult::fail("start: not in the support");
  }
  if (w.v) {
    if (!w.v->carrier().same_as(carrier)) return CheckResult::fail("v: carrier mismatch");
    if (!leq(w.support, *w.v)) return CheckResult::fail("v: support is not contained in V");
  }
  for (const auto& [x, row] : w.continuations) {
    if (x >= carrier.size() || !w.support.contains(x)) {
      return CheckResult::fail("continuations: entry outside the support");
    }
    for (const auto& [rule_id, z] : row) {
      if (!r.find_rule(x, rule_id)) {
        return CheckResult::fail("continuations/" + carrier.name(x) + ": no rule '" + rule_id + "'");
      }
    }
  }
  for (auto x : w.support.indices()) {
    auto row = w.continuations.find(x);
    for (const auto& rule : r.rules_of(x)) {
      const std::string at = "continuations/" + carrier.name(x) + "/" + rule.id;
      if (row == w.continuations.end() || !row->second.contains(rule.id)) {
        return CheckResult::fail(at + ": missing");
      }
      const std::size_t z = row->second.at(rule.id);
      if (z >= carrier.size() || !rule.premises.contains(z)) return CheckResult::fail(at + ": not a premise");
      if (!w.support.contains(z)) return CheckResult::fail(at + ": leaves the support");
    }
  }
  return CheckResult::pass();
}

CheckResult verify_coind_witness(const RuleSet& r, const Predicate& v, const CoinductionWitness& w) {
  require_carrier(r.carrier(), v);
  if (!w.v || !(*w.v == v)) return CheckResult::fail("v: witness certifies a different V");
  return verify_coind_witness(r, w);
}

DesStep des(const RuleSet& r, const CoinductionWitness& w, const std::string& rule_id) {
  const std::size_t z = chosen_premise(r, w, rule_id);
  CoinductionWitness next = w;
  next.start = z;
  return {z, std::move(next)};
}

CotrStep cotr(const RuleSet& r, const CoinductionWitness& w, const std::string& rule_id) {
  if (!w.v) throw SemanticError("cotr needs a positivity witness");
  const std::size_t z = chosen_premise(r, w, rule_id);
  CoinductionWitness next = w;
  next.start = z;
  return {z, PremiseEvidence{w.start, rule_id, z}, std::move(next)};
}

VMembership corf(const CoinductionWitness& w) {
  if (!w.v) throw SemanticError("corf needs a positivity witness");
  if (!w.v->contains(w.start)) throw SemanticError("witness start is not in V");
  return {w.start, *w.v};
}

}  // namespace coinduct
