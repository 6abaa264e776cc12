#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coinduct/error.hpp"
#include "coinduct/fixpoint.hpp"
#include "coinduct/predicate.hpp"
#include "coinduct/ruleset.hpp"

namespace coinduct {

/// ind(a, i, p): conclusion `a` by rule `i`, one subtree per premise of i.
struct DerivationTree {
  struct Child;

  std::size_t conclusion = 0;
  std::string rule;
  std::vector<Child> children;  // keyed by premise, ascending carrier index

  std::size_t node_count() const;
  std::size_t depth() const;
};

struct DerivationTree::Child {
  std::size_t premise;
  DerivationTree tree;
};

bool operator==(const DerivationTree& a, const DerivationTree& b);
bool operator==(const DerivationTree::Child& a, const DerivationTree::Child& b);

/// rf(a, r) or tr(a, i, p). Membership evidence for rf is proof-irrelevant.
struct CoverProof {
  enum class Step { rf, tr };
  struct Child;

  Step step = Step::rf;
  std::size_t conclusion = 0;
  std::string rule;             // tr only
  std::vector<Child> children;  // tr only, keyed by premise

  static CoverProof rf(std::size_t conclusion);

  std::size_t node_count() const;
  std::size_t depth() const;
};

struct CoverProof::Child {
  std::size_t premise;
  CoverProof proof;
};

bool operator==(const CoverProof& a, const CoverProof& b);
bool operator==(const CoverProof::Child& a, const CoverProof::Child& b);

/// Verdict with the location of the first failure.
struct CheckResult {
  bool ok = true;
  std::string failure;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const noexcept { return ok; }
};

// Rank-guided extraction: at each node take the first rule (declaration
// order) whose premises all have strictly smaller rank in the trace. For
// covers, a member of V is always closed off with rf. Throws SemanticError
// when `a` is not in the trace's final stage.
DerivationTree extract_derivation(const RuleSet& r, std::size_t a, const FixpointTrace& trace);
DerivationTree extract_derivation(const RuleSet& r, std::size_t a);
CoverProof extract_cover_proof(const RuleSet& r, const Predicate& v, std::size_t a, const FixpointTrace& trace);
CoverProof extract_cover_proof(const RuleSet& r, const Predicate& v, std::size_t a);

CheckResult check_derivation(const RuleSet& r, const DerivationTree& t);
CheckResult check_cover_proof(const RuleSet& r, const Predicate& v, const CoverProof& p);

/// El_Ind as a structural fold. `step(a, rule_id, results)` receives one
/// (premise, value) pair per child. Throws InvalidInput on an invalid tree.
template <class Value, class Step>
Value eval_ind_recursor(const RuleSet& r, const DerivationTree& t, Step&& step);

/// El_◁: rf nodes go to `on_rf(a)`, tr nodes to `on_tr(a, rule_id, results)`.
template <class Value, class OnRf, class OnTr>
Value eval_cover_recursor(const RuleSet& r, const Predicate& v, const CoverProof& p, OnRf&& on_rf, OnTr&& on_tr);

/// A consistent predicate made functional: for every x in `support` and
/// every rule of x, a chosen premise that is again in `support`. With `v`
/// set it certifies a positivity (⋉ V) judgement and requires support ⊆ V.
struct CoinductionWitness {
  Predicate support;
  std::size_t start = 0;
  std::optional<Predicate> v;
  std::map<std::size_t, std::map<std::string, std::size_t>> continuations;

  friend bool operator==(const CoinductionWitness&, const CoinductionWitness&) = default;
};

/// Support is the greatest fixed point; each continuation is the first
/// premise (carrier order) inside it. Throws SemanticError when `a` is not
/// in the coinductive predicate (resp. a ⋉ V fails).
CoinductionWitness build_coind_witness(const RuleSet& r, std::size_t a);
CoinductionWitness build_coind_witness(const RuleSet& r, const Predicate& v, std::size_t a);

CheckResult verify_coind_witness(const RuleSet& r, const CoinductionWitness& w);
/// Also requires the witness to certify positivity for exactly this V.
CheckResult verify_coind_witness(const RuleSet& r, const Predicate& v, const CoinductionWitness& w);

struct DesStep {
  std::size_t element;
  CoinductionWitness next;  // same table, re-rooted at `element`
};

/// Evidence that `premise` ∈ C(conclusion, rule).
struct PremiseEvidence {
  std::size_t conclusion;
  std::string rule;
  std::size_t premise;
};

struct CotrStep {
  std::size_t element;
  PremiseEvidence evidence;
  CoinductionWitness next;
};

/// Evidence that `element` ∈ V.
struct VMembership {
  std::size_t element;
  Predicate v;
};

/// One unfolding step along `rule_id` of the witness's start element.
/// Throws SemanticError when the start has no rules, InvalidInput for an
/// unknown rule id.
DesStep des(const RuleSet& r, const CoinductionWitness& w, const std::string& rule_id);
CotrStep cotr(const RuleSet& r, const CoinductionWitness& w, const std::string& rule_id);
/// Throws SemanticError for a witness without V.
VMembership corf(const CoinductionWitness& w);

// ---------------------------------------------------------------------------

template <class Value, class Step>
Value eval_ind_recursor(const RuleSet& r, const DerivationTree& t, Step&& step) {
  if (auto verdict = check_derivation(r, t); !verdict) throw InvalidInput("invalid derivation: " + verdict.failure);
  auto fold = [&](auto& self, const DerivationTree& node) -> Value {
    std::vector<std::pair<std::size_t, Value>> results;
    results.reserve(node.children.size());
    for (const auto& child : node.children) results.emplace_back(child.premise, self(self, child.tree));
    return step(node.conclusion, node.rule, std::span<const std::pair<std::size_t, Value>>(results));
  };
  return fold(fold, t);
}

template <class Value, class OnRf, class OnTr>
Value eval_cover_recursor(const RuleSet& r, const Predicate& v, const CoverProof& p, OnRf&& on_rf, OnTr&& on_tr) {
  if (auto verdict = check_cover_proof(r, v, p); !verdict) throw InvalidInput("invalid cover proof: " + verdict.failure);
  auto fold = [&](auto& self, const CoverProof& node) -> Value {
    if (node.step == CoverProof::Step::rf) return on_rf(node.conclusion);
    std::vector<std::pair<std::size_t, Value>> results;
    results.reserve(node.children.size());
    for (const auto& child : node.children) results.emplace_back(child.premise, self(self, child.proof));
    return on_tr(node.conclusion, node.rule, std::span<const std::pair<std::size_t, Value>>(results));
  };
  return fold(fold, p);
}

}  // namespace coinduct
