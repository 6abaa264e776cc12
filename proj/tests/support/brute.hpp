#pragma once

// Reference semantics over std::set<std::string>, written directly from the
// definitions and sharing no code with the library's operators or kernels.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coinduct/ruleset.hpp"

namespace coinduct::testing::brute {

using Names = std::set<std::string>;

struct BruteRule {
  std::string id;
  Names premises;
};

struct BruteRuleSet {
  std::vector<std::string> carrier;
  std::vector<std::vector<BruteRule>> rules;
};

inline BruteRuleSet from(const RuleSet& r) {
  BruteRuleSet b;
  for (const auto& name : r.carrier().elements()) b.carrier.push_back(name);
  for (std::size_t x = 0; x < r.size(); ++x) {
    std::vector<BruteRule> rs;
    for (const auto& rule : r.rules_of(x)) {
      auto names = rule.premises.names();
      rs.push_back(BruteRule{rule.id, Names(names.begin(), names.end())});
    }
    b.rules.push_back(std::move(rs));
  }
  return b;
}

inline bool subset(const Names& a, const Names& b) {
  for (const auto& x : a) {
    if (!b.count(x)) return false;
  }
  return true;
}

inline bool meets(const Names& a, const Names& b) {
  for (const auto& x : a) {
    if (b.count(x)) return true;
  }
  return false;
}

inline std::vector<Names> powerset(const std::vector<std::string>& carrier) {
  std::vector<Names> out{Names{}};
  for (const auto& x : carrier) {
    const std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) {
      Names with = out[i];
      with.insert(x);
      out.push_back(std::move(with));
    }
  }
  return out;
}

// V ⊆ P and every rule with premises ⊆ P concludes inside P.
inline bool closed(const BruteRuleSet& r, const Names& v, const Names& p) {
  if (!subset(v, p)) return false;
  for (std::size_t x = 0; x < r.carrier.size(); ++x) {
    for (const auto& rule : r.rules[x]) {
      if (subset(rule.premises, p) && !p.count(r.carrier[x])) return false;
    }
  }
  return true;
}

// P ⊆ V and every rule of a member of P has a premise in P.
inline bool consistent(const BruteRuleSet& r, const Names& v, const Names& p) {
  if (!subset(p, v)) return false;
  for (std::size_t x = 0; x < r.carrier.size(); ++x) {
    if (!p.count(r.carrier[x])) continue;
    for (const auto& rule : r.rules[x]) {
      if (!meets(rule.premises, p)) return false;
    }
  }
  return true;
}

/// Intersection of all closed predicates containing V.
inline Names least(const BruteRuleSet& r, const Names& v) {
  std::optional<Names> acc;
  for (const auto& p : powerset(r.carrier)) {
    if (!closed(r, v, p)) continue;
    if (!acc) {
      acc = p;
    } else {
      Names keep;
      for (const auto& x : *acc) {
        if (p.count(x)) keep.insert(x);
      }
      acc = keep;
    }
  }
  return acc.value_or(Names{});
}

/// Union of all consistent predicates inside V.
inline Names greatest(const BruteRuleSet& r, const Names& v) {
  Names acc;
  for (const auto& p : powerset(r.carrier)) {
    if (consistent(r, v, p)) acc.insert(p.begin(), p.end());
  }
  return acc;
}

inline Names all(const BruteRuleSet& r) { return Names(r.carrier.begin(), r.carrier.end()); }

inline Names names_of(const Predicate& p) {
  auto n = p.names();
  return Names(n.begin(), n.end());
}

}  // namespace coinduct::testing::brute
