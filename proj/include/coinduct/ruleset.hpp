#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coinduct/error.hpp"
#include "coinduct/predicate.hpp"

namespace coinduct {

/// Name-level description of a rule set, as read from a file or written by
/// hand. It may violate the invariants; `validate_ruleset` reports how.
struct RuleDesc {
  std::string id;
  std::vector<std::string> premises;

  friend bool operator==(const RuleDesc&, const RuleDesc&) = default;
};

struct RuleSetDesc {
  std::vector<std::string> carrier;
  std::map<std::string, std::vector<RuleDesc>> rules;

  friend bool operator==(const RuleSetDesc&, const RuleSetDesc&) = default;
};

struct Violation {
  std::string location;  // e.g. "rules/a/0/premises/1"
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every invariant violation in `desc`; empty means valid.
std::vector<Violation> validate_ruleset(const RuleSetDesc& desc);

class InvalidRuleSet : public InvalidInput {
 public:
  explicit InvalidRuleSet(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// A rule `i` of conclusion `a`: a is derivable once all of `premises` are.
struct Rule {
  std::string id;
  Predicate premises;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// An axiom set (I, C) over a finite carrier: for each element, its rules in
/// declaration order. Immutable once built.
class RuleSet {
 public:
  /// `rules[x]` are the rules concluding element x. Throws InvalidRuleSet.
  RuleSet(Carrier carrier, std::vector<std::vector<Rule>> rules);

  /// Throws InvalidRuleSet with the full violation list.
  static RuleSet from_desc(const RuleSetDesc& desc);
  RuleSetDesc to_desc() const;

  const Carrier& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }

  std::span<const Rule> rules_of(std::size_t element) const { return rules_.at(element); }
  std::optional<std::size_t> find_rule(std::size_t element, std::string_view id) const;
  /// Throws InvalidInput for an unknown id.
  const Rule& rule(std::size_t element, std::string_view id) const;
  std::size_t rule_count() const noexcept;

  /// Same carrier, same rules (ids and premises) in the same order.
  friend bool operator==(const RuleSet&, const RuleSet&) = default;

 private:
  Carrier carrier_;
  std::vector<std::vector<Rule>> rules_;
};

/// C(a, i) as a predicate. Throws InvalidInput on unknown element or rule.
Predicate premises(const RuleSet& r, std::string_view element, std::string_view rule_id);

}  // namespace coinduct
