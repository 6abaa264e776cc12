#include "coinduct/ruleset.hpp"

#include <set>
#include <unordered_set>

namespace coinduct {

namespace {

std::string join_messages(const std::vector<Violation>& violations) {
  std::string out = "invalid rule set";
  for (const auto& v : violations) out += "\n  " + v.location + ": " + v.message;
  return out;
}

}  // namespace

std::vector<Violation> validate_ruleset(const RuleSetDesc& desc) {
  std::vector<Violation> out;
  std::set<std::string> elements;
  for (std::size_t i = 0; i < desc.carrier.size(); ++i) {
    if (!elements.insert(desc.carrier[i]).second) {
      out.push_back({"carrier/" + std::to_string(i), "duplicate element '" + desc.carrier[i] + "'"});
    }
  }
  for (const auto& element : elements) {
    if (!desc.rules.contains(element)) {
      out.push_back({"rules", "missing rule list for element '" + element + "'"});
    }
  }
  for (const auto& [element, rules] : desc.rules) {
    const std::string where = "rules/" + element;
    if (!elements.contains(element)) {
      out.push_back({where, "rule list for unknown element '" + element + "'"});
    }
    std::set<std::string> ids;
    for (std::size_t k = 0; k < rules.size(); ++k) {
      const auto& rule = rules[k];
      const std::string at = where + "/" + std::to_string(k);
      if (rule.id.empty()) out.push_back({at + "/id", "empty rule id"});
      if (!ids.insert(rule.id).second) {
        out.push_back({at + "/id", "duplicate rule id '" + rule.id + "'"});
      }
      for (std::size_t p = 0; p < rule.premises.size(); ++p) {
        if (!elements.contains(rule.premises[p])) {
          out.push_back({at + "/premises/" + std::to_string(p),
                         "rule '" + rule.id + "' names premise '" + rule.premises[p] +
                             "' outside the carrier"});
        }
      }
    }
  }
  return out;
}

InvalidRuleSet::InvalidRuleSet(std::vector<Violation> violations)
    : InvalidInput(join_messages(violations)), violations_(std::move(violations)) {}

RuleSet::RuleSet(Carrier carrier, std::vector<std::vector<Rule>> rules)
    : carrier_(std::move(carrier)), rules_(std::move(rules)) {
  std::vector<Violation> violations;
  if (rules_.size() != carrier_.size()) {
    violations.push_back({"rules", "expected " + std::to_string(carrier_.size()) +
                                       " rule lists, got " + std::to_string(rules_.size())});
    throw InvalidRuleSet(std::move(violations));
  }
  for (std::size_t x = 0; x < rules_.size(); ++x) {
    std::unordered_set<std::string> ids;
    for (std::size_t k = 0; k < rules_[x].size(); ++k) {
      const auto& rule = rules_[x][k];
      const std::string at = "rules/" + carrier_.name(x) + "/" + std::to_string(k);
      if (rule.id.empty()) violations.push_back({at + "/id", "empty rule id"});
      if (!ids.insert(rule.id).second) {
        violations.push_back({at + "/id", "duplicate rule id '" + rule.id + "'"});
      }
      if (!rule.premises.carrier().same_as(carrier_)) {
        violations.push_back({at + "/premises", "premises over a different carrier"});
      }
    }
  }
  if (!violations.empty()) throw InvalidRuleSet(std::move(violations));
}

RuleSet RuleSet::from_desc(const RuleSetDesc& desc) {
  auto violations = validate_ruleset(desc);
  if (!violations.empty()) throw InvalidRuleSet(std::move(violations));
  Carrier carrier(desc.carrier);
  std::vector<std::vector<Rule>> rules(carrier.size());
  for (std::size_t x = 0; x < carrier.size(); ++x) {
    for (const auto& rule : desc.rules.at(carrier.name(x))) {
      rules[x].push_back({rule.id, Predicate::of(carrier, std::span<const std::string>(rule.premises))});
    }
  }
  return RuleSet(std::move(carrier), std::move(rules));
}

RuleSetDesc RuleSet::to_desc() const {
  RuleSetDesc desc;
  desc.carrier.assign(carrier_.elements().begin(), carrier_.elements().end());
  for (std::size_t x = 0; x < carrier_.size(); ++x) {
    auto& list = desc.rules[carrier_.name(x)];
    for (const auto& rule : rules_[x]) list.push_back({rule.id, rule.premises.sorted_names()});
  }
  return desc;
}

std::optional<std::size_t> RuleSet::find_rule(std::size_t element, std::string_view id) const {
  const auto& list = rules_.at(element);
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (list[k].id == id) return k;
  }
  return std::nullopt;
}

const Rule& RuleSet::rule(std::size_t element, std::string_view id) const {
  if (auto k = find_rule(element, id)) return rules_[element][*k];
  throw InvalidInput("element '" + carrier_.name(element) + "' has no rule '" + std::string(id) + "'");
}

std::size_t RuleSet::rule_count() const noexcept {
  std::size_t n = 0;
  for (const auto& list : rules_) n += list.size();
  return n;
}

Predicate premises(const RuleSet& r, std::string_view element, std::string_view rule_id) {
  return r.rule(r.carrier().index_of(element), rule_id).premises;
}

}  // namespace coinduct
