#include "coinduct/encodings.hpp"

#include "coinduct/error.hpp"
#include "coinduct/fixpoint.hpp"

namespace coinduct {

namespace {

std::string original_id(std::string_view id) { return std::string(kOriginalRulePrefix) + std::string(id); }

DerivationTree translate(const CoverProof& p) {
  if (p.step == CoverProof::Step::rf) return {p.conclusion, std::string(kReflexiveRuleId), {}};
  DerivationTree node{p.conclusion, original_id(p.rule), {}};
  for (const auto& child : p.children) node.children.push_back({child.premise, translate(child.proof)});
  return node;
}

CoverProof untranslate(const DerivationTree& t) {
  if (t.rule == kReflexiveRuleId) return CoverProof::rf(t.conclusion);
  if (!t.rule.starts_with(kOriginalRulePrefix)) throw InvalidInput("rule '" + t.rule + "' is not from an enlarged set");
  CoverProof node{CoverProof::Step::tr, t.conclusion, t.rule.substr(kOriginalRulePrefix.size()), {}};
  for (const auto& child : t.children) node.children.push_back({child.premise, untranslate(child.tree)});
  return node;
}

}  // namespace

RuleSet enlarge(const RuleSet& r, const Predicate& v) {
  require_carrier(r.carrier(), v);
  std::vector<std::vector<Rule>> rules(r.size());
  for (std::size_t x = 0; x < r.size(); ++x) {
    if (v.contains(x)) rules[x].push_back({std::string(kReflexiveRuleId), Predicate::empty(r.carrier())});
    for (const auto& rule : r.rules_of(x)) rules[x].push_back({original_id(rule.id), rule.premises});
  }
  return RuleSet(r.carrier(), std::move(rules));
}

DerivationTree translate_cover_proof(const RuleSet& r, const Predicate& v, const CoverProof& p) {
  if (auto verdict = check_cover_proof(r, v, p); !verdict) throw InvalidInput("invalid cover proof: " + verdict.failure);
  return translate(p);
}

CoverProof untranslate_cover_proof(const RuleSet& r, const Predicate& v, const DerivationTree& t) {
  if (auto verdict = check_derivation(enlarge(r, v), t); !verdict) {
    throw InvalidInput("invalid derivation over the enlarged rule set: " + verdict.failure);
  }
  return untranslate(t);
}

RuleSet restrict(const RuleSet& r, const Predicate& v) {
  require_carrier(r.carrier(), v);
  Carrier sub(v.names());
  std::vector<std::vector<Rule>> rules;
  rules.reserve(sub.size());
  for (auto x : v.indices()) {
    auto& list = rules.emplace_back();
    for (const auto& rule : r.rules_of(x)) {
      Predicate kept(sub);
      for (auto z : intersection(rule.premises, v).indices()) kept.insert(sub.index_of(r.carrier().name(z)));
      list.push_back({rule.id, std::move(kept)});
    }
  }
  return RuleSet(std::move(sub), std::move(rules));
}

Predicate lift_from_restriction(const RuleSet& r, const Predicate& on_restriction) {
  Predicate out(r.carrier());
  for (const auto& name : on_restriction.names()) out.insert(r.carrier().index_of(name));
  return out;
}

IndexedContainer container_of_ruleset(const RuleSet& r) {
  std::vector<std::vector<ContainerOption>> options(r.size());
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (const auto& rule : r.rules_of(x)) {
      ContainerOption opt{rule.id, {}};
      for (auto z : rule.premises.indices()) opt.branches.push_back({r.carrier().name(z), z});
      options[x].push_back(std::move(opt));
    }
  }
  return IndexedContainer(r.carrier(), std::move(options));
}

RuleSet ruleset_of_container(const IndexedContainer& k) {
  const auto& carrier = k.carrier();
  std::vector<std::vector<Rule>> rules(carrier.size());
  for (std::size_t x = 0; x < carrier.size(); ++x) {
    for (const auto& opt : k.options_of(x)) {
      Predicate image(carrier);
      for (const auto& branch : opt.branches) image.insert(branch.target);
      rules[x].push_back({opt.id, std::move(image)});
    }
  }
  return RuleSet(carrier, std::move(rules));
}

IndexedContainer conf_as_der(const RuleSet& r, const ConfAsDerOptions& limits) {
  const auto& carrier = r.carrier();
  std::vector<std::vector<ContainerOption>> options(carrier.size());
  for (std::size_t x = 0; x < carrier.size(); ++x) {
    const auto rules = r.rules_of(x);
    std::vector<std::vector<std::size_t>> choices;
    bool blocked = false;
    for (const auto& rule : rules) {
      choices.push_back(rule.premises.indices());
      blocked = blocked || choices.back().empty();
    }
    std::size_t total = blocked ? 0 : 1;
    for (std::size_t k = 0; k < choices.size() && total > 0; ++k) {
      if (total > limits.max_options_per_element / choices[k].size()) {
        total = limits.max_options_per_element + 1;
        break;
      }
      total *= choices[k].size();
    }
    if (total > limits.max_options_per_element) {
      throw BoundExceeded("conf-as-der: more than " + std::to_string(limits.max_options_per_element) +
                          " choice functions at '" + carrier.name(x) + "'");
    }
    // Odometer over the premise choices, first rule varying slowest.
    std::vector<std::size_t> digit(rules.size(), 0);
    for (std::size_t n = 0; n < total; ++n) {
      ContainerOption opt{"choice:", {}};
      for (std::size_t k = 0; k < rules.size(); ++k) {
        const std::size_t z = choices[k][digit[k]];
        if (k > 0) opt.id += ';';
        opt.id += rules[k].id + "=" + carrier.name(z);
        opt.branches.push_back({rules[k].id, z});
      }
      options[x].push_back(std::move(opt));
      for (std::size_t k = rules.size(); k-- > 0;) {
        if (++digit[k] < choices[k].size()) break;
        digit[k] = 0;
      }
    }
  }
  return IndexedContainer(carrier, std::move(options));
}

DualityReport complement_dual(const RuleSet& r) {
  DualityReport report{ind_predicate(r), coind_predicate(r), false};
  report.complementary = complement(report.ind) == report.coind;
  return report;
}

}  // namespace coinduct
