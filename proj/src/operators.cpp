#include "coinduct/operators.hpp"

#include <algorithm>

namespace coinduct {

namespace {

bool meets(const Predicate& a, const Predicate& b) { return !intersection(a, b).is_empty(); }

}  // namespace

Predicate der(const RuleSet& r, const Predicate& p) {
  require_carrier(r.carrier(), p);
  Predicate out(r.carrier());
  for (std::size_t x = 0; x < r.size(); ++x) {
    const auto rules = r.rules_of(x);
    if (std::any_of(rules.begin(), rules.end(), [&](const Rule& rule) { return leq(rule.premises, p); })) {
      out.insert(x);
    }
  }
  return out;
}

Predicate conf(const RuleSet& r, const Predicate& p) {
  require_carrier(r.carrier(), p);
  Predicate out(r.carrier());
  for (std::size_t x = 0; x < r.size(); ++x) {
    const auto rules = r.rules_of(x);
    if (std::all_of(rules.begin(), rules.end(), [&](const Rule& rule) { return meets(rule.premises, p); })) {
      out.insert(x);
    }
  }
  return out;
}

Predicate der_v(const RuleSet& r, const Predicate& v, const Predicate& p) {
  require_carrier(r.carrier(), v);
  return union_of(v, der(r, p));
}

Predicate conf_v(const RuleSet& r, const Predicate& v, const Predicate& p) {
  require_carrier(r.carrier(), v);
  return intersection(v, conf(r, p));
}

Predicate der_container(const IndexedContainer& k, const Predicate& p) {
  require_carrier(k.carrier(), p);
  Predicate out(k.carrier());
  for (std::size_t x = 0; x < k.carrier().size(); ++x) {
    const auto options = k.options_of(x);
    const bool hit = std::any_of(options.begin(), options.end(), [&](const ContainerOption& opt) {
      return std::all_of(opt.branches.begin(), opt.branches.end(),
                         [&](const Branch& b) { return p.contains(b.target); });
    });
    if (hit) out.insert(x);
  }
  return out;
}

Predicate conf_container(const IndexedContainer& k, const Predicate& p) {
  require_carrier(k.carrier(), p);
  Predicate out(k.carrier());
  for (std::size_t x = 0; x < k.carrier().size(); ++x) {
    const auto options = k.options_of(x);
    const bool hit = std::all_of(options.begin(), options.end(), [&](const ContainerOption& opt) {
      return std::any_of(opt.branches.begin(), opt.branches.end(),
                         [&](const Branch& b) { return p.contains(b.target); });
    });
    if (hit) out.insert(x);
  }
  return out;
}

bool is_closed(const RuleSet& r, const Predicate& p) { return leq(der(r, p), p); }
bool is_consistent(const RuleSet& r, const Predicate& p) { return leq(p, conf(r, p)); }
bool is_closed_v(const RuleSet& r, const Predicate& v, const Predicate& p) { return leq(der_v(r, v, p), p); }
bool is_consistent_v(const RuleSet& r, const Predicate& v, const Predicate& p) {
  return leq(p, conf_v(r, v, p));
}

PredicateOperator der_operator(const RuleSet& r) {
  return [r](const Predicate& p) { return der(r, p); };
}

PredicateOperator conf_operator(const RuleSet& r) {
  return [r](const Predicate& p) { return conf(r, p); };
}

PredicateOperator der_v_operator(const RuleSet& r, const Predicate& v) {
  require_carrier(r.carrier(), v);
  return [r, v](const Predicate& p) { return der_v(r, v, p); };
}

PredicateOperator conf_v_operator(const RuleSet& r, const Predicate& v) {
  require_carrier(r.carrier(), v);
  return [r, v](const Predicate& p) { return conf_v(r, v, p); };
}

}  // namespace coinduct
