#pragma once

#include <functional>

#include "coinduct/container.hpp"
#include "coinduct/predicate.hpp"
#include "coinduct/ruleset.hpp"

namespace coinduct {

/// A monotone endomap on the predicates of one carrier.
using PredicateOperator = std::function<Predicate(const Predicate&)>;

// Empty I(x) makes Der false and Conf true; an empty premise set makes the
// inner universal true and the inner existential false.

/// x in Der(P) iff some rule of x has all of its premises in P.
Predicate der(const RuleSet& r, const Predicate& p);
/// x in Conf(P) iff every rule of x has some premise in P.
Predicate conf(const RuleSet& r, const Predicate& p);

/// V ∪ Der(P).
Predicate der_v(const RuleSet& r, const Predicate& v, const Predicate& p);
/// V ∩ Conf(P).
Predicate conf_v(const RuleSet& r, const Predicate& v, const Predicate& p);

/// Some option of x has every branch's arity in P.
Predicate der_container(const IndexedContainer& k, const Predicate& p);
/// Every option of x has some branch whose arity is in P.
Predicate conf_container(const IndexedContainer& k, const Predicate& p);

bool is_closed(const RuleSet& r, const Predicate& p);
bool is_consistent(const RuleSet& r, const Predicate& p);
bool is_closed_v(const RuleSet& r, const Predicate& v, const Predicate& p);
bool is_consistent_v(const RuleSet& r, const Predicate& v, const Predicate& p);

PredicateOperator der_operator(const RuleSet& r);
PredicateOperator conf_operator(const RuleSet& r);
PredicateOperator der_v_operator(const RuleSet& r, const Predicate& v);
PredicateOperator conf_v_operator(const RuleSet& r, const Predicate& v);

}  // namespace coinduct
