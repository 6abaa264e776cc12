#pragma once

#include "coinduct/predicate.hpp"
#include "coinduct/ruleset.hpp"

namespace coinduct::fixtures {

/// Carrier {a,b,c}, no rules at all.
RuleSet r0();

/// a -(to_b)-> {b}, b -(to_c)-> {c}, c has no rules.
RuleSet r1();

/// a has the axiom `ax` (no premises), b needs {a}, c needs {b,c}.
RuleSet r2();

/// Binary Baire-space truncation: lists over {0,1} of length <= 2, written
/// "[]", "[0]", ..., "[11]". Lists shorter than 2 have an `extend` rule whose
/// premises are the two one-step extensions; every list has a `prefix:<l>`
/// rule with premises {l} for each proper prefix l. Length-2 lists get no
/// `extend` rule.
RuleSet r3();

/// The length-2 lists of r3(): the bar used by the worked cover query.
Predicate baire_bar(const RuleSet& r3);

}  // namespace coinduct::fixtures
