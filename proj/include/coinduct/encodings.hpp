#pragma once

#include <cstddef>
#include <string_view>

#include "coinduct/container.hpp"
#include "coinduct/predicate.hpp"
#include "coinduct/proofobjects.hpp"
#include "coinduct/ruleset.hpp"

namespace coinduct {

/// Rule id of the reflexivity axiom added at members of V (the `inl` side of
/// I_V(x) = (x ε V) + I(x)).
inline constexpr std::string_view kReflexiveRuleId = "v:refl";
/// Prefix carried by original rules inside an enlarged rule set (`inr`).
inline constexpr std::string_view kOriginalRulePrefix = "i:";

/// Adds an axiom `v:refl` at each member of V and renames every original rule
/// i to `i:<i>`. Ind of the result is the cover - ◁ V.
RuleSet enlarge(const RuleSet& r, const Predicate& v);

/// rf(a) becomes the axiom leaf at a, tr(a, i, p) becomes ind(a, i:<i>, p').
/// Throws InvalidInput on an invalid proof.
DerivationTree translate_cover_proof(const RuleSet& r, const Predicate& v, const CoverProof& p);
/// Inverse of translate_cover_proof on trees over enlarge(r, v).
CoverProof untranslate_cover_proof(const RuleSet& r, const Predicate& v, const DerivationTree& t);

/// Comprehension on V: the carrier becomes the members of V (declaration
/// order) and every premise set is intersected with V.
RuleSet restrict(const RuleSet& r, const Predicate& v);
/// Carries a predicate over restrict(r, v)'s carrier back to r's carrier.
Predicate lift_from_restriction(const RuleSet& r, const Predicate& on_restriction);

/// One option per rule, one branch per premise (branch id = element name,
/// arity = that element).
IndexedContainer container_of_ruleset(const RuleSet& r);
/// One rule per option; premises are the image of the arity map as a set.
RuleSet ruleset_of_container(const IndexedContainer& k);

struct ConfAsDerOptions {
  std::size_t max_options_per_element = 4096;
};

/// Options at x are the choice functions picking one premise for every rule of
/// x; branches of a choice are the rules of x, and the arity of rule i is the
/// premise picked for it. Then conf(r, P) = der_container(result, P).
/// Throws BoundExceeded past the per-element cap.
IndexedContainer conf_as_der(const RuleSet& r, const ConfAsDerOptions& options = {});

struct DualityReport {
  Predicate ind;
  Predicate coind;
  bool complementary;  // complement(ind) == coind
};

DualityReport complement_dual(const RuleSet& r);

}  // namespace coinduct
