#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coinduct/operators.hpp"
#include "coinduct/predicate.hpp"
#include "coinduct/ruleset.hpp"

namespace coinduct {

enum class FixpointKind { least, greatest };

/// Kleene iterates of one solve. For a least fixed point `stages` runs
/// ∅ = S0 ⊆ S1 ⊆ ... ⊆ Sm = op(Sm) and rank[x] is the first stage holding x;
/// for a greatest fixed point it runs A = S0 ⊇ S1 ⊇ ... and rank[x] is the
/// last stage holding x. Distinct stages only: the final one is the fixed point.
struct FixpointTrace {
  FixpointKind kind = FixpointKind::least;
  std::vector<Predicate> stages;
  std::vector<std::optional<std::size_t>> rank;

  const Predicate& result() const { return stages.back(); }
};

struct FixpointResult {
  Predicate value;
  FixpointTrace trace;
};

/// Iterates `op` upward from ∅ (resp. downward from the full carrier). A
/// non-monotone step or a missing stabilisation within |A|+1 stages raises
/// SemanticError instead of looping.
FixpointResult lfp(const PredicateOperator& op, const Carrier& carrier);
FixpointResult gfp(const PredicateOperator& op, const Carrier& carrier);

FixpointResult ind_fixpoint(const RuleSet& r);
FixpointResult coind_fixpoint(const RuleSet& r);
FixpointResult cover_fixpoint(const RuleSet& r, const Predicate& v);
FixpointResult positivity_fixpoint(const RuleSet& r, const Predicate& v);

/// Smallest closed predicate.
Predicate ind_predicate(const RuleSet& r);
/// Greatest consistent predicate.
Predicate coind_predicate(const RuleSet& r);
/// - ◁ V: least fixed point of V ∪ Der.
Predicate cover(const RuleSet& r, const Predicate& v);
/// - ⋉ V: greatest fixed point of V ∩ Conf.
Predicate positivity(const RuleSet& r, const Predicate& v);

struct OracleOptions {
  std::size_t max_elements = 16;
};

// The exhaustive oracle: intersection of every closed predicate and union of
// every consistent predicate, all 2^|A| subsets enumerated. It shares nothing
// with the Kleene path above. Throws BoundExceeded past `max_elements`.
Predicate oracle_lfp(const RuleSet& r, const OracleOptions& options = {});
Predicate oracle_lfp(const RuleSet& r, const Predicate& v, const OracleOptions& options = {});
Predicate oracle_gfp(const RuleSet& r, const OracleOptions& options = {});
Predicate oracle_gfp(const RuleSet& r, const Predicate& v, const OracleOptions& options = {});

// Side conditions of the eliminator / introduction rule for a user-supplied
// predicate: Der(P) ≤ P and P ≤ Conf(P), optionally V-extended.
bool verify_closed(const RuleSet& r, const Predicate& p);
bool verify_closed(const RuleSet& r, const Predicate& v, const Predicate& p);
bool verify_consistent(const RuleSet& r, const Predicate& p);
bool verify_consistent(const RuleSet& r, const Predicate& v, const Predicate& p);

}  // namespace coinduct
