#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coinduct/predicate.hpp"
#include "coinduct/ruleset.hpp"

namespace coinduct {

/// Largest carrier for which every (U, V) pair may be enumerated.
inline constexpr std::size_t kMaxExhaustiveLaws = 10;

struct LawOptions {
  /// Carriers up to this size are checked over every (U, V) pair.
  std::size_t exhaustive_limit = 4;
  bool force_exhaustive = false;
  /// Sampled (U, V) pairs on larger carriers.
  std::size_t samples = 256;
  std::uint64_t seed = 0;
};

struct LawCounterexample {
  std::size_t a;
  Predicate u;
  Predicate v;
};

struct LawResult {
  std::string law;
  /// Non-gating results are informative only (alternative readings).
  bool gating = true;
  bool holds = true;
  std::size_t instances = 0;
  std::optional<LawCounterexample> counterexample;
};

struct LawReport {
  bool exhaustive = true;
  std::size_t pairs = 0;  // (U, V) pairs examined
  std::uint64_t seed = 0;
  std::vector<LawResult> laws;

  bool gating_hold() const;
  const LawResult* find(const std::string& law) const;
};

/// reflexivity, transitivity of - ◁ V.
LawReport check_cover_laws(const RuleSet& r, const LawOptions& options = {});
/// coreflexivity and cotransitivity of - ⋉ V. Cotransitivity is checked in
/// the usual form (a ⋉ U and U-positive points lie in V give a ⋉ V, gating)
/// and with U and V exchanged in the hypothesis (`cotransitivity_swapped`,
/// informative).
LawReport check_positivity_laws(const RuleSet& r, const LawOptions& options = {});
/// a ⋉ V and a ◁ U give (∃x ε U)(x ⋉ V) (gating, `compatibility`) and
/// (∃x ε V)(x ⋉ U) (informative, `compatibility_swapped`).
LawReport check_compatibility(const RuleSet& r, const LawOptions& options = {});
/// All of the above in one report.
LawReport check_basic_topology(const RuleSet& r, const LawOptions& options = {});

struct AxiomCheck {
  std::size_t element;
  std::string rule;
  bool cover_axiom;  // a ◁ C(a, i)
  bool cotr_axiom;   // for every V examined: a ⋉ V gives some z ε C(a, i) with z ⋉ V
  /// a ⋉ C(a, i); only evaluated when a is in the coinductive predicate and
  /// a ε C(a, i).
  std::optional<bool> positivity_axiom;
};

struct AxiomReport {
  std::vector<AxiomCheck> axioms;
  bool holds() const;  // cover and cotr halves
};

AxiomReport check_generated_axioms(const RuleSet& r, const LawOptions& options = {});

}  // namespace coinduct
