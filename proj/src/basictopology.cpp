#include "coinduct/basictopology.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "coinduct/error.hpp"
#include "coinduct/fixpoint.hpp"

namespace coinduct {

namespace {

// Subsets examined as U and V, with cover/positivity precomputed per subset.
struct Universe {
  std::vector<Predicate> subsets;
  std::vector<Predicate> covers;
  std::vector<Predicate> positives;
  // pairs of indices into `subsets`
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  bool exhaustive = true;
};

Predicate random_subset(const Carrier& carrier, std::mt19937_64& rng) {
  Predicate p(carrier);
  for (std::size_t x = 0; x < carrier.size(); ++x) {
    if (rng() & 1U) p.insert(x);
  }
  return p;
}

Universe build_universe(const RuleSet& r, const LawOptions& options) {
  Universe u;
  const auto& carrier = r.carrier();
  u.exhaustive = options.force_exhaustive || carrier.size() <= options.exhaustive_limit;
  if (u.exhaustive) {
    if (carrier.size() > kMaxExhaustiveLaws) {
      throw BoundExceeded("exhaustive law check bound exceeded: carrier has " + std::to_string(carrier.size()) +
                          " elements, limit is " + std::to_string(kMaxExhaustiveLaws));
    }
    const std::uint64_t count = std::uint64_t{1} << carrier.size();
    for (std::uint64_t m = 0; m < count; ++m) u.subsets.push_back(Predicate::from_mask(carrier, m));
    for (std::size_t i = 0; i < u.subsets.size(); ++i) {
      for (std::size_t j = 0; j < u.subsets.size(); ++j) u.pairs.emplace_back(i, j);
    }
  } else {
    std::mt19937_64 rng(options.seed);
    // always include the extremes
    u.subsets.push_back(Predicate::empty(carrier));
    u.subsets.push_back(Predicate::full(carrier));
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) u.pairs.emplace_back(i, j);
    }
    for (std::size_t s = 0; s < options.samples; ++s) {
      const std::size_t i = u.subsets.size();
      u.subsets.push_back(random_subset(carrier, rng));
      u.subsets.push_back(random_subset(carrier, rng));
      u.pairs.emplace_back(i, i + 1);
    }
  }
  for (const auto& s : u.subsets) {
    u.covers.push_back(cover(r, s));
    u.positives.push_back(positivity(r, s));
  }
  return u;
}

bool exists_in(const Predicate& where, const Predicate& what) { return !intersection(where, what).is_empty(); }

// law(a, u, v) over every examined pair and every element a.
using PairLaw = std::function<bool(std::size_t a, std::size_t u, std::size_t v)>;

LawResult run_law(const RuleSet& r, const Universe& uni, std::string name, bool gating, const PairLaw& law) {
  LawResult result{std::move(name), gating, true, 0, std::nullopt};
  for (const auto& [ui, vi] : uni.pairs) {
    for (std::size_t a = 0; a < r.size(); ++a) {
      ++result.instances;
      if (!law(a, ui, vi)) {
        result.holds = false;
        result.counterexample = LawCounterexample{a, uni.subsets[ui], uni.subsets[vi]};
        return result;
      }
    }
  }
  return result;
}

LawReport make_report(const Universe& uni, const LawOptions& options) {
  LawReport report;
  report.exhaustive = uni.exhaustive;
  report.pairs = uni.pairs.size();
  report.seed = options.seed;
  return report;
}

void add_cover_laws(const RuleSet& r, const Universe& u, LawReport& report) {
  report.laws.push_back(run_law(r, u, "reflexivity", true, [&](std::size_t a, std::size_t, std::size_t v) {
    return !u.subsets[v].contains(a) || u.covers[v].contains(a);
  }));
  report.laws.push_back(run_law(r, u, "transitivity", true, [&](std::size_t a, std::size_t uu, std::size_t v) {
    const bool premise = u.covers[uu].contains(a) && leq(u.subsets[uu], u.covers[v]);
    return !premise || u.covers[v].contains(a);
  }));
}

void add_positivity_laws(const RuleSet& r, const Universe& u, LawReport& report) {
  report.laws.push_back(run_law(r, u, "coreflexivity", true, [&](std::size_t a, std::size_t, std::size_t v) {
    return !u.positives[v].contains(a) || u.subsets[v].contains(a);
  }));
  report.laws.push_back(run_law(r, u, "cotransitivity", true, [&](std::size_t a, std::size_t uu, std::size_t v) {
    const bool premise = u.positives[uu].contains(a) && leq(u.positives[uu], u.subsets[v]);
    return !premise || u.positives[v].contains(a);
  }));
  report.laws.push_back(
      run_law(r, u, "cotransitivity_swapped", false, [&](std::size_t a, std::size_t uu, std::size_t v) {
        const bool premise = u.positives[uu].contains(a) && leq(u.positives[v], u.subsets[uu]);
        return !premise || u.positives[v].contains(a);
      }));
}

void add_compatibility(const RuleSet& r, const Universe& u, LawReport& report) {
  report.laws.push_back(run_law(r, u, "compatibility", true, [&](std::size_t a, std::size_t uu, std::size_t v) {
    const bool premise = u.positives[v].contains(a) && u.covers[uu].contains(a);
    return !premise || exists_in(u.subsets[uu], u.positives[v]);
  }));
  report.laws.push_back(
      run_law(r, u, "compatibility_swapped", false, [&](std::size_t a, std::size_t uu, std::size_t v) {
        const bool premise = u.positives[v].contains(a) && u.covers[uu].contains(a);
        return !premise || exists_in(u.subsets[v], u.positives[uu]);
      }));
}

}  // namespace

bool LawReport::gating_hold() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return !l.gating || l.holds; });
}

const LawResult* LawReport::find(const std::string& law) const {
  for (const auto& l : laws) {
    if (l.law == law) return &l;
  }
  return nullptr;
}

LawReport check_cover_laws(const RuleSet& r, const LawOptions& options) {
  const auto u = build_universe(r, options);
  auto report = make_report(u, options);
  add_cover_laws(r, u, report);
  return report;
}

LawReport check_positivity_laws(const RuleSet& r, const LawOptions& options) {
  const auto u = build_universe(r, options);
  auto report = make_report(u, options);
  add_positivity_laws(r, u, report);
  return report;
}

LawReport check_compatibility(const RuleSet& r, const LawOptions& options) {
  const auto u = build_universe(r, options);
  auto report = make_report(u, options);
  add_compatibility(r, u, report);
  return report;
}

LawReport check_basic_topology(const RuleSet& r, const LawOptions& options) {
  const auto u = build_universe(r, options);
  auto report = make_report(u, options);
  add_cover_laws(r, u, report);
  add_positivity_laws(r, u, report);
  add_compatibility(r, u, report);
  return report;
}

bool AxiomReport::holds() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomCheck& c) { return c.cover_axiom && c.cotr_axiom; });
}

AxiomReport check_generated_axioms(const RuleSet& r, const LawOptions& options) {
  const auto u = build_universe(r, options);
  const auto coind = coind_predicate(r);
  AxiomReport report;
  for (std::size_t a = 0; a < r.size(); ++a) {
    for (const auto& rule : r.rules_of(a)) {
      AxiomCheck check{a, rule.id, cover(r, rule.premises).contains(a), true, std::nullopt};
      for (std::size_t v = 0; v < u.subsets.size() && check.cotr_axiom; ++v) {
        if (u.positives[v].contains(a)) check.cotr_axiom = exists_in(rule.premises, u.positives[v]);
      }
      if (coind.contains(a) && rule.premises.contains(a)) {
        check.positivity_axiom = positivity(r, rule.premises).contains(a);
      }
      report.axioms.push_back(std::move(check));
    }
  }
  return report;
}

}  // namespace coinduct
