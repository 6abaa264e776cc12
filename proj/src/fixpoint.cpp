#include "coinduct/fixpoint.hpp"

#include "coinduct/error.hpp"
#include "coinduct/kernels.hpp"

namespace coinduct {

namespace {

FixpointResult iterate(const PredicateOperator& op, const Carrier& carrier, FixpointKind kind) {
  const bool upward = kind == FixpointKind::least;
  FixpointTrace trace;
  trace.kind = kind;
  trace.rank.assign(carrier.size(), std::nullopt);
  trace.stages.push_back(upward ? Predicate::empty(carrier) : Predicate::full(carrier));

  const std::size_t max_stages = carrier.size() + 1;
  while (true) {
    const Predicate& current = trace.stages.back();
    Predicate next = op(current);
    require_carrier(carrier, next);
    if (next == current) break;
    if (upward ? !leq(current, next) : !leq(next, current)) {
      throw SemanticError("operator is not monotone: iterate " + std::to_string(trace.stages.size()) +
                          " leaves the chain");
    }
    if (trace.stages.size() == max_stages) {
      throw SemanticError("no fixed point within " + std::to_string(max_stages) + " stages");
    }
    trace.stages.push_back(std::move(next));
  }

  for (std::size_t s = 0; s < trace.stages.size(); ++s) {
    for (auto x : trace.stages[s].indices()) {
      if (upward) {
        if (!trace.rank[x]) trace.rank[x] = s;
      } else {
        trace.rank[x] = s;
      }
    }
  }
  Predicate value = trace.stages.back();
  return {std::move(value), std::move(trace)};
}

kernels::MaskTable oracle_table(const RuleSet& r, const OracleOptions& options) {
  if (r.size() > options.max_elements) {
    throw BoundExceeded("oracle bound exceeded: carrier has " + std::to_string(r.size()) +
                        " elements, limit is " + std::to_string(options.max_elements));
  }
  return kernels::make_mask_table(r);
}

}  // namespace

FixpointResult lfp(const PredicateOperator& op, const Carrier& carrier) {
  return iterate(op, carrier, FixpointKind::least);
}

FixpointResult gfp(const PredicateOperator& op, const Carrier& carrier) {
  return iterate(op, carrier, FixpointKind::greatest);
}

FixpointResult ind_fixpoint(const RuleSet& r) { return lfp(der_operator(r), r.carrier()); }
FixpointResult coind_fixpoint(const RuleSet& r) { return gfp(conf_operator(r), r.carrier()); }

FixpointResult cover_fixpoint(const RuleSet& r, const Predicate& v) {
  return lfp(der_v_operator(r, v), r.carrier());
}

FixpointResult positivity_fixpoint(const RuleSet& r, const Predicate& v) {
  return gfp(conf_v_operator(r, v), r.carrier());
}

Predicate ind_predicate(const RuleSet& r) { return ind_fixpoint(r).value; }
Predicate coind_predicate(const RuleSet& r) { return coind_fixpoint(r).value; }
Predicate cover(const RuleSet& r, const Predicate& v) { return cover_fixpoint(r, v).value; }
Predicate positivity(const RuleSet& r, const Predicate& v) { return positivity_fixpoint(r, v).value; }

Predicate oracle_lfp(const RuleSet& r, const OracleOptions& options) {
  return oracle_lfp(r, Predicate::empty(r.carrier()), options);
}

Predicate oracle_lfp(const RuleSet& r, const Predicate& v, const OracleOptions& options) {
  require_carrier(r.carrier(), v);
  const auto table = oracle_table(r, options);
  return Predicate::from_mask(r.carrier(), kernels::active_kernels().closed_meet(table, v.mask()));
}

Predicate oracle_gfp(const RuleSet& r, const OracleOptions& options) {
  return oracle_gfp(r, Predicate::full(r.carrier()), options);
}

Predicate oracle_gfp(const RuleSet& r, const Predicate& v, const OracleOptions& options) {
  require_carrier(r.carrier(), v);
  const auto table = oracle_table(r, options);
  return Predicate::from_mask(r.carrier(), kernels::active_kernels().consistent_join(table, v.mask()));
}

bool verify_closed(const RuleSet& r, const Predicate& p) { return is_closed(r, p); }
bool verify_closed(const RuleSet& r, const Predicate& v, const Predicate& p) { return is_closed_v(r, v, p); }
bool verify_consistent(const RuleSet& r, const Predicate& p) { return is_consistent(r, p); }
bool verify_consistent(const RuleSet& r, const Predicate& v, const Predicate& p) {
  return is_consistent_v(r, v, p);
}

}  // namespace coinduct
