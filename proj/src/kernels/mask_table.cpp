#include "coinduct/kernels.hpp"

#include "coinduct/error.hpp"

namespace coinduct::kernels {

MaskTable make_mask_table(const RuleSet& r) {
  if (r.size() > kMaxMaskWidth) {
    throw BoundExceeded("mask kernels support at most 64 elements, carrier has " + std::to_string(r.size()));
  }
  MaskTable t;
  t.width = r.size();
  t.universe = t.width == kMaxMaskWidth ? ~std::uint64_t{0} : (std::uint64_t{1} << t.width) - 1;
  t.rules.reserve(r.rule_count());
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (const auto& rule : r.rules_of(x)) t.rules.push_back({std::uint64_t{1} << x, rule.premises.mask()});
  }
  return t;
}

}  // namespace coinduct::kernels
