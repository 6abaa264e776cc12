#include <gtest/gtest.h>

#include <cstdlib>
#include <string>
#include <vector>

#include "coinduct/error.hpp"
#include "coinduct/fixtures.hpp"
#include "coinduct/kernels.hpp"
#include "coinduct/operators.hpp"
#include "support/random_ruleset.hpp"

namespace coinduct {
namespace {

using kernels::KernelSet;

std::vector<const KernelSet*> available() {
  std::vector<const KernelSet*> out{&kernels::scalar_kernels()};
  if (const auto* avx = kernels::avx2_kernels()) out.push_back(avx);
  return out;
}

std::vector<std::uint64_t> every_mask(std::size_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.push_back(m);
  return out;
}

TEST(Kernels, ScalarBatchMatchesPredicateOperators) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const auto r = testing::random_ruleset(rng, {1, 6, 3});
    const auto table = kernels::make_mask_table(r);
    const auto in = every_mask(r.size());
    std::vector<std::uint64_t> d(in.size()), c(in.size());
    kernels::scalar::der_batch(table, in, d);
    kernels::scalar::conf_batch(table, in, c);
    for (std::size_t k = 0; k < in.size(); ++k) {
      const auto p = Predicate::from_mask(r.carrier(), in[k]);
      EXPECT_EQ(d[k], der(r, p).mask());
      EXPECT_EQ(c[k], conf(r, p).mask());
    }
  }
}

TEST(Kernels, VariantsAgreeWithScalarReference) {
  const auto& ref = kernels::scalar_kernels();
  std::mt19937_64 rng(32);
  // Widths 1..10 cover the scalar fallback below two elements and batches
  // that are not a multiple of the vector width.
  for (int i = 0; i < 300; ++i) {
    const auto r = testing::random_ruleset(rng, {1, 10, 4});
    const auto table = kernels::make_mask_table(r);
    auto in = every_mask(r.size());
    in.push_back(table.universe);  // odd length
    std::vector<std::uint64_t> want_d(in.size()), want_c(in.size());
    ref.der_batch(table, in, want_d);
    ref.conf_batch(table, in, want_c);
    const auto v = testing::random_subset(r.carrier(), rng).mask();
    for (const auto* ks : available()) {
      std::vector<std::uint64_t> d(in.size()), c(in.size());
      ks->der_batch(table, in, d);
      ks->conf_batch(table, in, c);
      EXPECT_EQ(d, want_d) << ks->name;
      EXPECT_EQ(c, want_c) << ks->name;
      EXPECT_EQ(ks->closed_meet(table, v), ref.closed_meet(table, v)) << ks->name;
      EXPECT_EQ(ks->consistent_join(table, v), ref.consistent_join(table, v)) << ks->name;
    }
  }
}

TEST(Kernels, SweepsOnFixtures) {
  for (const auto* ks : available()) {
    const auto r2 = fixtures::r2();
    const auto t = kernels::make_mask_table(r2);
    EXPECT_EQ(ks->closed_meet(t, 0), 0b011u) << ks->name;
    EXPECT_EQ(ks->consistent_join(t, t.universe), 0b100u) << ks->name;
    const auto r0 = fixtures::r0();
    const auto t0 = kernels::make_mask_table(r0);
    EXPECT_EQ(ks->closed_meet(t0, 0), 0u);
    EXPECT_EQ(ks->consistent_join(t0, t0.universe), 0b111u);
  }
}

TEST(Kernels, TableWidthBound) {
  std::vector<std::string> names;
  for (int i = 0; i < 65; ++i) names.push_back("e" + std::to_string(i));
  const RuleSet wide(Carrier(names), std::vector<std::vector<Rule>>(65));
  EXPECT_THROW(kernels::make_mask_table(wide), BoundExceeded);
}

TEST(Kernels, ActiveSetIsOneOfTheAvailable) {
  const auto& active = kernels::active_kernels();
  bool found = false;
  for (const auto* ks : available()) found = found || ks == &active;
  EXPECT_TRUE(found);
  const char* env = std::getenv("COINDUCT_KERNELS");
  if (env != nullptr && std::string(env) == "scalar") {
    EXPECT_EQ(active.isa, kernels::Isa::scalar);
  } else if (kernels::avx2_kernels() != nullptr) {
    EXPECT_EQ(active.isa, kernels::Isa::avx2);
  }
}

}  // namespace
}  // namespace coinduct
