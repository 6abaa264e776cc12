#include <gtest/gtest.h>

#include "coinduct/basictopology.hpp"
#include "coinduct/fixpoint.hpp"
#include "coinduct/fixtures.hpp"
#include "support/random_ruleset.hpp"

namespace coinduct {
namespace {

const char* const kGating[] = {"reflexivity", "transitivity", "coreflexivity", "cotransitivity", "compatibility"};

void expect_gating_laws(const LawReport& report) {
  for (const char* law : kGating) {
    const auto* result = report.find(law);
    ASSERT_NE(result, nullptr) << law;
    EXPECT_TRUE(result->gating) << law;
    EXPECT_TRUE(result->holds) << law;
  }
  EXPECT_TRUE(report.gating_hold());
}

TEST(Laws, R0IsDegenerate) {
  const auto r0 = fixtures::r0();
  for (const auto& v : testing::all_subsets(r0.carrier())) {
    EXPECT_EQ(cover(r0, v), v);
    EXPECT_EQ(positivity(r0, v), v);
  }
  const auto report = check_basic_topology(r0);
  EXPECT_TRUE(report.exhaustive);
  EXPECT_EQ(report.pairs, 64u);
  expect_gating_laws(report);
}

TEST(Laws, SwappedCotransitivityFailsOnR0) {
  // a ⋉ {a}; nothing is positive towards ∅, so the swapped hypothesis holds
  // vacuously, yet a ⋉ ∅ is false.
  const auto report = check_positivity_laws(fixtures::r0());
  const auto* swapped = report.find("cotransitivity_swapped");
  ASSERT_NE(swapped, nullptr);
  EXPECT_FALSE(swapped->gating);
  EXPECT_FALSE(swapped->holds);
  ASSERT_TRUE(swapped->counterexample.has_value());
  EXPECT_TRUE(swapped->counterexample->v.is_empty());
  EXPECT_TRUE(report.gating_hold());
}

TEST(Laws, FixturesSatisfyGatingLaws) {
  for (const auto& r : {fixtures::r1(), fixtures::r2()}) {
    expect_gating_laws(check_basic_topology(r));
  }
  const auto compat = check_compatibility(fixtures::r2());
  EXPECT_TRUE(compat.find("compatibility")->holds);
  ASSERT_NE(compat.find("compatibility_swapped"), nullptr);
}

TEST(Laws, SamplingAboveTheLimit) {
  const auto r3 = fixtures::r3();
  LawOptions options;
  options.samples = 40;
  options.seed = 9;
  const auto report = check_basic_topology(r3, options);
  EXPECT_FALSE(report.exhaustive);
  EXPECT_EQ(report.seed, 9u);
  EXPECT_EQ(report.pairs, 40u + 4u);  // extremes paired with each other too
  expect_gating_laws(report);
  const auto again = check_basic_topology(r3, options);
  ASSERT_EQ(again.laws.size(), report.laws.size());
  for (std::size_t i = 0; i < again.laws.size(); ++i) EXPECT_EQ(again.laws[i].instances, report.laws[i].instances);
}

TEST(Laws, RandomInstancesExhaustively) {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 100; ++i) {
    const auto r = testing::random_ruleset(rng);
    expect_gating_laws(check_basic_topology(r));
  }
}

TEST(GeneratedAxioms, Fixtures) {
  EXPECT_TRUE(check_generated_axioms(fixtures::r0()).axioms.empty());
  const auto r2 = fixtures::r2();
  const auto report = check_generated_axioms(r2);
  EXPECT_TRUE(report.holds());
  ASSERT_EQ(report.axioms.size(), 3u);
  EXPECT_EQ(report.axioms[1].rule, "from_a");
  EXPECT_TRUE(report.axioms[1].cover_axiom);
  EXPECT_TRUE(cover(r2, Predicate::of(r2.carrier(), {"a"})).contains("b"));
  const auto r1 = fixtures::r1();
  EXPECT_TRUE(check_generated_axioms(r1).holds());
  EXPECT_TRUE(cover(r1, Predicate::of(r1.carrier(), {"b"})).contains("a"));
}

TEST(GeneratedAxioms, RandomInstances) {
  std::mt19937_64 rng(72);
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(check_generated_axioms(testing::random_ruleset(rng)).holds());
}

TEST(GeneratedAxioms, PositivityHalfIsReportedNotRequired) {
  // a -s-> {a}, a -t-> {b}, b -u-> {b}: a is in coind and in C(a, s) = {a},
  // but t has no premise inside {a}, so a ⋉ {a} fails.
  const RuleSet r = RuleSet::from_desc({{"a", "b"}, {{"a", {{"s", {"a"}}, {"t", {"b"}}}}, {"b", {{"u", {"b"}}}}}});
  EXPECT_EQ(coind_predicate(r), Predicate::full(r.carrier()));
  EXPECT_FALSE(positivity(r, Predicate::of(r.carrier(), {"a"})).contains("a"));
  const auto report = check_generated_axioms(r);
  ASSERT_EQ(report.axioms.size(), 3u);
  ASSERT_TRUE(report.axioms[0].positivity_axiom.has_value());
  EXPECT_FALSE(*report.axioms[0].positivity_axiom);
  EXPECT_TRUE(report.holds());
}

}  // namespace
}  // namespace coinduct
