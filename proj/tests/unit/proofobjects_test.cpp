#include <gtest/gtest.h>

#include "coinduct/error.hpp"
#include "coinduct/fixtures.hpp"
#include "coinduct/proofobjects.hpp"
#include "support/random_ruleset.hpp"
#include "support/random_trees.hpp"

namespace coinduct {
namespace {

CoverProof r1_proof_of_a() {
  // tr(a, to_b, tr(b, to_c, rf(c)))
  CoverProof b{CoverProof::Step::tr, 1, "to_c", {{2, CoverProof::rf(2)}}};
  return CoverProof{CoverProof::Step::tr, 0, "to_b", {{1, b}}};
}

TEST(Derivation, ExtractsFirstRankedRule) {
  const auto r2 = fixtures::r2();
  const auto t = extract_derivation(r2, r2.carrier().index_of("b"));
  EXPECT_EQ(t.rule, "from_a");
  ASSERT_EQ(t.children.size(), 1u);
  EXPECT_EQ(t.children[0].tree.rule, "ax");
  EXPECT_EQ(t.node_count(), 2u);
  EXPECT_TRUE(check_derivation(r2, t));
}

TEST(Derivation, UnderivableElementThrows) {
  const auto r1 = fixtures::r1();
  EXPECT_THROW(extract_derivation(r1, 2), SemanticError);
  EXPECT_THROW(extract_derivation(fixtures::r2(), 2), SemanticError);
}

TEST(Derivation, CheckerRejectsBrokenTrees) {
  const auto r2 = fixtures::r2();
  auto t = extract_derivation(r2, 1);
  auto bad_rule = t;
  bad_rule.rule = "nope";
  EXPECT_FALSE(check_derivation(r2, bad_rule));
  auto missing = t;
  missing.children.clear();
  EXPECT_FALSE(check_derivation(r2, missing));
  auto wrong_child = t;
  wrong_child.children[0].tree = extract_derivation(r2, 1);
  EXPECT_FALSE(check_derivation(r2, wrong_child));
}

TEST(CoverProofs, R1ChainWithDepthMotive) {
  const auto r1 = fixtures::r1();
  const auto v = Predicate::of(r1.carrier(), {"c"});
  const auto p = extract_cover_proof(r1, v, 0);
  EXPECT_EQ(p, r1_proof_of_a());
  EXPECT_TRUE(check_cover_proof(r1, v, p));
  const auto depth = eval_cover_recursor<int>(
      r1, v, p, [](std::size_t) { return 1; },
      [](std::size_t, const std::string&, std::span<const std::pair<std::size_t, int>> rs) {
        int best = 0;
        for (const auto& [z, d] : rs) best = std::max(best, d);
        return best + 1;
      });
  EXPECT_EQ(depth, 3);
  EXPECT_EQ(p.depth(), 3u);
}

TEST(CoverProofs, RfIsConstant) {
  const auto r1 = fixtures::r1();
  const auto v = Predicate::of(r1.carrier(), {"c"});
  const auto seven = eval_cover_recursor<int>(
      r1, v, CoverProof::rf(2), [](std::size_t) { return 7; },
      [](std::size_t, const std::string&, std::span<const std::pair<std::size_t, int>>) { return 0; });
  EXPECT_EQ(seven, 7);
}

TEST(CoverProofs, RfOutsideVIsRejected) {
  const auto r1 = fixtures::r1();
  const auto v = Predicate::of(r1.carrier(), {"c"});
  EXPECT_FALSE(check_cover_proof(r1, v, CoverProof::rf(0)));
  EXPECT_THROW(eval_cover_recursor<int>(
                   r1, v, CoverProof::rf(0), [](std::size_t) { return 1; },
                   [](std::size_t, const std::string&, std::span<const std::pair<std::size_t, int>>) { return 0; }),
               InvalidInput);
}

TEST(Recursor, NodeCountOnR2) {
  const auto r2 = fixtures::r2();
  const auto n = eval_ind_recursor<int>(r2, extract_derivation(r2, 1),
                                        [](std::size_t, const std::string&,
                                           std::span<const std::pair<std::size_t, int>> rs) {
                                          int total = 1;
                                          for (const auto& [z, c] : rs) total += c;
                                          return total;
                                        });
  EXPECT_EQ(n, 2);
}

TEST(Certificates, SoundAndCompleteOnRandomInstances) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const auto r = testing::random_ruleset(rng);
    const auto v = testing::random_subset(r.carrier(), rng);
    const auto ind = ind_fixpoint(r);
    const auto cov = cover_fixpoint(r, v);
    for (std::size_t a = 0; a < r.size(); ++a) {
      if (ind.value.contains(a)) {
        EXPECT_TRUE(check_derivation(r, extract_derivation(r, a)));
        EXPECT_TRUE(check_derivation(r, testing::random_derivation(r, ind.trace, a, rng)));
      } else {
        EXPECT_THROW(extract_derivation(r, a), SemanticError);
      }
      if (cov.value.contains(a)) {
        EXPECT_TRUE(check_cover_proof(r, v, extract_cover_proof(r, v, a)));
        EXPECT_TRUE(check_cover_proof(r, v, testing::random_cover_proof(r, v, cov.trace, a, rng)));
      } else {
        EXPECT_THROW(extract_cover_proof(r, v, a), SemanticError);
      }
    }
  }
}

TEST(Witness, R2LoopUnfoldsToItself) {
  const auto r2 = fixtures::r2();
  const auto w = build_coind_witness(r2, 2);
  EXPECT_TRUE(verify_coind_witness(r2, w));
  const auto step = des(r2, w, "loop");
  EXPECT_EQ(step.element, 2u);
  EXPECT_EQ(step.next.support, w.support);
  EXPECT_THROW(des(r2, w, "nope"), InvalidInput);
  EXPECT_THROW(build_coind_witness(r2, 0), SemanticError);
}

TEST(Witness, CorfAndCotrOnPositivity) {
  const auto r2 = fixtures::r2();
  const auto v = Predicate::of(r2.carrier(), {"b", "c"});
  const auto w = build_coind_witness(r2, v, 2);
  EXPECT_TRUE(verify_coind_witness(r2, v, w));
  EXPECT_FALSE(verify_coind_witness(r2, Predicate::full(r2.carrier()), w));
  const auto m = corf(w);
  EXPECT_EQ(m.element, 2u);
  EXPECT_TRUE(m.v.contains(m.element));
  const auto step = cotr(r2, w, "loop");
  EXPECT_EQ(step.evidence.premise, 2u);
  EXPECT_TRUE(premises(r2, "c", "loop").contains(step.evidence.premise));
  EXPECT_THROW(corf(build_coind_witness(r2, 2)), SemanticError);
}

TEST(Witness, NoRulesToDestruct) {
  const auto r0 = fixtures::r0();
  const auto w = build_coind_witness(r0, 0);
  EXPECT_TRUE(verify_coind_witness(r0, w));
  EXPECT_THROW(des(r0, w, "anything"), SemanticError);
}

TEST(Witness, VerifierRejectsBadTables) {
  const auto r2 = fixtures::r2();
  const auto& c = r2.carrier();
  CoinductionWitness ab{Predicate::of(c, {"a", "b"}), 0, std::nullopt, {{1, {{"from_a", 0}}}}};
  EXPECT_FALSE(verify_coind_witness(r2, ab));

  auto w = build_coind_witness(r2, 2);
  w.continuations[2]["loop"] = 0;  // a is not a premise of loop
  EXPECT_FALSE(verify_coind_witness(r2, w));

  auto leaves = build_coind_witness(r2, 2);
  leaves.continuations[2]["loop"] = 1;  // b is a premise but outside the support
  EXPECT_FALSE(verify_coind_witness(r2, leaves));
}

TEST(Witness, SoundCompleteAndDesStaysInside) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const auto r = testing::random_ruleset(rng);
    const auto v = testing::random_subset(r.carrier(), rng);
    const auto co = coind_predicate(r);
    const auto pos = positivity(r, v);
    for (std::size_t a = 0; a < r.size(); ++a) {
      if (co.contains(a)) {
        const auto w = build_coind_witness(r, a);
        ASSERT_TRUE(verify_coind_witness(r, w));
        EXPECT_TRUE(leq(w.support, co));
        for (const auto& rule : r.rules_of(a)) {
          const auto step = des(r, w, rule.id);
          EXPECT_TRUE(co.contains(step.element));
          EXPECT_TRUE(rule.premises.contains(step.element));
          EXPECT_TRUE(verify_coind_witness(r, step.next));
        }
      } else {
        EXPECT_THROW(build_coind_witness(r, a), SemanticError);
      }
      if (pos.contains(a)) {
        const auto w = build_coind_witness(r, v, a);
        ASSERT_TRUE(verify_coind_witness(r, v, w));
        EXPECT_TRUE(v.contains(corf(w).element));
      } else {
        EXPECT_THROW(build_coind_witness(r, v, a), SemanticError);
      }
    }
  }
}

}  // namespace
}  // namespace coinduct
