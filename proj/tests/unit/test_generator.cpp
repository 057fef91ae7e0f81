#include <gtest/gtest.h>

#include "olog/derivation.hpp"
#include "olog/evaluation.hpp"
#include "olog/generator.hpp"
#include "olog/isomorphism.hpp"
#include "support.hpp"

using namespace olog;
using olog::testing::path;

namespace {

const OlogSchema& schema() {
  static const OlogSchema s = olog::testing::bundled_olog();
  return s;
}

void expect_fully_valid(const Instance& inst) {
  EXPECT_TRUE(validate_instance(schema(), inst).empty());
  for (const auto& r : check_all_equations(schema(), inst)) {
    EXPECT_EQ(r.verdict, EquationVerdict::AllHold) << arrow_list(r.equation.lhs);
  }
  for (const auto& fp : schema().fiber_products) {
    EXPECT_EQ(verify_fiber_product(schema(), inst, fp).verdict, FiberProductVerdict::Pass) << fp.apex;
  }
}

std::string code_of(const SimParams& p, const Comparators& c = {}) {
  try {
    generate_instance(p, schema(), c);
  } catch (const OlogError& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST(Generator, ProteinDefaults) {
  const auto g = generate_instance(protein_defaults(), schema());
  expect_fully_valid(g.instance);
  EXPECT_EQ(g.classification, Classification::Ductile);
  EXPECT_EQ(g.system_failure, 100);
  EXPECT_EQ(g.glue_failure, 20.6);
  EXPECT_EQ(g.instance.set("R").size(), 9u);
  EXPECT_EQ(g.instance.set("S").size(), 8u);
  EXPECT_EQ(g.instance.set("T").size(), 8u);
  EXPECT_EQ(g.instance.set("U").size(), 25u);
  EXPECT_EQ(g.instance.set("A").size(), 1u);
  EXPECT_EQ(g.instance.set("E").size(), 1u);
  EXPECT_TRUE(g.instance.set("B").empty());
  EXPECT_TRUE(g.instance.set("C").empty());
}

TEST(Generator, BrittleCounterpart) {
  auto p = protein_defaults();
  p.lifeline_present = false;
  const auto g = generate_instance(p, schema());
  expect_fully_valid(g.instance);
  EXPECT_EQ(g.classification, Classification::Brittle);
  EXPECT_EQ(g.system_failure, 20.6);
  EXPECT_EQ(g.instance.set("B").size(), 1u);
  EXPECT_EQ(g.instance.set("C").size(), 1u);
  EXPECT_TRUE(g.instance.set("A").empty());
  EXPECT_TRUE(g.instance.set("T").empty());
}

TEST(Generator, BrickCountDrivesBoxR) {
  auto p = protein_defaults();
  p.brick_count = 3;
  EXPECT_EQ(generate_instance(p, schema()).instance.set("R").size(), 3u);
}

TEST(Generator, SocialDefaultsFillEveryTuple) {
  const auto g = generate_instance(social_defaults(), schema());
  expect_fully_valid(g.instance);
  EXPECT_EQ(g.instance.set("R").size(), 100u);
  EXPECT_EQ(g.classification, Classification::Ductile);
  // unbreakable bricks and passageways form brick/strong-glue pairs
  EXPECT_FALSE(g.instance.set("L").empty());
  EXPECT_FALSE(g.instance.set("K").empty());
  EXPECT_EQ(g.instance.set("I").size(), g.instance.set("K").size());
  EXPECT_TRUE(is_chain(std::get<Graph>(g.instance.set("D").begin()->second)));
}

TEST(Generator, MatchedSocialIsIsomorphicToProtein) {
  const auto a = generate_instance(protein_defaults(), schema());
  const auto b = generate_instance(matched_social_defaults(), schema());
  const auto r = check_instance_isomorphism(schema(), a.instance, b.instance);
  ASSERT_EQ(r.verdict, IsoVerdict::Found) << r.failure_reason;
  EXPECT_TRUE(is_natural_isomorphism(schema(), a.instance, b.instance, r.bijections));
}

TEST(Generator, ConstraintViolations) {
  auto p = protein_defaults();
  p.brick_failure = 30;
  EXPECT_EQ(code_of(p), codes::kParamConstraint);

  p = protein_defaults();
  p.lifeline_resting = 60;
  EXPECT_EQ(code_of(p), codes::kParamConstraint);

  p = protein_defaults();
  p.brick_count = 1;
  EXPECT_EQ(code_of(p), codes::kParamConstraint);

  p = protein_defaults();
  p.lifeline_failure = 23;
  p.lifeline_resting = 23.45;
  EXPECT_EQ(code_of(p), codes::kParamConstraint);
}

TEST(Generator, ConjectureFailureIsReported) {
  EXPECT_EQ(code_of(protein_defaults(), Comparators{0.25, 10}), codes::kConjectureFailed);
}

TEST(Generator, NonCommutingPairDisagreesEverywhere) {
  for (const auto& p : {protein_defaults(), social_defaults()}) {
    const auto g = generate_instance(p, schema());
    ASSERT_FALSE(g.instance.set("N").empty());
    for (const auto& [n, _] : g.instance.set("N")) {
      EXPECT_NE(eval_path(schema(), g.instance, path("N", {"30", "39"}), n),
                eval_path(schema(), g.instance, path("N", {"31", "40"}), n));
    }
  }
}

// Random draws from the constrained region: every lifeline chain is
// ductile, every lifeline-free chain brittle, and every instance passes
// all checks. The lifeline rest never falls far below the glue failure.
TEST(Generator, HypothesisHoldsOnRandomDraws) {
  const Comparators c;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (bool lifeline : {true, false}) {
      const auto p = random_params(seed, lifeline, seed % 2 ? Domain::Social : Domain::Protein, c);
      const auto g = generate_instance(p, schema(), c);
      EXPECT_EQ(g.classification, lifeline ? Classification::Ductile : Classification::Brittle);
      expect_fully_valid(g.instance);
      if (lifeline) EXPECT_GE(p.lifeline_resting, g.glue_failure * (1 - c.eps_rel));
    }
  }
}

TEST(Generator, IsDeterministic) {
  EXPECT_EQ(generate_instance(social_defaults(), schema()).instance,
            generate_instance(social_defaults(), schema()).instance);
}
