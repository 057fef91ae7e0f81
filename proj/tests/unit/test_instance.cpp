#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "olog/evaluation.hpp"
#include "olog/instance.hpp"
#include "support.hpp"

using namespace olog;
using olog::testing::Gen;
using olog::testing::path;

namespace {

OlogSchema cospan_schema() {
  OlogSchema s;
  s.name = "cospan";
  s.boxes = {{"P", "p", {}}, {"X", "x", {}}, {"Y", "y", {}}, {"Z", "z", {}}};
  s.arrows = {{"f", "X", "Z", "f", {}}, {"g", "Y", "Z", "g", {}},
              {"p1", "P", "X", "p1", {}}, {"p2", "P", "Y", "p2", {}}};
  s.fiber_products = {{"P", "p1", "p2", "f", "g"}};
  s.add_missing_fiber_product_squares();
  return s;
}

Instance cospan_instance() {
  Instance i;
  i.name = "c";
  i.schema_name = "cospan";
  i.sets["X"] = {{"x1", {}}, {"x2", {}}};
  i.sets["Y"] = {{"y1", {}}, {"y2", {}}, {"y3", {}}};
  i.sets["Z"] = {{"z1", {}}, {"z2", {}}};
  i.functions["f"] = {{"x1", "z1"}, {"x2", "z2"}};
  i.functions["g"] = {{"y1", "z1"}, {"y2", "z1"}, {"y3", "z2"}};
  return i;
}

bool has_code(const std::vector<Diagnostic>& ds, std::string_view code) {
  return std::any_of(ds.begin(), ds.end(), [&](const Diagnostic& d) { return d.code == code; });
}

}  // namespace

TEST(Instance, ValidationFindsEveryKindOfProblem) {
  const auto s = cospan_schema();
  auto i = cospan_instance();
  EXPECT_TRUE(validate_instance(s, i).empty());

  auto bad = i;
  bad.functions["f"].erase("x2");
  EXPECT_TRUE(has_code(validate_instance(s, bad), codes::kMissingImage));

  bad = i;
  bad.functions["f"]["x2"] = "nowhere";
  EXPECT_TRUE(has_code(validate_instance(s, bad), codes::kImageNotInTarget));

  bad = i;
  bad.functions["f"]["ghost"] = "z1";
  EXPECT_TRUE(has_code(validate_instance(s, bad), codes::kExtraEntry));

  bad = i;
  bad.sets["X"]["x1"] = 1.5;
  EXPECT_TRUE(has_code(validate_instance(s, bad), codes::kPayloadMixed));

  bad = i;
  bad.schema_name = "other";
  EXPECT_THROW(validate_instance(s, bad), OlogError);
}

TEST(Instance, EvalPathFollowsTables) {
  const auto s = cospan_schema();
  auto i = cospan_instance();
  EXPECT_EQ(eval_path(s, i, path("X", {"f"}), "x2"), "z2");
  EXPECT_EQ(eval_path(s, i, Path::identity("Y"), "y3"), "y3");
  try {
    eval_path(s, i, path("X", {"f"}), "y1");
    FAIL();
  } catch (const OlogError& e) {
    EXPECT_EQ(e.code(), codes::kElementNotInSource);
  }
}

TEST(Pullback, CanonicalPairsAndVerification) {
  const auto s = cospan_schema();
  auto i = cospan_instance();
  const auto pb = compute_pullback(s, i, "f", "g");
  const std::vector<ElementPair> expected{{"x1", "y1"}, {"x1", "y2"}, {"x2", "y3"}};
  EXPECT_EQ(pb.pairs, expected);

  // populate P from the pullback: PASS
  int k = 0;
  for (const auto& [x, y] : pb.pairs) {
    const std::string e = "p" + std::to_string(++k);
    i.sets["P"][e];
    i.functions["p1"][e] = x;
    i.functions["p2"][e] = y;
  }
  EXPECT_EQ(verify_fiber_product(s, i, s.fiber_products[0]).verdict, FiberProductVerdict::Pass);

  auto missing = i;
  missing.sets["P"].erase("p3");
  missing.functions["p1"].erase("p3");
  missing.functions["p2"].erase("p3");
  auto r = verify_fiber_product(s, missing, s.fiber_products[0]);
  EXPECT_EQ(r.failure, FiberProductFailure::MissingPair);
  EXPECT_EQ(r.pair, ElementPair("x2", "y3"));

  auto collide = i;
  collide.functions["p2"]["p2"] = "y1";
  r = verify_fiber_product(s, collide, s.fiber_products[0]);
  EXPECT_EQ(r.failure, FiberProductFailure::Collision);

  auto outside = i;
  outside.functions["p2"]["p3"] = "y1";
  r = verify_fiber_product(s, outside, s.fiber_products[0]);
  EXPECT_EQ(r.failure, FiberProductFailure::OutsidePullback);
}

TEST(Pullback, CospanMismatchThrows) {
  const auto s = cospan_schema();
  try {
    compute_pullback(s, cospan_instance(), "f", "p1");
    FAIL();
  } catch (const OlogError& e) {
    EXPECT_EQ(e.code(), codes::kCospanMismatch);
  }
}

TEST(Pullback, MatchesCartesianFilterOnRandomCospans) {
  Gen g(99);
  const auto s = cospan_schema();
  for (int trial = 0; trial < 300; ++trial) {
    Instance i;
    i.schema_name = s.name;
    const int nx = g.range(0, 20), ny = g.range(0, 20), nz = g.range(1, 20);
    for (int k = 0; k < nz; ++k) i.sets["Z"]["z" + std::to_string(k)];
    auto img = [&] { return "z" + std::to_string(g.range(0, nz - 1)); };
    for (int k = 0; k < nx; ++k) {
      i.sets["X"]["x" + std::to_string(k)];
      i.functions["f"]["x" + std::to_string(k)] = img();
    }
    for (int k = 0; k < ny; ++k) {
      i.sets["Y"]["y" + std::to_string(k)];
      i.functions["g"]["y" + std::to_string(k)] = img();
    }
    std::set<ElementPair> brute;
    for (const auto& [x, _] : i.set("X")) {
      for (const auto& [y, __] : i.set("Y")) {
        if (*i.image("f", x) == *i.image("g", y)) brute.emplace(x, y);
      }
    }
    const auto pb = compute_pullback(s, i, "f", "g");
    const std::set<ElementPair> got(pb.pairs.begin(), pb.pairs.end());
    EXPECT_EQ(got.size(), pb.pairs.size()) << "duplicate pairs";
    EXPECT_EQ(got, brute);
  }
}

TEST(Equations, CounterexampleIsFirstInElementOrder) {
  OlogSchema s;
  s.name = "two";
  s.boxes = {{"A", "a", {}}, {"B", "b", {}}};
  s.arrows = {{"f", "A", "B", "f", {}}, {"g", "A", "B", "g", {}}};
  s.equations = {{path("A", {"f"}), path("A", {"g"}), ""}};
  Instance i;
  i.schema_name = "two";
  i.sets["A"] = {{"a2", {}}, {"a10", {}}, {"a1", {}}};
  i.sets["B"] = {{"b", {}}, {"c", {}}};
  i.functions["f"] = {{"a1", "b"}, {"a2", "b"}, {"a10", "b"}};
  i.functions["g"] = {{"a1", "b"}, {"a2", "c"}, {"a10", "c"}};
  const auto r = check_equation(s, i, s.equations[0]);
  ASSERT_EQ(r.verdict, EquationVerdict::Counterexample);
  EXPECT_EQ(r.witness->element, "a2");
  EXPECT_EQ(r.witness->lhs_result, "b");
  EXPECT_EQ(r.witness->rhs_result, "c");
}

// An equation holds on an instance iff both paths agree pointwise.
TEST(Equations, AgreeWithPointwiseOracleOnRandomInstances) {
  Gen g(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = olog::testing::random_schema(g);
    const auto i = olog::testing::random_instance(g, s);
    ASSERT_TRUE(validate_instance(s, i).empty());
    for (const auto& eq : s.equations) {
      bool agree = true;
      for (const auto& [e, _] : i.set(eq.lhs.start)) {
        ElementId l = e, r = e;
        for (const auto& a : eq.lhs.arrows) l = *i.image(a, l);
        for (const auto& a : eq.rhs.arrows) r = *i.image(a, r);
        agree = agree && l == r;
      }
      EXPECT_EQ(check_equation(s, i, eq).verdict == EquationVerdict::AllHold, agree);
    }
  }
}
