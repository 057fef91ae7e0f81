#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "olog/commands.hpp"
#include "olog/dsl.hpp"
#include "support.hpp"

using namespace olog;
using olog::testing::data_path;

namespace {

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("olog_test_" + name)).string();
}

bool mentions(const RunReport& r, const std::string& needle) {
  return r.comparable().find(needle) != std::string::npos;
}

}  // namespace

TEST(Commands, CheckSchemaOnly) {
  const auto r = cmd_check(data_path("paper.olog"), std::nullopt);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(mentions(r.report, "boxes=23 arrows=42 equations=17 pullbacks=8"));
}

TEST(Commands, CheckBundledInstances) {
  for (const char* name : {"protein.oinst", "social.oinst"}) {
    const auto r = cmd_check(data_path("paper.olog"), data_path(name));
    EXPECT_EQ(r.exit_code, kExitOk) << r.report.comparable();
    EXPECT_TRUE(mentions(r.report, "equations: 17/17 hold"));
    EXPECT_TRUE(mentions(r.report, "pullbacks: 8/8 pass"));
  }
}

TEST(Commands, CheckFindsFlippedEntry) {
  auto inst = parse_instance(read_text_file(data_path("protein.oinst")));
  inst.functions["31"].begin()->second = "hbond2";  // first pair has glue hbond1
  const std::string path = tmp("broken.oinst");
  write_text_file(path, serialize_instance(inst));
  const auto r = cmd_check(data_path("paper.olog"), path);
  EXPECT_EQ(r.exit_code, kExitViolation);
  EXPECT_TRUE(mentions(r.report, "Counterexample at n1"));
  std::remove(path.c_str());
}

TEST(Commands, ParseErrorsExitTwo) {
  const std::string path = tmp("bad.olog");
  write_text_file(path, "schema \"x\" { box }");
  const auto r = cmd_check(path, std::nullopt);
  EXPECT_EQ(r.exit_code, kExitParse);
  EXPECT_TRUE(mentions(r.report, "PARSE_ERROR"));
  EXPECT_EQ(cmd_check("/nonexistent.olog", std::nullopt).exit_code, kExitParse);
  std::remove(path.c_str());
}

TEST(Commands, SimulateReportsFailureAndClass) {
  const std::string out = tmp("protein.oinst");
  auto r = cmd_simulate(protein_defaults(), out);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(mentions(r.report, "failure=100 class=Ductile"));
  EXPECT_EQ(read_text_file(out), read_text_file(data_path("protein.oinst")));
  std::remove(out.c_str());

  auto p = protein_defaults();
  p.lifeline_present = false;
  r = cmd_simulate(p, std::nullopt);
  EXPECT_TRUE(mentions(r.report, "failure=20.6 class=Brittle"));

  p.brick_failure = 30;
  EXPECT_EQ(cmd_simulate(p, std::nullopt).exit_code, kExitParam);
}

TEST(Commands, IsoCases) {
  const auto schema = data_path("paper.olog");
  auto r = cmd_iso(schema, data_path("protein.oinst"), data_path("protein.oinst"));
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(mentions(r.report, "bijection R: cluster1->cluster1"));

  r = cmd_iso(schema, data_path("protein.oinst"), data_path("social.oinst"));
  EXPECT_EQ(r.exit_code, kExitViolation);
  EXPECT_TRUE(mentions(r.report, "cardinality"));
}

TEST(Commands, AnalogyPassesAndFailsAsExpected) {
  auto r = cmd_analogy();
  EXPECT_EQ(r.exit_code, kExitOk) << r.report.comparable();
  EXPECT_TRUE(mentions(r.report, "iso: Found"));

  GlobalOptions strict;
  strict.comparators.kappa = 10;
  EXPECT_EQ(cmd_analogy({}, strict).exit_code, kExitViolation);
  EXPECT_EQ(cmd_analogy({9, 12}).exit_code, kExitViolation);
}

TEST(Commands, ReportsAreDeterministic) {
  const auto a = cmd_analogy();
  const auto b = cmd_analogy();
  EXPECT_EQ(a.report.comparable(), b.report.comparable());
  const std::string rendered = a.report.render();
  EXPECT_EQ(rendered.rfind(a.report.comparable(), 0), 0u);
  EXPECT_NE(rendered.find("---\nelapsed_ms: "), std::string::npos);
}

TEST(Commands, PullbackPrintsPairs) {
  const auto r = cmd_pullback(data_path("paper.olog"), data_path("protein.oinst"), "9", "20");
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(mentions(r.report, "pair: (chain, system)"));
  EXPECT_EQ(cmd_pullback(data_path("paper.olog"), data_path("protein.oinst"), "9", "14").exit_code,
            kExitViolation);
}

TEST(Commands, ExitCodeMapping) {
  EXPECT_EQ(exit_code_for(std::string(codes::kParseError)), kExitParse);
  EXPECT_EQ(exit_code_for(std::string(codes::kParamConstraint)), kExitParam);
  EXPECT_EQ(exit_code_for(std::string(codes::kConjectureFailed)), kExitViolation);
}

TEST(Commands, GoldenAnalogyReport) {
  const auto r = cmd_analogy();
  EXPECT_EQ(r.report.comparable(),
            read_text_file(std::string(OLOG_GOLDEN_DIR) + "/analogy.txt"));
}

TEST(Commands, GoldenCanonicalSchema) {
  const auto s = parse_schema(read_text_file(data_path("paper.olog"))).schema;
  EXPECT_EQ(serialize_schema(s), read_text_file(std::string(OLOG_GOLDEN_DIR) + "/paper.canonical.olog"));
}
