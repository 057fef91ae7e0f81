#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "olog/dsl.hpp"
#include "support.hpp"

using namespace olog;
using olog::testing::Gen;

namespace {

constexpr const char* kSmall = R"(# tiny schema
schema "tiny" {
  box A "a thing"
  box B "another \"quoted\" thing" [note]
  arrow 1 : A -> B "has"
  arrow 2 : A -> B "also has" [conjecture]
  eq A..B : [1] = [2] "both agree"
}
)";

SourceSpan span_of(std::string_view text) {
  try {
    parse_schema(text, "t.olog");
  } catch (const ParseError& e) {
    return e.span();
  }
  ADD_FAILURE() << "no parse error";
  return {};
}

}  // namespace

TEST(Dsl, ParsesDeclarations) {
  const auto p = parse_schema(kSmall, "t.olog");
  EXPECT_TRUE(p.diagnostics.empty());
  EXPECT_EQ(p.schema.name, "tiny");
  ASSERT_EQ(p.schema.boxes.size(), 2u);
  EXPECT_EQ(p.schema.boxes[1].label, "another \"quoted\" thing");
  EXPECT_EQ(p.schema.boxes[1].tags, std::vector<std::string>{"note"});
  EXPECT_TRUE(p.schema.find_arrow("2")->has_tag("conjecture"));
  ASSERT_EQ(p.schema.equations.size(), 1u);
  EXPECT_EQ(p.schema.equations[0].note, "both agree");
}

TEST(Dsl, ErrorSpansPointAtTheProblem) {
  auto s = span_of("schema \"x\" {\n  box A \"a\"\n  arrow 1 A -> A \"f\"\n}");
  EXPECT_EQ(s.line, 3);
  EXPECT_EQ(s.column, 11);
  EXPECT_EQ(s.file, "t.olog");

  s = span_of("schema \"x\" {\n  box A \"unterminated\n}");
  EXPECT_EQ(s.line, 2);
  EXPECT_EQ(s.column, 9);

  // end of input is clamped to the last character
  s = span_of("schema \"x\" {\n  box A \"a\"");
  EXPECT_EQ(s.line, 2);
  EXPECT_EQ(s.column, 11);

  s = span_of("schema \"x\" { wibble }");
  EXPECT_EQ(s.line, 1);
  EXPECT_EQ(s.column, 14);
}

TEST(Dsl, DuplicatesAreParseErrorsWithTheirOwnCode) {
  try {
    parse_schema("schema \"x\" { box A \"a\" box A \"b\" }", "d");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), codes::kDuplicateId);
    EXPECT_EQ(e.span().column, 24);  // start of the second declaration
  }
  try {
    parse_instance("instance \"i\" of \"x\" { set A { a, a } }", "d");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), codes::kDuplicateId);
  }
}

TEST(Dsl, DeclaredEndpointMismatchIsADiagnostic) {
  const auto p = parse_schema(
      "schema \"x\" { box A \"a\" box B \"b\" arrow f : A -> B \"f\" eq A..A : [f] = [f] }");
  ASSERT_FALSE(p.diagnostics.empty());
  EXPECT_EQ(p.diagnostics[0].code, codes::kEqEndpointMismatch);
}

TEST(Dsl, MissingSquaresAreAddedImplicitly) {
  const auto p = parse_schema(R"(schema "pb" {
    box P "p" box X "x" box Y "y" box Z "z"
    arrow f : X -> Z "f" arrow g : Y -> Z "g"
    arrow p1 : P -> X "p1" arrow p2 : P -> Y "p2"
    pullback P = X * [Z] Y proj (p1, p2) legs (f, g)
  })");
  EXPECT_EQ(p.implicit_squares, 1u);
  EXPECT_TRUE(p.diagnostics.empty());
  EXPECT_EQ(p.schema.equations.size(), 1u);
}

TEST(Dsl, InstancePayloads) {
  const auto i = parse_instance(R"(instance "i" of "s" {
    set V { v1 = real 1.5, v2 = real inf, v3 = real -inf }
    set Q { q1 = pair (1, 2.25) }
    set H { h = graph {a->b, b->c, lonely} }
    set T { t = text "hi \"there\"" }
    set E {}
    fn f { v1 -> q1 }
  })");
  EXPECT_EQ(std::get<double>(i.set("V").at("v1")), 1.5);
  EXPECT_TRUE(std::isinf(std::get<double>(i.set("V").at("v2"))));
  EXPECT_LT(std::get<double>(i.set("V").at("v3")), 0);
  EXPECT_EQ(std::get<RealPair>(i.set("Q").at("q1")), (RealPair{1, 2.25}));
  const auto& g = std::get<Graph>(i.set("H").at("h"));
  EXPECT_EQ(g.edges.size(), 2u);
  EXPECT_EQ(g.nodes.size(), 4u);
  EXPECT_EQ(std::get<Text>(i.set("T").at("t")).value, "hi \"there\"");
  EXPECT_TRUE(i.sets.count("E"));
  EXPECT_EQ(*i.image("f", "v1"), "q1");
}

TEST(Dsl, FormatRealRoundTrips) {
  Gen g(8);
  for (int k = 0; k < 2000; ++k) {
    const double v = std::ldexp(g.real(-1, 1), g.range(-40, 40));
    const std::string s = format_real(v);
    const auto i = parse_instance("instance \"i\" of \"s\" { set V { v = real " + s + " } }");
    EXPECT_EQ(std::get<double>(i.set("V").at("v")), v) << s;
  }
  EXPECT_EQ(format_real(20.6), "20.6");
  EXPECT_EQ(format_real(100), "100");
  EXPECT_EQ(format_real(std::numeric_limits<double>::infinity()), "inf");
}

TEST(Dsl, SchemaRoundTripIsIdentityOnCanonicalText) {
  const std::string text = read_text_file(olog::testing::data_path("paper.olog"));
  const auto parsed = parse_schema(text);
  const std::string canon = serialize_schema(parsed.schema);
  const auto again = parse_schema(canon);
  EXPECT_EQ(again.schema, parsed.schema);
  EXPECT_EQ(serialize_schema(again.schema), canon);
}

TEST(Dsl, RandomSchemasAndInstancesRoundTrip) {
  Gen g(31);
  for (int trial = 0; trial < 200; ++trial) {
    auto s = olog::testing::random_schema(g);
    s.boxes[0].tags = {"t1"};
    const std::string st = serialize_schema(s);
    EXPECT_EQ(serialize_schema(parse_schema(st).schema), st);

    auto inst = olog::testing::random_instance(g, s);
    // give one box real payloads
    for (auto& [e, p] : inst.sets[s.boxes[0].id]) p = g.real(-5, 5);
    const std::string it = serialize_instance(inst);
    const auto back = parse_instance(it);
    EXPECT_EQ(serialize_instance(back), it);
    EXPECT_EQ(back.sets, inst.sets);
  }
}

TEST(Dsl, ReadingMissingFileIsIoError) {
  try {
    read_text_file("/nonexistent/file.olog");
    FAIL();
  } catch (const OlogError& e) {
    EXPECT_EQ(e.code(), codes::kIoError);
  }
}
