#include <gtest/gtest.h>

#include "coxex/parabolic.hpp"
#include "coxex/repro.hpp"
#include "coxex/report.hpp"
#include "coxex/root_core.hpp"

using namespace coxex;

TEST(ParseElement, WordsAndCycles) {
  const auto a4 = build_root_system(parse_descriptor("A4"));
  EXPECT_EQ(parse_element(a4, "[2 3 2]"), parse_element(a4, "(+2 +4)"));
  EXPECT_EQ(parse_element(a4, "[2,3,2]"), parse_element(a4, "[2.3.2]"));
  EXPECT_TRUE(parse_element(a4, "[]").is_identity());
  EXPECT_THROW(parse_element(a4, "[5]"), std::invalid_argument);
  EXPECT_THROW(parse_element(a4, "(-1)"), std::invalid_argument);
  const auto h3 = build_root_system(parse_descriptor("H3"));
  EXPECT_EQ(parse_element(h3, "[1 2]"), compose(h3.generator(0), h3.generator(1)));
  EXPECT_THROW(parse_element(h3, "(+1 +2)"), std::invalid_argument);
}

TEST(FormatElement, RoundTrips) {
  const auto b3 = build_root_system(parse_descriptor("B3"));
  EXPECT_EQ(format_element(b3, parse_element(b3, "(+1 -2)(-3)")), "(+1 -2)(-3)");
  EXPECT_EQ(format_element(b3, b3.identity()), "()");
  const auto h3 = build_root_system(parse_descriptor("H3"));
  const auto w = parse_element(h3, "[1 2 3 2]");
  EXPECT_EQ(parse_element(h3, format_element(h3, w)), w);
  EXPECT_EQ(format_element(h3, h3.identity()), "[]");
}

TEST(ExcessReport, JsonAndCsv) {
  const auto rs = build_root_system(parse_descriptor("A4"));
  const auto w = parse_element(rs, "(+2 +3 +5)");
  const std::vector<ParabolicContext> ctx{parabolic_context(rs, parse_generator_list("2..4"))};
  const auto report = compute_excess_report(rs, w, ctx, 1'000'000);
  const auto doc = to_json(report);
  EXPECT_EQ(doc.at("descriptor"), "A4");
  EXPECT_EQ(doc.at("element"), "(+2 +3 +5)");
  EXPECT_EQ(doc.at("length"), 4);
  EXPECT_EQ(doc.at("reflection_length"), 2);
  EXPECT_EQ(doc.at("excess"), 0);
  EXPECT_EQ(doc.at("reflection_excess"), 0);
  ASSERT_EQ(doc.at("parabolic").size(), 1u);
  EXPECT_EQ(doc.at("parabolic")[0].at("J"), "{2,3,4}");
  EXPECT_EQ(doc.at("parabolic")[0].at("e_J"), 0);
  EXPECT_EQ(doc.at("witnesses")[0].at("x"), "(+3 +5)");
  EXPECT_EQ(csv_header(), "descriptor,element,length,reflection_length,excess,reflection_excess,J,e_J,E_J");
  const auto rows = csv_rows(report);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0], "A4,(+2 +3 +5),4,2,0,0,\"{2,3,4}\",0,0");
}

TEST(ExcessReport, RealFamilies) {
  const auto rs = build_root_system(parse_descriptor("I2(5)"));
  EXPECT_FALSE(has_structured_path(rs));
  const auto w = compose(rs.generator(0), rs.generator(1));
  const auto report = compute_excess_report(rs, w, {}, 1'000'000);
  EXPECT_EQ(report.length, 2u);
  EXPECT_EQ(report.reflection_length, 2u);
  EXPECT_EQ(report.excess, 0u);
  EXPECT_EQ(csv_rows(report).size(), 1u);
}

TEST(Repro, KnownExamples) {
  const auto d12 = run_repro("d12");
  for (const auto& c : d12.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.observed << " vs " << c.expected;
  EXPECT_TRUE(d12.ok());
  EXPECT_TRUE(run_repro("sym7-gap").ok());
  EXPECT_THROW(run_repro("nope"), std::invalid_argument);
  EXPECT_EQ(repro_ids().size(), 3u);
}
