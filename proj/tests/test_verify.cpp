#include <gtest/gtest.h>

#include "coxex/verify.hpp"

using namespace coxex;

namespace {

SuiteConfig config_for(const char* groups, std::vector<std::string> theorems = {}) {
  SuiteConfig c;
  c.groups.push_back(parse_product(groups));
  c.theorems = std::move(theorems);
  return c;
}

const TheoremTally* tally(const SuiteResult& r, const std::string& name) {
  for (const auto& t : r.tallies)
    if (t.theorem == name) return &t;
  return nullptr;
}

}  // namespace

TEST(Verify, SmallGroupHasNoFailures) {
  const auto r = run_suite(config_for("B3"));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.tallies.size(), theorem_registry().size());
  const auto* t = tally(r, "structured-iw");
  ASSERT_NE(t, nullptr);
  EXPECT_EQ(t->checked, 48u);
}

TEST(Verify, WorkerCountDoesNotChangeResults) {
  auto one = config_for("D4");
  auto three = one;
  three.workers = 3;
  EXPECT_EQ(to_json(run_suite(one)).dump(), to_json(run_suite(three)).dump());
}

TEST(Verify, ElementParabolicPairCount) {
  const auto r = run_suite(config_for("A4", {"parabolic-excess"}));
  ASSERT_EQ(r.tallies.size(), 1u);
  EXPECT_EQ(r.tallies[0].checked, 231u);
  EXPECT_EQ(r.tallies[0].failures, 0u);
}

TEST(Verify, EvenSignedParabolicsAreObservedOffTheSplits) {
  const auto r = run_suite(config_for("D4", {"parabolic-excess"}));
  ASSERT_EQ(r.tallies.size(), 1u);
  EXPECT_GT(r.tallies[0].observed, 0u);
  EXPECT_GT(r.tallies[0].checked, 0u);
  EXPECT_EQ(r.tallies[0].failures, 0u);
}

TEST(Verify, MaximalAndExplicitSelections) {
  auto c = config_for("F4", {"parabolic-excess"});
  c.parabolics = ParabolicSelection::maximal;
  EXPECT_TRUE(run_suite(c).ok());
  auto e = config_for("B4", {"parabolic-reflection-excess"});
  e.parabolics = ParabolicSelection::explicit_set;
  e.explicit_J = {0, 1, 2};
  const auto r = run_suite(e);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.tallies[0].checked, 24u);
}

TEST(Verify, GuardAndNames) {
  EXPECT_THROW(run_suite(config_for("E7")), GuardExceeded);
  EXPECT_THROW(select_theorems({"no-such-theorem"}), std::invalid_argument);
  EXPECT_EQ(select_theorems({"all"}).size(), theorem_registry().size());
  EXPECT_EQ(find_theorem("excess-parity").name, "excess-parity");
  const auto csv = to_csv(run_suite(config_for("I2(5)", {"excess-parity"})));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "theorem,descriptor,applicable,checked,failures,observed,gaps");
}
