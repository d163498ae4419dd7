#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "coxex/enumeration.hpp"
#include "coxex/parabolic.hpp"
#include "coxex/root_core.hpp"
#include "oracles.hpp"

using namespace coxex;

namespace {

SignedPermutation sp(const char* text, std::size_t n) { return parse_signed_permutation(text, n); }

const char* kD12 = "(+2 +4 +6 +8 +10 -12 +11 +9 +7 +5 -3)";

}  // namespace

TEST(SignedPerm, ParseAndFormat) {
  const auto w = sp("(+2 +3 +5)", 5);
  EXPECT_EQ(w.images(), (std::vector<int>{1, 3, 5, 4, 2}));
  EXPECT_EQ(format(w), "(+2 +3 +5)");
  EXPECT_EQ(format(sp("(-1)(-2)", 2)), "(-1)(-2)");
  EXPECT_EQ(format(sp("(+1 -2)", 3)), "(+1 -2)");
  EXPECT_EQ(sp("(+1 -2)", 3).images(), (std::vector<int>{2, -1, 3}));
  EXPECT_EQ(format(SignedPermutation(4)), "()");
  EXPECT_TRUE(sp("()", 4).is_identity());
  EXPECT_EQ(format(sp(kD12, 12)), kD12);
}

TEST(SignedPerm, ParseRejectsMalformedInput) {
  EXPECT_THROW(sp("(+1 +1)", 3), ParseError);
  EXPECT_THROW(sp("(+1 +2)(+2 +3)", 3), ParseError);
  EXPECT_THROW(sp("(+1 +4)", 3), ParseError);
  EXPECT_THROW(sp("(+1 +2", 3), ParseError);
  EXPECT_THROW(sp("(+1 x)", 3), ParseError);
  EXPECT_THROW(sp("(0)", 3), ParseError);
}

TEST(SignedPerm, GroupOperations) {
  const auto a = sp("(+2 +3)", 5), b = sp("(+2 +5)", 5);
  EXPECT_EQ(compose(a, b), sp("(+2 +3 +5)", 5));
  const auto w = sp(kD12, 12);
  EXPECT_TRUE(compose(w, invert(w)).is_identity());
  EXPECT_TRUE(is_involution(sp("(-1)(+2 +3)", 3)));
  EXPECT_FALSE(is_involution(sp("(+1 -2)", 2)));
  const auto x = sp("(-1)(+2 +3)", 3);
  EXPECT_EQ(conjugate(sp("(+1 +2)", 3), x), sp("(-1 -3)", 3));
}

TEST(SignedPerm, PositivityAndSupport) {
  EXPECT_TRUE(is_positive(sp("(-1)(-2)", 3)));
  EXPECT_FALSE(is_positive(sp("(-1)", 3)));
  EXPECT_TRUE(is_positive(sp(kD12, 12)));
  EXPECT_FALSE(in_D(sp("(+1 -2)", 2)));
  const auto support = positive_support(sp(kD12, 12));
  std::vector<std::size_t> expected(11);
  for (std::size_t i = 0; i < 11; ++i) expected[i] = i + 2;
  EXPECT_EQ(support, expected);
  EXPECT_EQ(positive_support(sp("(-3)", 4)), (std::vector<std::size_t>{3}));
}

TEST(SignedPerm, CycleDecompositions) {
  const auto w = sp("(+1 -2 +3)(-4)(+6 +7)", 8);
  const auto cd = cycle_decomposition(w);
  ASSERT_EQ(cd.cycles.size(), 3u);
  EXPECT_EQ(cd.cycles[0].points, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(cd.cycles[0].signs, (std::vector<int>{1, -1, 1}));
  EXPECT_TRUE(cd.cycles[0].negative_type());
  EXPECT_TRUE(cd.cycles[1].negative_type());
  EXPECT_TRUE(cd.cycles[2].all_positive());
  EXPECT_EQ(from_cycles(cd), w);
  const auto full = full_cycle_decomposition(w);
  EXPECT_EQ(full.cycles.size(), 5u);
  EXPECT_EQ(from_cycles(full), w);
  EXPECT_EQ(cycle_element(cd.cycles[2], 8), sp("(+6 +7)", 8));
  for (const auto& g : oracle::all_signed(4)) EXPECT_EQ(from_cycles(full_cycle_decomposition(g)), g);
}

TEST(SignedPerm, RootPermutationExamples) {
  const auto a4 = build_root_system(parse_descriptor("A4"));
  const auto w = to_root_perm(sp("(+2 +3 +5)", 5), a4);
  EXPECT_EQ(w.act(SignedRoot::positive(*a4.find_label("e2-e5"))), SignedRoot::negative(*a4.find_label("e2-e3")));
  EXPECT_THROW(to_root_perm(sp("(-1)", 5), a4), std::invalid_argument);
  EXPECT_THROW(to_root_perm(sp("(+1 +2)", 4), a4), std::invalid_argument);
  const auto d4 = build_root_system(parse_descriptor("D4"));
  EXPECT_THROW(to_root_perm(sp("(-1)", 4), d4), std::invalid_argument);
  EXPECT_NO_THROW(to_root_perm(sp("(-1)(-4)", 4), d4));
  const auto h3 = build_root_system(parse_descriptor("H3"));
  EXPECT_THROW(to_root_perm(sp("(-1)", 3), h3), std::invalid_argument);
  const auto b3 = build_root_system(parse_descriptor("B3"));
  for (std::size_t r = 0; r < 2; ++r) {
    std::vector<int> images{1, 2, 3};
    std::swap(images[r], images[r + 1]);
    EXPECT_EQ(to_root_perm(SignedPermutation::from_images(images), b3), b3.generator(r));
  }
  EXPECT_EQ(to_root_perm(sp("(-3)", 3), b3), b3.generator(2));
}

TEST(SignedPerm, RootPermutationIsHomomorphism) {
  for (const char* name : {"B3", "B4", "D4", "A3"}) {
    const auto rs = build_root_system(parse_descriptor(name));
    const auto elements = enumerate_group(rs).elements;
    std::set<SignedPermutation> seen;
    for (const auto& w : elements) {
      const auto s = from_root_perm(w, rs);
      EXPECT_EQ(to_root_perm(s, rs), w);
      seen.insert(s);
    }
    EXPECT_EQ(seen.size(), elements.size());
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
    for (int i = 0; i < 500; ++i) {
      const auto& a = elements[pick(rng)];
      const auto& b = elements[pick(rng)];
      EXPECT_EQ(from_root_perm(compose(a, b), rs), compose(from_root_perm(a, rs), from_root_perm(b, rs)));
    }
  }
}

TEST(SignedPerm, SignTypeIsMultiplicative) {
  const auto all = oracle::all_signed(3);
  for (const auto& a : all)
    for (const auto& b : all) EXPECT_EQ(is_positive(compose(a, b)), is_positive(a) == is_positive(b));
}

TEST(Centralizer, GeneratorsCommute) {
  for (const char* text : {"(+1 +2 +3)(-4)", "(+1 -2)(+3 -4)", kD12, "(+1 +2)(+3 +4)(-5)(-6)", "(+1 +2 +3 +4)"}) {
    const std::size_t n = std::string(text) == kD12 ? 12 : 6;
    const auto w = sp(text, n);
    for (auto ambient : {Ambient::B, Ambient::D})
      for (const auto& g : centralizer_generators(w, ambient)) {
        EXPECT_EQ(compose(g, w), compose(w, g)) << text;
        if (ambient == Ambient::D) EXPECT_TRUE(is_positive(g));
      }
  }
}

TEST(Centralizer, ClosureMatchesBruteForce) {
  for (std::size_t n : {3u, 4u}) {
    const auto all = oracle::all_signed(n);
    std::vector<SignedPermutation> positive;
    std::copy_if(all.begin(), all.end(), std::back_inserter(positive), [](const auto& g) { return is_positive(g); });
    for (const auto& w : all) {
      auto got = centralizer_elements(w, Ambient::B);
      std::sort(got.begin(), got.end());
      auto want = oracle::brute_centralizer(w, all);
      std::sort(want.begin(), want.end());
      ASSERT_EQ(got, want) << format(w);
      if (!is_positive(w)) continue;
      auto got_d = centralizer_elements(w, Ambient::D);
      std::sort(got_d.begin(), got_d.end());
      auto want_d = oracle::brute_centralizer(w, positive);
      std::sort(want_d.begin(), want_d.end());
      ASSERT_EQ(got_d, want_d) << format(w);
    }
  }
}

TEST(Centralizer, KnownOrders) {
  for (std::size_t n = 2; n <= 7; ++n) {
    std::string text = "(";
    for (std::size_t i = 1; i <= n; ++i) text += (i > 1 ? " +" : "+") + std::to_string(i);
    text += ")";
    EXPECT_EQ(centralizer_elements(sp(text.c_str(), n), Ambient::B).size(), 2 * n) << text;
  }
  EXPECT_EQ(centralizer_elements(sp(kD12, 12), Ambient::B).size(), 44u);
  EXPECT_EQ(centralizer_elements(SignedPermutation(3), Ambient::B).size(), 48u);
  EXPECT_THROW(centralizer_elements(SignedPermutation(8), Ambient::B, 1000), GuardExceeded);
}

TEST(Inverter, InvertsEveryElementOfB4) {
  for (const auto& w : oracle::all_signed(4)) {
    const auto x = constructive_inverter(cycle_decomposition(w));
    ASSERT_TRUE(is_involution(x)) << format(w);
    ASSERT_EQ(conjugate(w, x), invert(w)) << format(w);
  }
}

TEST(Inverter, InvertsRandomElementsOfB8) {
  std::mt19937_64 rng(99);
  std::vector<int> images(8);
  for (int trial = 0; trial < 1000; ++trial) {
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    for (auto& v : images)
      if (rng() & 1u) v = -v;
    const auto w = SignedPermutation::from_images(images);
    const auto x = constructive_inverter(cycle_decomposition(w));
    ASSERT_TRUE(is_involution(x)) << format(w);
    ASSERT_EQ(conjugate(w, x), invert(w)) << format(w);
  }
}

TEST(Inverter, ThreeCycleExample) {
  const auto w = sp("(+2 +3 +5)", 5);
  const auto x = constructive_inverter(cycle_decomposition(w));
  EXPECT_EQ(x, sp("(+3 +5)", 5));
}
