#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "coxex/enumeration.hpp"
#include "coxex/excess.hpp"
#include "coxex/parabolic.hpp"
#include "coxex/report.hpp"
#include "coxex/root_core.hpp"
#include "oracles.hpp"

using namespace coxex;

namespace {

std::set<std::string> formatted(const RootSystem& rs, const InvolutionSet& s) {
  std::set<std::string> out;
  for (const auto& x : s.elements) out.insert(format_element(rs, x));
  return out;
}

InvolutionSet exhaustive(const RootSystem& rs, const GroupElement& w) {
  const auto g = enumerate_group(rs);
  return inverting_involutions(rs, w, g.elements);
}

std::vector<SignedPermutation> ambient_of(char family, std::size_t n) {
  if (family == 'A') return oracle::all_unsigned(n);
  auto all = oracle::all_signed(n);
  if (family == 'D') std::erase_if(all, [](const auto& g) { return !is_positive(g); });
  return all;
}

}  // namespace

TEST(InvertingInvolutions, ThreeCycleInA4) {
  const auto rs = build_root_system(parse_descriptor("A4"));
  const auto w = parse_element(rs, "(+2 +3 +5)");
  const std::set<std::string> expected{"(+2 +3)",        "(+3 +5)",        "(+2 +5)",
                                       "(+1 +4)(+2 +3)", "(+1 +4)(+3 +5)", "(+1 +4)(+2 +5)"};
  const auto ex = exhaustive(rs, w);
  EXPECT_EQ(formatted(rs, ex), expected);
  EXPECT_EQ(ex.source, InvolutionSource::exhaustive);
  const auto st = inverting_involutions_structured(parse_signed_permutation("(+2 +3 +5)", 5), rs);
  EXPECT_EQ(formatted(rs, st.set), expected);
  EXPECT_EQ(st.set.source, InvolutionSource::structured_coset);
  EXPECT_EQ(formatted(rs, j_set(rs, w, ex)), (std::set<std::string>{"(+2 +3)", "(+3 +5)", "(+2 +5)"}));
}

TEST(InvertingInvolutions, TrivialCases) {
  const auto rs = build_root_system(parse_descriptor("B3"));
  const auto id = exhaustive(rs, rs.identity());
  std::size_t involutions = 0;
  for (const auto& g : enumerate_group(rs).elements) involutions += is_involution(g);
  EXPECT_EQ(id.size(), involutions);
  const auto t = rs.generator(1);
  const auto it = exhaustive(rs, t);
  EXPECT_TRUE(std::find(it.elements.begin(), it.elements.end(), t) != it.elements.end());
  EXPECT_TRUE(std::find(it.elements.begin(), it.elements.end(), rs.identity()) != it.elements.end());
  EXPECT_EQ(excess(rs, t, it).value, 0u);
}

TEST(Excess, InvolutionsHaveZeroExcess) {
  for (const char* name : {"A4", "B3", "D4", "H3", "I2(6)"}) {
    const auto rs = build_root_system(parse_descriptor(name));
    for (const auto& w : enumerate_group(rs).elements)
      if (is_involution(w)) EXPECT_EQ(excess(rs, w, exhaustive(rs, w)).value, 0u) << name;
  }
}

TEST(Excess, ThreeCycleWitness) {
  const auto rs = build_root_system(parse_descriptor("A4"));
  const auto w = parse_element(rs, "(+2 +3 +5)");
  const auto iw = exhaustive(rs, w);
  const auto r = excess(rs, w, iw, true);
  EXPECT_EQ(r.value, 0u);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(format_element(rs, r.witnesses[0].x), "(+3 +5)");
  EXPECT_EQ(format_element(rs, r.witnesses[0].y), "(+2 +3)");
  EXPECT_EQ(r.witnesses[0].defect, 0u);
  EXPECT_EQ(reflection_excess(rs, w, j_set(rs, w, iw)).value, 0u);
}

TEST(Excess, DoubleTranspositionInversionSetFromCoordinates) {
  const auto rs = build_root_system(parse_descriptor("A4"));
  const auto x = parse_element(rs, "(+1 +4)(+3 +5)");
  std::set<std::string> got;
  for (auto i : inversion_set(rs, x).indices()) got.insert(rs.root_label(i));
  const auto want = oracle::inversion_labels(parse_signed_permutation("(+1 +4)(+3 +5)", 5), 'A');
  EXPECT_EQ(got, want);
  EXPECT_EQ(want, (std::set<std::string>{"e1-e2", "e1-e4", "e1-e5", "e2-e4", "e3-e4", "e3-e5"}));
}

TEST(Excess, MatchesPairScanOracle) {
  for (const auto& [name, family] :
       std::vector<std::pair<const char*, char>>{{"A4", 'A'}, {"B3", 'B'}, {"D4", 'D'}, {"B4", 'B'}}) {
    const auto rs = build_root_system(parse_descriptor(name));
    const auto g = enumerate_group(rs);
    const auto ambient = ambient_of(family, degree(rs));
    for (const auto& w : g.elements) {
      const auto sp = from_root_perm(w, rs);
      ASSERT_EQ(excess(rs, w, inverting_involutions(rs, w, g.elements)).value,
                oracle::brute_excess(sp, ambient, family))
          << name << " " << format(sp);
    }
  }
}

TEST(Excess, StructuredMatchesExhaustive) {
  for (const char* name : {"A4", "B4", "D4", "D5"}) {
    const auto rs = build_root_system(parse_descriptor(name));
    const auto g = enumerate_group(rs);
    for (const auto& w : g.elements) {
      const auto ex = inverting_involutions(rs, w, g.elements);
      const auto st = inverting_involutions_structured(from_root_perm(w, rs), rs);
      ASSERT_EQ(st.set.elements, ex.elements) << name << " " << format_element(rs, w);
    }
  }
}

TEST(Excess, AdditiveOverComponents) {
  for (const char* product_name : {"A2xA1", "A1xA1xA1", "B2xA2"}) {
    const auto product = parse_product(product_name);
    const auto rs = build_root_system(product);
    std::vector<RootSystem> parts;
    std::vector<GroupEnumeration> part_groups;
    for (const auto& d : product) {
      parts.push_back(build_root_system(d));
      part_groups.push_back(enumerate_group(parts.back()));
    }
    const auto g = enumerate_group(rs);
    for (const auto& w : g.elements) {
      std::vector<std::vector<std::size_t>> words(parts.size());
      for (auto r : reduced_word(rs, w)) {
        const auto c = rs.component_of_generator(r);
        words[c].push_back(r - rs.generator_offset(c));
      }
      std::size_t e_sum = 0, E_sum = 0;
      for (std::size_t c = 0; c < parts.size(); ++c) {
        const auto wc = element_from_word(parts[c], words[c]);
        const auto iw = inverting_involutions(parts[c], wc, part_groups[c].elements);
        e_sum += excess(parts[c], wc, iw).value;
        E_sum += reflection_excess(parts[c], wc, j_set(parts[c], wc, iw)).value;
      }
      const auto iw = inverting_involutions(rs, w, g.elements);
      EXPECT_EQ(excess(rs, w, iw).value, e_sum) << product_name;
      EXPECT_EQ(reflection_excess(rs, w, j_set(rs, w, iw)).value, E_sum) << product_name;
    }
  }
}

TEST(Excess, ReflectionExcessDominatesExcess) {
  for (const char* name : {"A4", "B4", "D4", "H3", "F4", "I2(7)"}) {
    const auto rs = build_root_system(parse_descriptor(name));
    const auto g = enumerate_group(rs);
    for (const auto& w : g.elements) {
      const auto iw = inverting_involutions(rs, w, g.elements);
      const auto jw = j_set(rs, w, iw);
      ASSERT_FALSE(jw.elements.empty());
      EXPECT_GE(reflection_excess(rs, w, jw).value, excess(rs, w, iw).value) << name;
      EXPECT_EQ(excess(rs, w, iw).value % 2, 0u);
    }
  }
}

TEST(Excess, ParabolicRestriction) {
  const auto rs = build_root_system(parse_descriptor("B3"));
  const auto g = enumerate_group(rs);
  const auto full = parabolic_context(rs, std::uint64_t{7});
  const auto ctx = parabolic_context(rs, std::uint64_t{3});
  for (const auto& w : g.elements) {
    const auto iw = inverting_involutions(rs, w, g.elements);
    EXPECT_EQ(parabolic_excess(rs, w, iw, full).value, excess(rs, w, iw).value);
    if (ctx.contains(rs, w))
      EXPECT_GE(parabolic_excess(rs, w, iw, ctx).value, excess(rs, w, iw).value);
    else
      EXPECT_THROW(parabolic_excess(rs, w, iw, ctx), std::invalid_argument);
  }
}

TEST(Excess, LongCycleInD12) {
  const auto rs = build_root_system(parse_descriptor("D12"));
  const auto sp = parse_signed_permutation("(+2 +4 +6 +8 +10 -12 +11 +9 +7 +5 -3)", 12);
  const auto w = to_root_perm(sp, rs);
  EXPECT_EQ(length(rs, w), 28u);
  const auto st = inverting_involutions_structured(sp, rs);
  EXPECT_EQ(st.coset_size, 44u);
  const auto r = excess(rs, w, st.set, true);
  EXPECT_EQ(r.value, 46u);
  const auto x = to_root_perm(parse_signed_permutation("(-1)(+2 +3)(+4 +5)(+6 +7)(+8 +9)(+10 +11)(-12)", 12), rs);
  const auto y = to_root_perm(parse_signed_permutation("(-1)(-2)(+3 +4)(+5 +6)(+7 +8)(+9 +10)(+11 +12)", 12), rs);
  EXPECT_EQ(compose(x, y), w);
  EXPECT_TRUE(std::any_of(r.witnesses.begin(), r.witnesses.end(),
                          [&](const SpartanPair& p) { return p.x == x && p.y == y; }));
  const auto ctx = parabolic_context(rs, parse_generator_list("2..12"));
  EXPECT_TRUE(ctx.contains(rs, w));
  EXPECT_EQ(parabolic_excess(rs, w, st.set, ctx).value, 60u);
}
