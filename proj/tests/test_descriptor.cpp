#include <gtest/gtest.h>

#include "coxex/descriptor.hpp"
#include "coxex/enumeration.hpp"
#include "coxex/root_core.hpp"

using namespace coxex;

TEST(Descriptor, ParsesAndPrints) {
  EXPECT_EQ(to_string(parse_descriptor("B3")), "B3");
  EXPECT_EQ(to_string(parse_descriptor("I2(5)")), "I2(5)");
  EXPECT_EQ(to_string(parse_product("A2xA1")), "A2xA1");
  EXPECT_EQ(parse_descriptor("E8").rank, 8);
  EXPECT_EQ(make_descriptor("I2", 2, 7).m, 7);
}

TEST(Descriptor, RejectsBadRanks) {
  EXPECT_THROW(parse_descriptor("D3"), std::invalid_argument);
  EXPECT_THROW(parse_descriptor("B1"), std::invalid_argument);
  EXPECT_THROW(parse_descriptor("A0"), std::invalid_argument);
  EXPECT_THROW(parse_descriptor("I2(4)"), std::invalid_argument);
  EXPECT_THROW(parse_descriptor("H5"), std::invalid_argument);
  EXPECT_THROW(parse_descriptor("Q3"), std::invalid_argument);
}

TEST(Descriptor, OrderFormulaMatchesEnumeration) {
  for (const char* name : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "D4", "D5", "I2(5)", "I2(6)", "I2(8)",
                           "H3", "H4", "F4", "E6"}) {
    const auto d = parse_descriptor(name);
    const auto rs = build_root_system(d);
    EXPECT_EQ(enumerate_group(rs).size(), group_order(d)) << name;
  }
  EXPECT_EQ(group_order(parse_descriptor("E7")), 2903040u);
  EXPECT_EQ(group_order(parse_descriptor("E8")), 696729600u);
  EXPECT_EQ(group_order(parse_product("A2xA1")), 12u);
}

namespace {

std::size_t order_of(const RootSystem& rs, const GroupElement& g) {
  GroupElement p = g;
  std::size_t k = 1;
  while (!p.is_identity()) {
    p = compose(p, g);
    ++k;
  }
  return k;
}

}  // namespace

TEST(Descriptor, GeneratorProductsHaveCoxeterOrders) {
  for (const char* name : {"A4", "B4", "D5", "I2(7)", "H3", "H4", "F4", "E6", "E7", "E8"}) {
    const auto d = parse_descriptor(name);
    const auto rs = build_root_system(d);
    const auto m = coxeter_matrix(d);
    for (std::size_t r = 0; r < rs.rank(); ++r)
      for (std::size_t s = 0; s < rs.rank(); ++s)
        EXPECT_EQ(order_of(rs, compose(rs.generator(r), rs.generator(s))), static_cast<std::size_t>(m[r][s]))
            << name << " " << r << "," << s;
  }
}
