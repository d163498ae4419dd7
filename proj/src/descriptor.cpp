#include "coxex/descriptor.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace coxex {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Family family_from_name(std::string_view name) {
  if (name == "A") return Family::A;
  if (name == "B") return Family::B;
  if (name == "D") return Family::D;
  if (name == "I2" || name == "I") return Family::I2;
  if (name == "H") return Family::H3;  // resolved by rank below
  if (name == "F") return Family::F4;
  if (name == "E") return Family::E6;
  if (name == "H3") return Family::H3;
  if (name == "H4") return Family::H4;
  if (name == "F4") return Family::F4;
  if (name == "E6") return Family::E6;
  if (name == "E7") return Family::E7;
  if (name == "E8") return Family::E8;
  throw std::invalid_argument("unknown Coxeter family '" + std::string(name) + "'");
}

}  // namespace

void validate(const CoxeterDescriptor& d) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("invalid descriptor " + to_string(d) + ": " + why);
  };
  switch (d.family) {
    case Family::A:
      if (d.rank < 1) fail("type A needs rank >= 1");
      break;
    case Family::B:
      if (d.rank < 2) fail("type B needs rank >= 2");
      break;
    case Family::D:
      if (d.rank < 4) fail("type D needs rank >= 4");
      break;
    case Family::I2:
      if (d.rank != 2) fail("type I2 has rank 2");
      if (d.m < 5) fail("type I2 needs m >= 5");
      break;
    case Family::H3:
      if (d.rank != 3) fail("type H3 has rank 3");
      break;
    case Family::H4:
      if (d.rank != 4) fail("type H4 has rank 4");
      break;
    case Family::F4:
      if (d.rank != 4) fail("type F4 has rank 4");
      break;
    case Family::E6:
      if (d.rank != 6) fail("type E6 has rank 6");
      break;
    case Family::E7:
      if (d.rank != 7) fail("type E7 has rank 7");
      break;
    case Family::E8:
      if (d.rank != 8) fail("type E8 has rank 8");
      break;
  }
  // Generator subsets are 64-bit masks.
  if (d.rank > 64) fail("rank too large");
}

std::vector<std::vector<int>> coxeter_matrix(const CoxeterDescriptor& d) {
  validate(d);
  const auto n = static_cast<std::size_t>(d.rank);
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  auto link = [&](std::size_t i, std::size_t j, int value) {
    m[i][j] = value;
    m[j][i] = value;
  };
  switch (d.family) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, 3);
      break;
    case Family::B:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, 3);
      link(n - 2, n - 1, 4);
      break;
    case Family::D:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, 3);
      link(n - 3, n - 1, 3);
      break;
    case Family::I2:
      link(0, 1, d.m);
      break;
    case Family::H3:
    case Family::H4:
      link(0, 1, 5);
      for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1, 3);
      break;
    case Family::F4:
      link(0, 1, 3);
      link(1, 2, 4);
      link(2, 3, 3);
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8:
      // Bourbaki labelling: 1-3-4-5-6-7-8 with 2 attached to 4.
      link(0, 2, 3);
      link(1, 3, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1, 3);
      break;
  }
  return m;
}

bool is_crystallographic(Family f) {
  return f != Family::I2 && f != Family::H3 && f != Family::H4;
}

std::uint64_t group_order(const CoxeterDescriptor& d) {
  validate(d);
  const int n = d.rank;
  switch (d.family) {
    case Family::A:
      return n + 1 > 20 ? 0 : factorial(n + 1);
    case Family::B:
      return n > 20 ? 0 : (std::uint64_t{1} << n) * factorial(n);
    case Family::D:
      return n > 20 ? 0 : (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::I2:
      return 2 * static_cast<std::uint64_t>(d.m);
    case Family::H3:
      return 120;
    case Family::H4:
      return 14400;
    case Family::F4:
      return 1152;
    case Family::E6:
      return 51840;
    case Family::E7:
      return 2903040;
    case Family::E8:
      return 696729600;
  }
  return 0;
}

std::uint64_t group_order(const CoxeterProduct& p) {
  std::uint64_t total = 1;
  for (const auto& d : p) {
    const std::uint64_t o = group_order(d);
    if (o == 0 || total > std::numeric_limits<std::uint64_t>::max() / o) return 0;
    total *= o;
  }
  return total;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::I2: return "I2";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

std::string to_string(const CoxeterDescriptor& d) {
  switch (d.family) {
    case Family::A:
    case Family::B:
    case Family::D:
      return to_string(d.family) + std::to_string(d.rank);
    case Family::I2:
      return "I2(" + std::to_string(d.m) + ")";
    default:
      return to_string(d.family);
  }
}

std::string to_string(const CoxeterProduct& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += "x";
    out += to_string(p[i]);
  }
  return out;
}

CoxeterDescriptor parse_descriptor(std::string_view text) {
  auto bad = [&] {
    return std::invalid_argument("malformed descriptor '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  if (text.substr(0, 2) == "I2") {
    // I2(m)
    if (text.size() < 5 || text[2] != '(' || text.back() != ')') throw bad();
    CoxeterDescriptor d{Family::I2, 2, std::stoi(std::string(text.substr(3, text.size() - 4)))};
    validate(d);
    return d;
  }
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  const auto digits = text.substr(1);
  if (digits.empty()) throw bad();
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
  return make_descriptor(std::string(1, letter), std::stoi(std::string(digits)));
}

CoxeterProduct parse_product(std::string_view text) {
  CoxeterProduct out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find_first_of("x*", start);
    const auto piece = text.substr(start, pos == std::string_view::npos ? text.npos : pos - start);
    out.push_back(parse_descriptor(piece));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

CoxeterDescriptor make_descriptor(std::string_view type, int rank, int m) {
  std::string upper;
  for (char c : type) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  CoxeterDescriptor d;
  if (upper == "I2" || upper == "I") {
    d = {Family::I2, 2, m};
  } else {
    Family f = family_from_name(upper);
    if (upper == "H") f = rank == 4 ? Family::H4 : Family::H3;
    if (upper == "E") {
      if (rank == 7) f = Family::E7;
      if (rank == 8) f = Family::E8;
    }
    d = {f, rank, 0};
  }
  validate(d);
  return d;
}

}  // namespace coxex
