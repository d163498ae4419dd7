#include "coxex/parabolic.hpp"

#include <sstream>
#include <stdexcept>

#include "coxex/root_core.hpp"

namespace coxex {

std::vector<std::size_t> ParabolicContext::generators() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < 64; ++r)
    if (contains_generator(r)) out.push_back(r);
  return out;
}

bool ParabolicContext::contains(const RootSystem& rs, const GroupElement& w) const {
  return inversion_set(rs, w).is_subset_of(roots_);
}

std::size_t ParabolicContext::embedded_length(const RootSystem& rs, const GroupElement& w) const {
  return (inversion_set(rs, w) & roots_).count();
}

std::string ParabolicContext::label() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto r : generators()) {
    if (!first) os << ",";
    os << r + 1;
    first = false;
  }
  os << "}";
  return os.str();
}

ParabolicContext parabolic_context(const RootSystem& rs, std::uint64_t mask) {
  if (rs.rank() < 64 && (mask >> rs.rank()) != 0) throw std::out_of_range("parabolic: generator index out of range");
  InversionSet roots(rs.num_positive_roots());
  for (std::size_t i = 0; i < rs.num_positive_roots(); ++i)
    if ((rs.root_support(i) & ~mask) == 0) roots.insert(i);
  return ParabolicContext(mask, std::move(roots));
}

ParabolicContext parabolic_context(const RootSystem& rs, std::span<const std::size_t> generators) {
  std::uint64_t mask = 0;
  for (auto r : generators) {
    if (r >= rs.rank()) throw std::out_of_range("parabolic: generator " + std::to_string(r + 1) + " out of range");
    mask |= std::uint64_t{1} << r;
  }
  return parabolic_context(rs, mask);
}

std::vector<ParabolicContext> all_parabolic_contexts(const RootSystem& rs) {
  if (rs.rank() > 20) throw std::invalid_argument("too many generator subsets");
  std::vector<ParabolicContext> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rs.rank()); ++mask)
    out.push_back(parabolic_context(rs, mask));
  return out;
}

std::vector<ParabolicContext> maximal_parabolic_contexts(const RootSystem& rs) {
  const std::uint64_t full = rs.rank() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rs.rank()) - 1;
  std::vector<ParabolicContext> out;
  for (std::size_t r = 0; r < rs.rank(); ++r) out.push_back(parabolic_context(rs, full & ~(std::uint64_t{1} << r)));
  return out;
}

std::uint64_t support_mask(const RootSystem& rs, const GroupElement& w) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w.image(i).is_negative()) mask |= rs.root_support(i);
  return mask;
}

namespace {

Family abd_family(const RootSystem& rs) {
  const Family f = rs.descriptor().family;
  if (f != Family::A && f != Family::B && f != Family::D)
    throw std::invalid_argument(rs.name() + " has no signed-permutation realization");
  return f;
}

}  // namespace

std::size_t degree(const RootSystem& rs) {
  return abd_family(rs) == Family::A ? rs.rank() + 1 : rs.rank();
}

std::vector<std::size_t> split_points(const RootSystem& rs) {
  const Family f = abd_family(rs);
  const std::size_t n = degree(rs);
  std::vector<std::size_t> out;
  for (std::size_t m = 1; m <= n; ++m) {
    if (f == Family::A && m == n) continue;
    if (f == Family::D && m == n - 1) continue;
    out.push_back(m);
  }
  return out;
}

ParabolicContext split_context(const RootSystem& rs, std::size_t m) {
  const Family f = abd_family(rs);
  const std::size_t n = degree(rs);
  if (m < 1 || m > n || (f == Family::A && m == n) || (f == Family::D && m == n - 1))
    throw std::invalid_argument("no split parabolic at m = " + std::to_string(m) + " in " + rs.name());
  // Generator m-1 (0-based) is (m m+1); for m = n it is the sign generator.
  std::size_t removed = m - 1;
  if (f == Family::D && m == n) removed = n - 1;
  const std::uint64_t full = (std::uint64_t{1} << rs.rank()) - 1;
  return parabolic_context(rs, full & ~(std::uint64_t{1} << removed));
}

std::vector<std::size_t> parse_generator_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  auto number = [&](const std::string& s) -> std::size_t {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size() || v < 1) throw std::invalid_argument("bad generator index '" + s + "'");
    return static_cast<std::size_t>(v - 1);
  };
  while (std::getline(ss, item, ',')) {
    std::string t;
    for (char c : item)
      if (c != ' ') t += c;
    if (t.empty()) continue;
    if (const auto dots = t.find(".."); dots != std::string::npos) {
      const auto lo = number(t.substr(0, dots)), hi = number(t.substr(dots + 2));
      if (hi < lo) throw std::invalid_argument("bad generator range '" + t + "'");
      for (auto r = lo; r <= hi; ++r) out.push_back(r);
    } else {
      out.push_back(number(t));
    }
  }
  return out;
}

}  // namespace coxex
