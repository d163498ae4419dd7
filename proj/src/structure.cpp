#include "coxex/structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace coxex {

namespace {

std::set<std::size_t> support_set(const SignedPermutation& u) {
  const auto s = positive_support(u);
  return {s.begin(), s.end()};
}

std::set<std::size_t> minus(const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
  std::set<std::size_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

bool crosses(const SignedPermutation& u, std::size_t m) {
  for (std::size_t a = 1; a <= u.degree(); ++a) {
    const std::size_t b = static_cast<std::size_t>(std::abs(u.image(a)));
    if ((a <= m) != (b <= m)) return true;
  }
  return false;
}

}  // namespace

bool spartan_support_check(const SignedPermutation& x, const SignedPermutation& y, const SignedPermutation& w,
                           Family family) {
  const auto sw = support_set(w);
  const auto extra_x = minus(support_set(x), sw);
  const auto extra_y = minus(support_set(y), sw);
  if (family == Family::A || family == Family::B) return extra_x.empty() && extra_y.empty();
  if (family != Family::D) throw std::invalid_argument("support check needs family A, B or D");
  if (extra_y.size() > 1 || extra_x != extra_y) return false;
  for (std::size_t i : extra_y) {
    const int neg = -static_cast<int>(i);
    if (y.image(i) != neg || x.image(i) != neg) return false;
  }
  return true;
}

bool spartan_support_check(const RootSystem& rs, const SpartanPair& pair, const GroupElement& w) {
  return spartan_support_check(from_root_perm(pair.x, rs), from_root_perm(pair.y, rs), from_root_perm(w, rs),
                               rs.descriptor().family);
}

bool overlap_check(const SignedPermutation& x, const SignedPermutation& y, std::size_t m) {
  return !crosses(x, m) && !crosses(y, m);
}

bool overlap_check(const RootSystem& rs, const SpartanPair& pair, std::size_t m) {
  return overlap_check(from_root_perm(pair.x, rs), from_root_perm(pair.y, rs), m);
}

bool swapcycle_check(const SignedPermutation& y, const SignedPermutation& w) {
  const std::size_t n = w.degree();
  const auto cycles = full_cycle_decomposition(w).cycles;
  std::vector<SignedPermutation> elements;
  elements.reserve(cycles.size());
  for (const auto& c : cycles) elements.push_back(cycle_element(c, n));

  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto& a = cycles[i];
    if (!a.all_positive()) continue;
    std::set<std::size_t> image;
    for (std::size_t p : a.points) image.insert(static_cast<std::size_t>(std::abs(y.image(p))));
    const SignedPermutation conj = conjugate(elements[i], y);
    for (std::size_t j = 0; j < cycles.size(); ++j) {
      if (j == i) continue;
      const auto& b = cycles[j];
      if (b.size() != a.size()) continue;
      if (image != std::set<std::size_t>(b.points.begin(), b.points.end())) continue;
      if (conj != invert(elements[j])) continue;
      const auto max_a = *std::max_element(a.points.begin(), a.points.end());
      const auto min_b = *std::min_element(b.points.begin(), b.points.end());
      if (!(max_a > min_b)) return false;
    }
  }
  return true;
}

bool swapcycle_check(const RootSystem& rs, const SpartanPair& pair, const GroupElement& w) {
  return swapcycle_check(from_root_perm(pair.y, rs), from_root_perm(w, rs));
}

std::string to_string(DnCondition c) {
  switch (c) {
    case DnCondition::m_equals_n: return "m_equals_n";
    case DnCondition::has_one_cycle: return "has_one_cycle";
    case DnCondition::even_positive_cycles: return "even_positive_cycles";
    case DnCondition::none: return "none";
  }
  return "none";
}

DnCondition dn_condition_check(const SignedPermutation& w, std::size_t m) {
  const std::size_t n = w.degree();
  if (m == 0 || m > n) throw std::invalid_argument("split point out of range");
  if (crosses(w, m)) throw std::invalid_argument("element does not lie in the split parabolic");
  if (m == n) return DnCondition::m_equals_n;
  bool all_even_positive = true;
  for (const auto& c : full_cycle_decomposition(w).cycles) {
    if (c.points.front() <= m) continue;
    if (c.size() == 1) return DnCondition::has_one_cycle;
    if (c.size() % 2 != 0 || c.negative_type()) all_even_positive = false;
  }
  return all_even_positive ? DnCondition::even_positive_cycles : DnCondition::none;
}

DnCondition dn_condition_check(const RootSystem& rs, const GroupElement& w, std::size_t m) {
  return dn_condition_check(from_root_perm(w, rs), m);
}

}  // namespace coxex
