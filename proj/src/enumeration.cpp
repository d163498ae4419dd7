#include "coxex/enumeration.hpp"

#include <cstdlib>
#include <string>

namespace coxex {

std::uint64_t default_guard() {
  if (const char* env = std::getenv("COXEX_GUARD")) {
    try {
      const auto v = std::stoull(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultGuard;
}

std::size_t GroupEnumeration::index_of(const GroupElement& w) const {
  const auto it = index.find(w);
  if (it == index.end()) throw std::out_of_range("element not in enumerated group");
  return it->second;
}

void check_guard(const RootSystem& rs, std::uint64_t guard) {
  const std::uint64_t order = group_order(rs.components());
  if (order == 0 || order > guard)
    throw GuardExceeded("|W(" + rs.name() + ")| = " + (order ? std::to_string(order) : std::string("huge")) +
                        " exceeds the guard of " + std::to_string(guard));
}

GroupEnumeration enumerate_group(const RootSystem& rs, std::uint64_t guard) {
  check_guard(rs, guard);
  GroupEnumeration out;
  out.elements.push_back(rs.identity());
  out.words.emplace_back();
  out.index.emplace(out.elements.front(), 0);
  for (std::size_t k = 0; k < out.elements.size(); ++k) {
    for (std::size_t r = 0; r < rs.rank(); ++r) {
      GroupElement next = compose(out.elements[k], rs.generator(r));
      if (out.index.contains(next)) continue;
      if (out.elements.size() >= guard) throw GuardExceeded("enumeration exceeded the guard");
      out.index.emplace(next, out.elements.size());
      auto word = out.words[k];
      word.push_back(r);
      out.elements.push_back(std::move(next));
      out.words.push_back(std::move(word));
    }
  }
  return out;
}

}  // namespace coxex
