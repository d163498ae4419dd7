#ifndef COXEX_ENUMERATION_HPP
#define COXEX_ENUMERATION_HPP

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "coxex/element.hpp"
#include "coxex/root_system.hpp"

namespace coxex {

/// Raised when an exhaustive computation would exceed the group-size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultGuard = 10'000'000;

/// kDefaultGuard unless the COXEX_GUARD environment variable is set.
std::uint64_t default_guard();

/// Every element of W exactly once, in breadth-first order from the identity
/// under right multiplication by generators, with one reduced word each.
struct GroupEnumeration {
  std::vector<GroupElement> elements;
  std::vector<std::vector<std::size_t>> words;
  std::unordered_map<GroupElement, std::size_t> index;

  std::size_t size() const { return elements.size(); }
  /// Throws std::out_of_range for elements of another group.
  std::size_t index_of(const GroupElement& w) const;
};

GroupEnumeration enumerate_group(const RootSystem& rs, std::uint64_t guard = default_guard());

/// Throws GuardExceeded if |W| > guard.
void check_guard(const RootSystem& rs, std::uint64_t guard);

}  // namespace coxex

#endif  // COXEX_ENUMERATION_HPP
