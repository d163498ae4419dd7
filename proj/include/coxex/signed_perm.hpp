#ifndef COXEX_SIGNED_PERM_HPP
#define COXEX_SIGNED_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coxex/element.hpp"
#include "coxex/root_system.hpp"

namespace coxex {

/// Malformed cycle notation.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element of W(B_n): a permutation of {1..n} with a sign per point.
///
/// image(a) = +-b means e_a . w = +-e_b. Elements act on the right.
class SignedPermutation {
 public:
  /// Identity of degree n.
  explicit SignedPermutation(std::size_t n = 0);

  /// From 1-based signed images; throws std::invalid_argument unless bijective.
  static SignedPermutation from_images(std::vector<int> images);

  std::size_t degree() const { return images_.size(); }
  int image(std::size_t point) const { return images_[point - 1]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  auto operator<=>(const SignedPermutation&) const = default;

 private:
  std::vector<int> images_;
};

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);
SignedPermutation invert(const SignedPermutation& a);
bool is_involution(const SignedPermutation& a);
SignedPermutation conjugate(const SignedPermutation& w, const SignedPermutation& x);

/// One signed cycle (e1 a1 ... em am): e_{a_i} . w = e_i e_{a_{i+1}}.
struct SignedCycle {
  std::vector<std::size_t> points;
  std::vector<int> signs;

  std::size_t size() const { return points.size(); }
  /// Negative sign type: an odd number of minus signs.
  bool negative_type() const;
  bool all_positive() const;
};

/// Disjoint cycles, each starting at its minimal point, sorted by that point.
/// Positive fixed points are implicit.
struct CycleDecomposition {
  std::size_t degree = 0;
  std::vector<SignedCycle> cycles;
};

/// Grammar: element := cycle+ ; cycle := "(" signed-point (" " signed-point)* ")" ;
/// signed-point := ("+"|"-") integer. "()" denotes the identity.
SignedPermutation parse_signed_permutation(std::string_view text, std::size_t degree);
std::string format(const SignedPermutation& sp);

bool is_positive(const SignedPermutation& sp);
inline bool in_D(const SignedPermutation& sp) { return is_positive(sp); }

/// Points a with e_a . u != e_a, ascending.
std::vector<std::size_t> positive_support(const SignedPermutation& sp);

CycleDecomposition cycle_decomposition(const SignedPermutation& sp);
/// Like cycle_decomposition but also lists positive fixed points as 1-cycles.
CycleDecomposition full_cycle_decomposition(const SignedPermutation& sp);
SignedPermutation from_cycles(const CycleDecomposition& cd);
/// The element acting as `cycle` on its points and trivially elsewhere.
SignedPermutation cycle_element(const SignedCycle& cycle, std::size_t degree);

/// Root-permutation form in an A/B/D root system of matching degree.
GroupElement to_root_perm(const SignedPermutation& sp, const RootSystem& rs);
SignedPermutation from_root_perm(const GroupElement& w, const RootSystem& rs);

enum class Ambient { B, D };

/// Generators of the centralizer of sp in W(B_n) or W(D_n).
std::vector<SignedPermutation> centralizer_generators(const SignedPermutation& sp, Ambient ambient);

inline constexpr std::size_t kCentralizerGuard = 1'000'000;

/// All centralizer elements by closure; throws GuardExceeded past `guard`.
std::vector<SignedPermutation> centralizer_elements(const SignedPermutation& sp, Ambient ambient,
                                                    std::size_t guard = kCentralizerGuard);

/// An involution x with sp^x = sp^-1, built cycle by cycle.
SignedPermutation constructive_inverter(const CycleDecomposition& cd);

}  // namespace coxex

template <>
struct std::hash<coxex::SignedPermutation> {
  std::size_t operator()(const coxex::SignedPermutation& sp) const noexcept;
};

#endif  // COXEX_SIGNED_PERM_HPP
