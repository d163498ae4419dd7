#ifndef COXEX_EXCESS_HPP
#define COXEX_EXCESS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "coxex/element.hpp"
#include "coxex/parabolic.hpp"
#include "coxex/root_system.hpp"
#include "coxex/signed_perm.hpp"

namespace coxex {

enum class InvolutionSource { exhaustive, structured_coset };

/// Involutions x with w^x = w^-1 (the identity included when w^2 = 1),
/// sorted by root-permutation order.
struct InvolutionSet {
  std::vector<GroupElement> elements;
  InvolutionSource source = InvolutionSource::exhaustive;

  std::size_t size() const { return elements.size(); }
};

/// w = xy with x^2 = y^2 = 1; defect = l(x) + l(y) - l(w).
struct SpartanPair {
  GroupElement x;
  GroupElement y;
  std::size_t defect = 0;
};

struct ExcessResult {
  std::size_t value = 0;
  /// All minimizing pairs, ordered by (l(x), x).
  std::vector<SpartanPair> witnesses;
};

/// Filters `ambient` for involutions inverting w.
InvolutionSet inverting_involutions(const RootSystem& rs, const GroupElement& w,
                                    std::span<const GroupElement> ambient);

struct StructuredInvolutions {
  InvolutionSet set;
  /// The same involutions as signed permutations, aligned with set.elements.
  std::vector<SignedPermutation> signed_elements;
  /// Size of the inverting coset C(w) x0 in W(B_n) before filtering.
  std::size_t coset_size = 0;
};

/// I_w as the involutions of the coset C_B(w) x0 that lie in W(rs), where x0
/// is a constructive inverter. rs must be of type A, B or D.
StructuredInvolutions inverting_involutions_structured(const SignedPermutation& w, const RootSystem& rs,
                                                       std::size_t guard = kCentralizerGuard);

/// J_w: members of iw fixing V_1(w) pointwise.
InvolutionSet j_set(const RootSystem& rs, const GroupElement& w, const InvolutionSet& iw);

/// e(w) as the minimum of l(x) + l(xw) - l(w) over x in iw.
ExcessResult excess(const RootSystem& rs, const GroupElement& w, const InvolutionSet& iw,
                    bool with_witnesses = false);
/// E(w): the same minimum over jw = j_set(w, I_w).
ExcessResult reflection_excess(const RootSystem& rs, const GroupElement& w, const InvolutionSet& jw,
                               bool with_witnesses = false);

/// e_J(w): excess with factorizations restricted to W_J.
/// Throws std::invalid_argument when w is not in W_J.
ExcessResult parabolic_excess(const RootSystem& rs, const GroupElement& w, const InvolutionSet& iw,
                              const ParabolicContext& ctx, bool with_witnesses = false);
ExcessResult parabolic_reflection_excess(const RootSystem& rs, const GroupElement& w, const InvolutionSet& jw,
                                         const ParabolicContext& ctx, bool with_witnesses = false);

/// N(I_w).
InversionSet n_of_inverting_set(const RootSystem& rs, const GroupElement& w, const InvolutionSet& iw);

}  // namespace coxex

#endif  // COXEX_EXCESS_HPP
