#ifndef COXEX_STRUCTURE_HPP
#define COXEX_STRUCTURE_HPP

#include <cstddef>
#include <string>

#include "coxex/descriptor.hpp"
#include "coxex/excess.hpp"
#include "coxex/signed_perm.hpp"

namespace coxex {

/// Support containment for a spartan pair (x, y) of w.
///
/// A, B: supp+(x) and supp+(y) lie inside supp+(w).
/// D: supp+(y) \ supp+(w) = supp+(x) \ supp+(w) has at most one point i,
/// and both x and y negate e_i there.
bool spartan_support_check(const SignedPermutation& x, const SignedPermutation& y, const SignedPermutation& w,
                           Family family);
bool spartan_support_check(const RootSystem& rs, const SpartanPair& pair, const GroupElement& w);

/// Every 2-cycle of x or y stays inside {1..m} or inside {m+1..n}.
bool overlap_check(const SignedPermutation& x, const SignedPermutation& y, std::size_t m);
bool overlap_check(const RootSystem& rs, const SpartanPair& pair, std::size_t m);

/// For w-cycles A = (+a1 .. +ak) and B with A^y = B^-1 (y carrying the points
/// of A onto those of B): max(A) > min(B). Fixed points count as 1-cycles.
bool swapcycle_check(const SignedPermutation& y, const SignedPermutation& w);
bool swapcycle_check(const RootSystem& rs, const SpartanPair& pair, const GroupElement& w);

enum class DnCondition { m_equals_n, has_one_cycle, even_positive_cycles, none };

std::string to_string(DnCondition c);

/// Which hypothesis on the D(m+1..n) factor w2 of w holds, tested in order:
/// m = n, w2 has a 1-cycle, w2 has only even cycles of positive type.
/// Throws std::invalid_argument if w moves a point across the split.
DnCondition dn_condition_check(const SignedPermutation& w, std::size_t m);
DnCondition dn_condition_check(const RootSystem& rs, const GroupElement& w, std::size_t m);

}  // namespace coxex

#endif  // COXEX_STRUCTURE_HPP
