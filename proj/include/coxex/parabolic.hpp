#ifndef COXEX_PARABOLIC_HPP
#define COXEX_PARABOLIC_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coxex/element.hpp"
#include "coxex/root_system.hpp"

namespace coxex {

/// A standard parabolic subgroup W_J and its positive roots Phi_J.
class ParabolicContext {
 public:
  ParabolicContext(std::uint64_t mask, InversionSet roots) : mask_(mask), roots_(std::move(roots)) {}

  std::uint64_t mask() const { return mask_; }
  std::vector<std::size_t> generators() const;
  const InversionSet& roots() const { return roots_; }
  bool contains_generator(std::size_t r) const { return (mask_ >> r) & 1u; }

  /// w in W_J iff N(w) is contained in Phi_J.
  bool contains(const RootSystem& rs, const GroupElement& w) const;

  /// Length measured inside the embedded subsystem: |N(w) & Phi_J|.
  std::size_t embedded_length(const RootSystem& rs, const GroupElement& w) const;

  /// 1-based generator list, e.g. "{1,2,4}".
  std::string label() const;

 private:
  std::uint64_t mask_;
  InversionSet roots_;
};

ParabolicContext parabolic_context(const RootSystem& rs, std::uint64_t mask);
/// J given as 0-based generator indices.
ParabolicContext parabolic_context(const RootSystem& rs, std::span<const std::size_t> generators);

std::vector<ParabolicContext> all_parabolic_contexts(const RootSystem& rs);
std::vector<ParabolicContext> maximal_parabolic_contexts(const RootSystem& rs);

/// Smallest J with w in W_J: the union of the simple-root supports of N(w).
std::uint64_t support_mask(const RootSystem& rs, const GroupElement& w);

/// Number of points the A/B/D realization permutes (rank + 1 for A).
std::size_t degree(const RootSystem& rs);

/// Split points m for which Sym(1..m) x W(m+1..n) is a standard maximal
/// parabolic of an A/B/D system (D skips m = n-1, covered by m = n).
std::vector<std::size_t> split_points(const RootSystem& rs);
ParabolicContext split_context(const RootSystem& rs, std::size_t m);

/// Parses "1,2,5" or "2..12" (1-based) into 0-based indices.
std::vector<std::size_t> parse_generator_list(const std::string& text);

}  // namespace coxex

#endif  // COXEX_PARABOLIC_HPP
