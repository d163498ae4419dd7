#include "coxex/excess.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "coxex/root_core.hpp"

namespace coxex {

InvolutionSet inverting_involutions(const RootSystem&, const GroupElement& w, std::span<const GroupElement> ambient) {
  const GroupElement w_inv = invert(w);
  InvolutionSet out;
  out.source = InvolutionSource::exhaustive;
  for (const auto& x : ambient)
    if (is_involution(x) && conjugate(w, x) == w_inv) out.elements.push_back(x);
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

StructuredInvolutions inverting_involutions_structured(const SignedPermutation& w, const RootSystem& rs,
                                                       std::size_t guard) {
  const Family family = rs.descriptor().family;
  if (family != Family::A && family != Family::B && family != Family::D)
    throw std::invalid_argument("structured I_w needs an A, B or D system, not " + rs.name());
  (void)to_root_perm(w, rs);  // throws unless w lies in W(rs)

  const SignedPermutation x0 = constructive_inverter(cycle_decomposition(w));
  const auto centralizer = centralizer_elements(w, Ambient::B, guard);

  std::vector<std::pair<GroupElement, SignedPermutation>> found;
  for (const auto& c : centralizer) {
    SignedPermutation x = compose(c, x0);
    if (!is_involution(x)) continue;
    if (family == Family::D && !is_positive(x)) continue;
    if (family == Family::A &&
        std::any_of(x.images().begin(), x.images().end(), [](int v) { return v < 0; }))
      continue;
    found.emplace_back(to_root_perm(x, rs), std::move(x));
  }
  std::sort(found.begin(), found.end());

  StructuredInvolutions out;
  out.coset_size = centralizer.size();
  out.set.source = InvolutionSource::structured_coset;
  for (auto& [g, s] : found) {
    out.set.elements.push_back(std::move(g));
    out.signed_elements.push_back(std::move(s));
  }
  return out;
}

InvolutionSet j_set(const RootSystem& rs, const GroupElement& w, const InvolutionSet& iw) {
  const FixedSpace fixed = fixed_space(rs, w);
  InvolutionSet out;
  out.source = iw.source;
  for (const auto& x : iw.elements)
    if (fixed.fixed_by(rs, x)) out.elements.push_back(x);
  return out;
}

namespace {

template <class Pred>
ExcessResult minimize(const RootSystem& rs, const GroupElement& w, const InvolutionSet& candidates, Pred keep,
                      bool with_witnesses) {
  const std::size_t lw = length(rs, w);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<SpartanPair> pairs;
  for (const auto& x : candidates.elements) {
    if (!keep(x)) continue;
    GroupElement y = compose(x, w);
    const std::size_t total = length(rs, x) + length(rs, y);
    if (total < lw) throw InternalError("factorization shorter than the element");
    const std::size_t defect = total - lw;
    if (defect > best) continue;
    if (defect < best) {
      best = defect;
      pairs.clear();
    }
    if (with_witnesses) pairs.push_back({x, std::move(y), defect});
  }
  if (best == std::numeric_limits<std::size_t>::max())
    throw std::logic_error("no admissible involution factorization (incomplete I_w?)");
  std::sort(pairs.begin(), pairs.end(), [&](const SpartanPair& a, const SpartanPair& b) {
    const auto la = length(rs, a.x), lb = length(rs, b.x);
    return la != lb ? la < lb : a.x < b.x;
  });
  return {best, std::move(pairs)};
}

}  // namespace

ExcessResult excess(const RootSystem& rs, const GroupElement& w, const InvolutionSet& iw, bool with_witnesses) {
  return minimize(rs, w, iw, [](const GroupElement&) { return true; }, with_witnesses);
}

ExcessResult reflection_excess(const RootSystem& rs, const GroupElement& w, const InvolutionSet& jw,
                               bool with_witnesses) {
  return minimize(rs, w, jw, [](const GroupElement&) { return true; }, with_witnesses);
}

ExcessResult parabolic_excess(const RootSystem& rs, const GroupElement& w, const InvolutionSet& iw,
                              const ParabolicContext& ctx, bool with_witnesses) {
  if (!ctx.contains(rs, w)) throw std::invalid_argument("element is not in W_J for J = " + ctx.label());
  return minimize(rs, w, iw, [&](const GroupElement& x) { return ctx.contains(rs, x); }, with_witnesses);
}

ExcessResult parabolic_reflection_excess(const RootSystem& rs, const GroupElement& w, const InvolutionSet& jw,
                                         const ParabolicContext& ctx, bool with_witnesses) {
  return parabolic_excess(rs, w, jw, ctx, with_witnesses);
}

InversionSet n_of_inverting_set(const RootSystem& rs, const GroupElement&, const InvolutionSet& iw) {
  return inversion_set_of_set(rs, iw.elements);
}

}  // namespace coxex
