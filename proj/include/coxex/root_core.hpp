#ifndef COXEX_ROOT_CORE_HPP
#define COXEX_ROOT_CORE_HPP

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "coxex/element.hpp"
#include "coxex/root_system.hpp"

namespace coxex {

inline SignedRoot act(const RootSystem&, SignedRoot root, const GroupElement& w) { return w.act(root); }

/// N(w): positive roots sent negative by w.
InversionSet inversion_set(const RootSystem& rs, const GroupElement& w);
/// N(X) = union of N(w) over w in X.
InversionSet inversion_set_of_set(const RootSystem& rs, std::span<const GroupElement> xs);

/// Coxeter length, computed as |N(w)|.
std::size_t length(const RootSystem& rs, const GroupElement& w);

/// Generator indices (0-based) of a reduced word, peeling left descents.
std::vector<std::size_t> reduced_word(const RootSystem& rs, const GroupElement& w);
GroupElement element_from_word(const RootSystem& rs, std::span<const std::size_t> word);

GroupElement longest_element(const RootSystem& rs);
bool is_central(const RootSystem& rs, const GroupElement& w);

/// The reflection r_alpha for positive root i.
GroupElement reflection(const RootSystem& rs, std::size_t root_index);
std::vector<GroupElement> all_reflections(const RootSystem& rs);

/// Matrix of w on ambient coordinates, row-vector convention (v . w = v M).
template <class T>
Matrix<T> element_matrix(const RootSystem& rs, const GroupElement& w);

/// Basis of V_1(w) in ambient coordinates.
///
/// The ambient space may be larger than the span of the roots (A_{n-1} lives
/// in R^n); W acts trivially on the complement, so `essential_dimension`
/// subtracts it.
class FixedSpace {
 public:
  FixedSpace(std::variant<Matrix<Rational>, Matrix<double>> basis, std::size_t inessential)
      : basis_(std::move(basis)), inessential_(inessential) {}

  std::size_t dimension() const;
  std::size_t essential_dimension() const { return dimension() - inessential_; }

  /// True iff x fixes every basis vector.
  bool fixed_by(const RootSystem& rs, const GroupElement& x) const;

  const std::variant<Matrix<Rational>, Matrix<double>>& basis() const { return basis_; }
  Matrix<double> real_basis() const;

 private:
  std::variant<Matrix<Rational>, Matrix<double>> basis_;
  std::size_t inessential_;
};

FixedSpace fixed_space(const RootSystem& rs, const GroupElement& w);
/// Dimension of V_1(w) inside the span of the roots.
std::size_t fixed_space_dim(const RootSystem& rs, const GroupElement& w);
Matrix<double> fixed_space_basis(const RootSystem& rs, const GroupElement& w);

/// L(w) = rank - dim V_1(w).
std::size_t reflection_length(const RootSystem& rs, const GroupElement& w);

/// V_1(w) = 0. Throws std::invalid_argument for reducible systems.
bool is_cuspidal(const RootSystem& rs, const GroupElement& w);

/// Product of all simple reflections in index order.
GroupElement coxeter_element(const RootSystem& rs);

}  // namespace coxex

#endif  // COXEX_ROOT_CORE_HPP
