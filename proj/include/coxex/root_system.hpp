#ifndef COXEX_ROOT_SYSTEM_HPP
#define COXEX_ROOT_SYSTEM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coxex/descriptor.hpp"
#include "coxex/element.hpp"
#include "coxex/linear_algebra.hpp"

namespace coxex {

/// Coordinates of Phi+ in one scalar field.
///
/// Crystallographic systems use exact rationals in the usual e_i realizations;
/// I2(m), H3 and H4 use doubles in the simple-root basis.
template <class T>
struct Realization {
  std::size_t dimension = 0;
  /// Inner product of the ambient coordinate basis.
  Matrix<T> gram;
  /// Positive roots in ambient coordinates, indexed by root index.
  std::vector<Vector<T>> roots;
  /// Positive roots in the basis of simple roots.
  std::vector<Vector<T>> coefficients;
  /// Generator r acts on row vectors as v -> v * reflections[r].
  std::vector<Matrix<T>> reflections;
};

using ExactRealization = Realization<Rational>;
using RealRealization = Realization<double>;

/// Thrown when root-system closure does not terminate or violates an invariant.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Immutable root system of a finite Coxeter group, with per-generator
/// signed permutations of the positive-root indices.
class RootSystem {
 public:
  const CoxeterProduct& components() const { return components_; }
  bool is_irreducible() const { return components_.size() == 1; }
  /// The single descriptor; throws std::logic_error for products.
  const CoxeterDescriptor& descriptor() const;
  std::string name() const { return to_string(components_); }

  std::size_t rank() const { return simple_indices_.size(); }
  std::size_t num_positive_roots() const { return supports_.size(); }
  std::size_t dimension() const;
  bool exact() const { return std::holds_alternative<ExactRealization>(realization_); }

  std::size_t simple_index(std::size_t r) const { return simple_indices_[r]; }
  const std::vector<std::size_t>& simple_indices() const { return simple_indices_; }
  const GroupElement& generator(std::size_t r) const { return generators_[r]; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  GroupElement identity() const { return GroupElement::identity(num_positive_roots()); }

  /// Gram matrix <alpha_r, alpha_s> of the simple roots.
  const Matrix<double>& bilinear_form() const { return bilinear_form_; }

  /// Mask of generators whose simple root occurs in root i.
  std::uint64_t root_support(std::size_t i) const { return supports_[i]; }

  /// Index of the irreducible component owning generator r.
  std::size_t component_of_generator(std::size_t r) const;
  /// First generator index of component c.
  std::size_t generator_offset(std::size_t c) const { return offsets_[c]; }

  const std::variant<ExactRealization, RealRealization>& realization() const { return realization_; }
  Vector<double> real_root(std::size_t i) const;
  Vector<double> real_coefficients(std::size_t i) const;

  /// Human-readable root: "e1-e2", "e3" for A/B/D; simple-root coefficients otherwise.
  std::string root_label(std::size_t i) const;
  std::string root_label(SignedRoot r) const;

  std::optional<SignedRoot> find_root(const Vector<Rational>& coords) const;
  std::optional<SignedRoot> find_root(const Vector<double>& coords) const;

  /// Index of the root with the given label, if any.
  std::optional<std::size_t> find_label(const std::string& label) const;

 private:
  friend RootSystem build_root_system(const CoxeterProduct& product);
  template <class T>
  friend RootSystem assemble(const CoxeterProduct&, Realization<T>, std::vector<std::size_t>,
                             std::vector<std::vector<SignedRoot>>);

  RootSystem() = default;
  void finish(std::vector<std::vector<SignedRoot>> tables);

  CoxeterProduct components_;
  std::vector<std::size_t> offsets_;
  std::variant<ExactRealization, RealRealization> realization_;
  std::vector<std::size_t> simple_indices_;
  std::vector<GroupElement> generators_;
  Matrix<double> bilinear_form_;
  std::vector<std::uint64_t> supports_;
  std::map<Vector<Rational>, std::size_t> exact_index_;
};

/// Builds Phi by closing the simple roots under the generator reflections.
RootSystem build_root_system(const CoxeterDescriptor& descriptor);
RootSystem build_root_system(const CoxeterProduct& product);

/// Reconstructs a root system from stored coordinates and tables.
///
/// Used by the JSON cache loader; validates every structural invariant.
template <class T>
RootSystem assemble(const CoxeterProduct& product, Realization<T> realization,
                    std::vector<std::size_t> simple_indices,
                    std::vector<std::vector<SignedRoot>> tables);

}  // namespace coxex

#endif  // COXEX_ROOT_SYSTEM_HPP
