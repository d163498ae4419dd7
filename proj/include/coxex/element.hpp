#ifndef COXEX_ELEMENT_HPP
#define COXEX_ELEMENT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace coxex {

/// A root of Phi encoded as a positive-root index plus a sign.
class SignedRoot {
 public:
  constexpr SignedRoot() = default;

  static constexpr SignedRoot positive(std::size_t index) {
    return SignedRoot(static_cast<std::uint16_t>(index << 1));
  }
  static constexpr SignedRoot negative(std::size_t index) {
    return SignedRoot(static_cast<std::uint16_t>((index << 1) | 1u));
  }

  constexpr std::size_t index() const { return bits_ >> 1; }
  constexpr bool is_negative() const { return bits_ & 1u; }
  constexpr SignedRoot operator-() const { return SignedRoot(bits_ ^ 1u); }

  /// 1-based signed integer: +(i+1) or -(i+1).
  int to_int() const;
  static SignedRoot from_int(int value);

  constexpr auto operator<=>(const SignedRoot&) const = default;

 private:
  constexpr explicit SignedRoot(std::uint16_t bits) : bits_(bits) {}
  std::uint16_t bits_ = 0;
};

/// A group element stored as its action on Phi+: image(i) = alpha_i . w.
///
/// Right action: compose(a, b) applies a, then b.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<SignedRoot> images);

  static GroupElement identity(std::size_t num_positive_roots);

  std::size_t size() const { return images_.size(); }
  SignedRoot image(std::size_t i) const { return images_[i]; }
  const std::vector<SignedRoot>& images() const { return images_; }

  SignedRoot act(SignedRoot root) const {
    const SignedRoot img = images_[root.index()];
    return root.is_negative() ? -img : img;
  }

  bool is_identity() const;

  auto operator<=>(const GroupElement&) const = default;

 private:
  std::vector<SignedRoot> images_;
};

GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement invert(const GroupElement& a);
bool is_involution(const GroupElement& a);
/// w^x = x^-1 w x.
GroupElement conjugate(const GroupElement& w, const GroupElement& x);

/// Subset of Phi+ as a bitset over positive-root indices.
class InversionSet {
 public:
  InversionSet() = default;
  explicit InversionSet(std::size_t num_positive_roots) : bits_(num_positive_roots) {}

  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool full() const { return bits_.all(); }
  bool contains(std::size_t i) const { return bits_.test(i); }
  void insert(std::size_t i) { bits_.set(i); }
  void erase(std::size_t i) { bits_.reset(i); }

  bool is_subset_of(const InversionSet& other) const { return bits_.is_subset_of(other.bits_); }

  InversionSet& operator|=(const InversionSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  InversionSet& operator&=(const InversionSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  friend InversionSet operator|(InversionSet a, const InversionSet& b) { return a |= b; }
  friend InversionSet operator&(InversionSet a, const InversionSet& b) { return a &= b; }
  friend InversionSet operator-(InversionSet a, const InversionSet& b) {
    a.bits_ -= b.bits_;
    return a;
  }
  bool operator==(const InversionSet&) const = default;

  std::vector<std::size_t> indices() const;

  static InversionSet all(std::size_t num_positive_roots);

 private:
  boost::dynamic_bitset<std::uint64_t> bits_;
};

}  // namespace coxex

template <>
struct std::hash<coxex::GroupElement> {
  std::size_t operator()(const coxex::GroupElement& w) const noexcept;
};

#endif  // COXEX_ELEMENT_HPP
