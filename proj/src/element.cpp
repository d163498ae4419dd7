#include "coxex/element.hpp"

#include <stdexcept>

#include <boost/container_hash/hash.hpp>

namespace coxex {

int SignedRoot::to_int() const {
  const int v = static_cast<int>(index()) + 1;
  return is_negative() ? -v : v;
}

SignedRoot SignedRoot::from_int(int value) {
  if (value == 0) throw std::invalid_argument("signed root index 0 is not valid");
  return value > 0 ? positive(static_cast<std::size_t>(value - 1))
                   : negative(static_cast<std::size_t>(-value - 1));
}

GroupElement::GroupElement(std::vector<SignedRoot> images) : images_(std::move(images)) {}

GroupElement GroupElement::identity(std::size_t num_positive_roots) {
  std::vector<SignedRoot> images(num_positive_roots);
  for (std::size_t i = 0; i < num_positive_roots; ++i) images[i] = SignedRoot::positive(i);
  return GroupElement(std::move(images));
}

bool GroupElement::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != SignedRoot::positive(i)) return false;
  return true;
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: elements of different root systems");
  std::vector<SignedRoot> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b.act(a.image(i));
  return GroupElement(std::move(out));
}

GroupElement invert(const GroupElement& a) {
  std::vector<SignedRoot> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const SignedRoot img = a.image(i);
    out[img.index()] = img.is_negative() ? SignedRoot::negative(i) : SignedRoot::positive(i);
  }
  return GroupElement(std::move(out));
}

bool is_involution(const GroupElement& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.act(a.image(i)) != SignedRoot::positive(i)) return false;
  return true;
}

GroupElement conjugate(const GroupElement& w, const GroupElement& x) {
  return compose(compose(invert(x), w), x);
}

std::vector<std::size_t> InversionSet::indices() const {
  std::vector<std::size_t> out;
  for (auto i = bits_.find_first(); i != bits_.npos; i = bits_.find_next(i)) out.push_back(i);
  return out;
}

InversionSet InversionSet::all(std::size_t num_positive_roots) {
  InversionSet s(num_positive_roots);
  s.bits_.set();
  return s;
}

}  // namespace coxex

std::size_t std::hash<coxex::GroupElement>::operator()(const coxex::GroupElement& w) const noexcept {
  std::size_t seed = 0;
  for (auto r : w.images()) boost::hash_combine(seed, r.to_int());
  return seed;
}
