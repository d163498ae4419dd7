#include "coxex/root_core.hpp"

#include <stdexcept>

namespace coxex {

InversionSet inversion_set(const RootSystem& rs, const GroupElement& w) {
  InversionSet n(rs.num_positive_roots());
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w.image(i).is_negative()) n.insert(i);
  return n;
}

InversionSet inversion_set_of_set(const RootSystem& rs, std::span<const GroupElement> xs) {
  InversionSet n(rs.num_positive_roots());
  for (const auto& x : xs) n |= inversion_set(rs, x);
  return n;
}

std::size_t length(const RootSystem&, const GroupElement& w) {
  std::size_t l = 0;
  for (auto img : w.images()) l += img.is_negative();
  return l;
}

std::vector<std::size_t> reduced_word(const RootSystem& rs, const GroupElement& w) {
  std::vector<std::size_t> word;
  GroupElement rest = w;
  while (true) {
    std::size_t r = 0;
    while (r < rs.rank() && !rest.image(rs.simple_index(r)).is_negative()) ++r;
    if (r == rs.rank()) break;
    word.push_back(r);
    rest = compose(rs.generator(r), rest);
  }
  return word;
}

GroupElement element_from_word(const RootSystem& rs, std::span<const std::size_t> word) {
  GroupElement w = rs.identity();
  for (auto r : word) {
    if (r >= rs.rank()) throw std::out_of_range("generator index out of range");
    w = compose(w, rs.generator(r));
  }
  return w;
}

GroupElement longest_element(const RootSystem& rs) {
  // w0 sends every positive root to a negative one; build it by descent-free growth.
  GroupElement w = rs.identity();
  while (true) {
    std::size_t r = 0;
    while (r < rs.rank() && w.image(rs.simple_index(r)).is_negative()) ++r;
    if (r == rs.rank()) return w;
    w = compose(rs.generator(r), w);
  }
}

bool is_central(const RootSystem& rs, const GroupElement& w) {
  for (const auto& g : rs.generators())
    if (compose(g, w) != compose(w, g)) return false;
  return true;
}

namespace {

template <class T>
GroupElement reflection_impl(const RootSystem& rs, const Realization<T>& real, std::size_t i) {
  const auto& alpha = real.roots[i];
  const T q = dot(alpha, real.gram, alpha);
  std::vector<SignedRoot> images;
  for (const auto& beta : real.roots) {
    const T c = T(2) * dot(alpha, real.gram, beta) / q;
    Vector<T> img = beta;
    for (std::size_t k = 0; k < img.size(); ++k) img[k] -= c * alpha[k];
    const auto found = rs.find_root(img);
    if (!found) throw InternalError("reflection image is not a root");
    images.push_back(*found);
  }
  return GroupElement(std::move(images));
}

}  // namespace

GroupElement reflection(const RootSystem& rs, std::size_t root_index) {
  return std::visit([&](const auto& real) { return reflection_impl(rs, real, root_index); }, rs.realization());
}

std::vector<GroupElement> all_reflections(const RootSystem& rs) {
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < rs.num_positive_roots(); ++i) out.push_back(reflection(rs, i));
  return out;
}

template <class T>
Matrix<T> element_matrix(const RootSystem& rs, const GroupElement& w) {
  const auto* real = std::get_if<Realization<T>>(&rs.realization());
  if (!real) throw std::logic_error("element_matrix: scalar type does not match the realization");
  Matrix<T> m = identity_matrix<T>(real->dimension);
  for (auto r : reduced_word(rs, w)) m = multiply(m, real->reflections[r]);
  return m;
}

template Matrix<Rational> element_matrix<Rational>(const RootSystem&, const GroupElement&);
template Matrix<double> element_matrix<double>(const RootSystem&, const GroupElement&);

std::size_t FixedSpace::dimension() const {
  return std::visit([](const auto& b) { return b.size(); }, basis_);
}

bool FixedSpace::fixed_by(const RootSystem& rs, const GroupElement& x) const {
  return std::visit(
      [&](const auto& basis) {
        using T = typename std::decay_t<decltype(basis)>::value_type::value_type;
        if (basis.empty()) return true;
        const auto m = element_matrix<T>(rs, x);
        for (const auto& v : basis)
          if (!approx_equal(apply_right(v, m), v)) return false;
        return true;
      },
      basis_);
}

Matrix<double> FixedSpace::real_basis() const {
  return std::visit(
      [](const auto& basis) {
        Matrix<double> out;
        for (const auto& v : basis) {
          out.emplace_back();
          for (const auto& x : v) out.back().push_back(to_double(x));
        }
        return out;
      },
      basis_);
}

namespace {

template <class T>
FixedSpace fixed_space_impl(const RootSystem& rs, const Realization<T>& real, const GroupElement& w) {
  Matrix<T> m = element_matrix<T>(rs, w);
  for (std::size_t i = 0; i < real.dimension; ++i) m[i][i] -= T(1);
  return FixedSpace(null_space(transpose(m), real.dimension), real.dimension - rs.rank());
}

}  // namespace

FixedSpace fixed_space(const RootSystem& rs, const GroupElement& w) {
  return std::visit([&](const auto& real) { return fixed_space_impl(rs, real, w); }, rs.realization());
}

std::size_t fixed_space_dim(const RootSystem& rs, const GroupElement& w) {
  return fixed_space(rs, w).essential_dimension();
}

Matrix<double> fixed_space_basis(const RootSystem& rs, const GroupElement& w) {
  return fixed_space(rs, w).real_basis();
}

std::size_t reflection_length(const RootSystem& rs, const GroupElement& w) {
  return rs.rank() - fixed_space_dim(rs, w);
}

bool is_cuspidal(const RootSystem& rs, const GroupElement& w) {
  if (!rs.is_irreducible()) throw std::invalid_argument("is_cuspidal: " + rs.name() + " is reducible");
  return fixed_space_dim(rs, w) == 0;
}

GroupElement coxeter_element(const RootSystem& rs) {
  GroupElement w = rs.identity();
  for (const auto& g : rs.generators()) w = compose(w, g);
  return w;
}

}  // namespace coxex
