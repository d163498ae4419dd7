#include "coxex/root_system.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace coxex {

std::string to_string(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

namespace {

// Closure gives up beyond this many positive roots (E8 has 120).
constexpr std::size_t kClosureLimit = 20000;

template <class T>
struct Seed {
  std::size_t dimension = 0;
  Matrix<T> gram;
  std::vector<Vector<T>> simple;
};

Vector<Rational> unit_combo(std::size_t dim, std::initializer_list<std::pair<std::size_t, Rational>> terms) {
  Vector<Rational> v(dim, Rational(0));
  for (const auto& [i, c] : terms) v[i] += c;
  return v;
}

Seed<Rational> exact_seed(const CoxeterDescriptor& d) {
  const auto n = static_cast<std::size_t>(d.rank);
  Seed<Rational> s;
  auto diff = [&](std::size_t dim, std::size_t i, std::size_t j) {
    return unit_combo(dim, {{i, Rational(1)}, {j, Rational(-1)}});
  };
  switch (d.family) {
    case Family::A:
      s.dimension = n + 1;
      for (std::size_t i = 0; i < n; ++i) s.simple.push_back(diff(n + 1, i, i + 1));
      break;
    case Family::B:
      s.dimension = n;
      for (std::size_t i = 0; i + 1 < n; ++i) s.simple.push_back(diff(n, i, i + 1));
      s.simple.push_back(unit_combo(n, {{n - 1, Rational(1)}}));
      break;
    case Family::D:
      s.dimension = n;
      for (std::size_t i = 0; i + 1 < n; ++i) s.simple.push_back(diff(n, i, i + 1));
      s.simple.push_back(unit_combo(n, {{n - 2, Rational(1)}, {n - 1, Rational(1)}}));
      break;
    case Family::F4: {
      s.dimension = 4;
      const Rational h(1, 2);
      s.simple = {diff(4, 1, 2), diff(4, 2, 3), unit_combo(4, {{3, Rational(1)}}),
                  Vector<Rational>{h, -h, -h, -h}};
      break;
    }
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      s.dimension = 8;
      const Rational h(1, 2);
      Vector<Rational> a1(8, -h);
      a1[0] = h;
      a1[7] = h;
      s.simple.push_back(a1);
      s.simple.push_back(unit_combo(8, {{0, Rational(1)}, {1, Rational(1)}}));
      for (std::size_t i = 0; i + 2 < n; ++i) s.simple.push_back(diff(8, i + 1, i));
      break;
    }
    default:
      throw std::logic_error("exact_seed: non-crystallographic family");
  }
  s.gram = identity_matrix<Rational>(s.dimension);
  return s;
}

Seed<double> real_seed(const CoxeterDescriptor& d) {
  const auto m = coxeter_matrix(d);
  const auto n = m.size();
  Seed<double> s;
  s.dimension = n;
  s.gram.assign(n, Vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      s.gram[i][j] = -std::cos(std::numbers::pi / static_cast<double>(m[i][j]));
  s.simple = identity_matrix<double>(n);
  return s;
}

Seed<double> to_real(const Seed<Rational>& s) {
  Seed<double> out;
  out.dimension = s.dimension;
  for (const auto& row : s.gram) {
    out.gram.emplace_back();
    for (const auto& x : row) out.gram.back().push_back(to_double(x));
  }
  for (const auto& v : s.simple) {
    out.simple.emplace_back();
    for (const auto& x : v) out.simple.back().push_back(to_double(x));
  }
  return out;
}

template <class T>
Seed<T> direct_sum(const std::vector<Seed<T>>& parts) {
  Seed<T> out;
  for (const auto& p : parts) out.dimension += p.dimension;
  out.gram.assign(out.dimension, Vector<T>(out.dimension, T(0)));
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.dimension; ++i)
      for (std::size_t j = 0; j < p.dimension; ++j) out.gram[offset + i][offset + j] = p.gram[i][j];
    for (const auto& v : p.simple) {
      Vector<T> w(out.dimension, T(0));
      std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(offset));
      out.simple.push_back(std::move(w));
    }
    offset += p.dimension;
  }
  return out;
}

template <class T>
Matrix<T> reflection_matrix(const Matrix<T>& gram, const Vector<T>& alpha) {
  const std::size_t n = alpha.size();
  Vector<T> g_alpha(n, T(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g_alpha[i] += gram[i][j] * alpha[j];
  const T q = dot(alpha, gram, alpha);
  Matrix<T> m = identity_matrix<T>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] -= T(2) * g_alpha[i] * alpha[j] / q;
  return m;
}

/// -1, 0, +1 comparison of coordinate vectors with tolerance.
template <class T>
int lex_compare(const Vector<T>& u, const Vector<T>& v) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    const T d = u[i] - v[i];
    if (near_zero(d)) continue;
    return d > T(0) ? 1 : -1;
  }
  return 0;
}

template <class T>
bool all_nonnegative(const Vector<T>& v) {
  return std::all_of(v.begin(), v.end(), [](const T& x) { return x > T(0) || near_zero(x); });
}

template <class T>
Vector<T> negated(Vector<T> v) {
  for (auto& x : v) x = -x;
  return v;
}

template <class T>
std::optional<SignedRoot> locate(const std::vector<Vector<T>>& roots, const Vector<T>& v) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (approx_equal(roots[i], v)) return SignedRoot::positive(i);
    if (approx_equal(roots[i], negated(v))) return SignedRoot::negative(i);
  }
  return std::nullopt;
}

template <class T>
RootSystem close_and_assemble(const CoxeterProduct& product, const Seed<T>& seed) {
  const std::size_t rank = seed.simple.size();
  Realization<T> real;
  real.dimension = seed.dimension;
  real.gram = seed.gram;
  for (const auto& a : seed.simple) real.reflections.push_back(reflection_matrix(seed.gram, a));

  std::vector<Vector<T>> roots = seed.simple;
  std::vector<Vector<T>> coeffs = identity_matrix<T>(rank);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    for (std::size_t r = 0; r < rank; ++r) {
      const T c = T(2) * dot(seed.simple[r], seed.gram, roots[k]) / dot(seed.simple[r], seed.gram, seed.simple[r]);
      if (near_zero(c)) continue;
      Vector<T> image = roots[k];
      Vector<T> image_coeffs = coeffs[k];
      for (std::size_t i = 0; i < image.size(); ++i) image[i] -= c * seed.simple[r][i];
      image_coeffs[r] -= c;
      if (!all_nonnegative(image_coeffs)) {
        image = negated(std::move(image));
        image_coeffs = negated(std::move(image_coeffs));
        if (!all_nonnegative(image_coeffs))
          throw InternalError("root closure produced a root of mixed sign");
      }
      if (locate(roots, image)) continue;
      roots.push_back(std::move(image));
      coeffs.push_back(std::move(image_coeffs));
      if (roots.size() > kClosureLimit) throw InternalError("root closure did not terminate");
    }
  }

  // Stable index: descending lexicographic order on ambient coordinates.
  std::vector<std::size_t> order(roots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lex_compare(roots[a], roots[b]) > 0; });
  for (auto i : order) {
    real.roots.push_back(roots[i]);
    real.coefficients.push_back(coeffs[i]);
  }

  std::vector<std::size_t> simple_indices;
  for (std::size_t r = 0; r < rank; ++r) simple_indices.push_back(locate(real.roots, seed.simple[r])->index());

  std::vector<std::vector<SignedRoot>> tables(rank);
  for (std::size_t r = 0; r < rank; ++r) {
    for (const auto& beta : real.roots) {
      const auto img = locate(real.roots, apply_right(beta, real.reflections[r]));
      if (!img) throw InternalError("root system is not closed under generator " + std::to_string(r + 1));
      tables[r].push_back(*img);
    }
  }
  return assemble(product, std::move(real), std::move(simple_indices), std::move(tables));
}

template <class T>
void check_form_preserved(const Realization<T>& real, const std::vector<std::size_t>& simple) {
  for (std::size_t r = 0; r < real.reflections.size(); ++r) {
    for (auto s : simple)
      for (auto t : simple) {
        const auto u = apply_right(real.roots[s], real.reflections[r]);
        const auto v = apply_right(real.roots[t], real.reflections[r]);
        if (!near_zero(dot(u, real.gram, v) - dot(real.roots[s], real.gram, real.roots[t])))
          throw InternalError("generator action does not preserve the bilinear form");
      }
  }
}

}  // namespace

template <class T>
RootSystem assemble(const CoxeterProduct& product, Realization<T> realization,
                    std::vector<std::size_t> simple_indices,
                    std::vector<std::vector<SignedRoot>> tables) {
  RootSystem rs;
  rs.components_ = product;
  std::size_t offset = 0;
  for (const auto& d : product) {
    rs.offsets_.push_back(offset);
    offset += static_cast<std::size_t>(d.rank);
  }
  if (offset != simple_indices.size() || tables.size() != simple_indices.size())
    throw InternalError("generator count does not match descriptor rank");
  const std::size_t rank = simple_indices.size();

  rs.supports_.resize(realization.roots.size());
  for (std::size_t i = 0; i < realization.roots.size(); ++i) {
    std::uint64_t mask = 0;
    for (std::size_t r = 0; r < rank; ++r)
      if (!near_zero(realization.coefficients[i][r])) mask |= std::uint64_t{1} << r;
    rs.supports_[i] = mask;
  }
  rs.bilinear_form_.assign(rank, Vector<double>(rank, 0.0));
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t s = 0; s < rank; ++s)
      rs.bilinear_form_[r][s] = to_double(
          dot(realization.roots[simple_indices[r]], realization.gram, realization.roots[simple_indices[s]]));

  check_form_preserved(realization, simple_indices);
  if constexpr (std::is_same_v<T, Rational>) {
    for (std::size_t i = 0; i < realization.roots.size(); ++i) rs.exact_index_[realization.roots[i]] = i;
  }
  rs.simple_indices_ = std::move(simple_indices);
  rs.realization_ = std::move(realization);
  rs.finish(std::move(tables));
  return rs;
}

template RootSystem assemble<Rational>(const CoxeterProduct&, Realization<Rational>, std::vector<std::size_t>,
                                       std::vector<std::vector<SignedRoot>>);
template RootSystem assemble<double>(const CoxeterProduct&, Realization<double>, std::vector<std::size_t>,
                                     std::vector<std::vector<SignedRoot>>);

void RootSystem::finish(std::vector<std::vector<SignedRoot>> tables) {
  const std::size_t n = supports_.size();
  for (std::size_t r = 0; r < tables.size(); ++r) {
    if (tables[r].size() != n) throw InternalError("generator table has wrong length");
    std::vector<bool> hit(n, false);
    std::size_t negated = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const SignedRoot img = tables[r][i];
      if (img.index() >= n || hit[img.index()]) throw InternalError("generator table is not a bijection");
      hit[img.index()] = true;
      if (img.is_negative()) {
        ++negated;
        if (i != simple_indices_[r] || img.index() != i)
          throw InternalError("generator negates a root other than its simple root");
      }
    }
    if (negated != 1) throw InternalError("generator must negate exactly one positive root");
    generators_.emplace_back(std::move(tables[r]));
  }
}

const CoxeterDescriptor& RootSystem::descriptor() const {
  if (!is_irreducible()) throw std::logic_error("root system " + name() + " is reducible");
  return components_.front();
}

std::size_t RootSystem::dimension() const {
  return std::visit([](const auto& r) { return r.dimension; }, realization_);
}

std::size_t RootSystem::component_of_generator(std::size_t r) const {
  std::size_t c = 0;
  while (c + 1 < offsets_.size() && offsets_[c + 1] <= r) ++c;
  return c;
}

Vector<double> RootSystem::real_root(std::size_t i) const {
  return std::visit(
      [i](const auto& r) {
        Vector<double> out;
        for (const auto& x : r.roots[i]) out.push_back(to_double(x));
        return out;
      },
      realization_);
}

Vector<double> RootSystem::real_coefficients(std::size_t i) const {
  return std::visit(
      [i](const auto& r) {
        Vector<double> out;
        for (const auto& x : r.coefficients[i]) out.push_back(to_double(x));
        return out;
      },
      realization_);
}

std::string RootSystem::root_label(std::size_t i) const {
  std::ostringstream os;
  if (is_irreducible() && exact()) {
    const Family f = components_.front().family;
    if (f == Family::A || f == Family::B || f == Family::D) {
      const auto& v = std::get<ExactRealization>(realization_).roots[i];
      bool first = true;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == Rational(0)) continue;
        if (!first || v[k] < Rational(0)) os << (v[k] < Rational(0) ? "-" : "+");
        if (abs(v[k]) != Rational(1)) os << to_string(abs(v[k]));
        os << "e" << (k + 1);
        first = false;
      }
      return os.str();
    }
  }
  const auto c = real_coefficients(i);
  os << "(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) os << ",";
    const double rounded = std::round(c[k] * 1e6) / 1e6;
    os << (rounded == 0.0 ? 0.0 : rounded);
  }
  os << ")";
  return os.str();
}

std::string RootSystem::root_label(SignedRoot r) const {
  const std::string base = root_label(r.index());
  return r.is_negative() ? "-(" + base + ")" : base;
}

std::optional<std::size_t> RootSystem::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < num_positive_roots(); ++i)
    if (root_label(i) == label) return i;
  return std::nullopt;
}

std::optional<SignedRoot> RootSystem::find_root(const Vector<Rational>& coords) const {
  if (!exact()) {
    Vector<double> v;
    for (const auto& x : coords) v.push_back(to_double(x));
    return find_root(v);
  }
  if (auto it = exact_index_.find(coords); it != exact_index_.end()) return SignedRoot::positive(it->second);
  if (auto it = exact_index_.find(negated(coords)); it != exact_index_.end())
    return SignedRoot::negative(it->second);
  return std::nullopt;
}

std::optional<SignedRoot> RootSystem::find_root(const Vector<double>& coords) const {
  return std::visit(
      [&](const auto& r) -> std::optional<SignedRoot> {
        std::vector<Vector<double>> roots;
        for (const auto& v : r.roots) {
          roots.emplace_back();
          for (const auto& x : v) roots.back().push_back(to_double(x));
        }
        return locate(roots, coords);
      },
      realization_);
}

RootSystem build_root_system(const CoxeterDescriptor& descriptor) {
  return build_root_system(CoxeterProduct{descriptor});
}

RootSystem build_root_system(const CoxeterProduct& product) {
  if (product.empty()) throw std::invalid_argument("empty Coxeter product");
  int total_rank = 0;
  bool all_exact = true;
  for (const auto& d : product) {
    validate(d);
    total_rank += d.rank;
    all_exact = all_exact && is_crystallographic(d.family);
  }
  if (total_rank > 64) throw std::invalid_argument("total rank exceeds 64");
  if (all_exact) {
    std::vector<Seed<Rational>> parts;
    for (const auto& d : product) parts.push_back(exact_seed(d));
    return close_and_assemble(product, direct_sum(parts));
  }
  std::vector<Seed<double>> parts;
  for (const auto& d : product)
    parts.push_back(is_crystallographic(d.family) ? to_real(exact_seed(d)) : real_seed(d));
  return close_and_assemble(product, direct_sum(parts));
}

}  // namespace coxex
