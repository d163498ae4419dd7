#include "coxex/signed_perm.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "coxex/enumeration.hpp"
#include "coxex/parabolic.hpp"
#include "coxex/root_core.hpp"

namespace coxex {

namespace {

int sign_of(int v) { return v < 0 ? -1 : 1; }
std::size_t point_of(int v) { return static_cast<std::size_t>(std::abs(v)); }

Family abd_family(const RootSystem& rs) {
  const Family f = rs.descriptor().family;
  if (f != Family::A && f != Family::B && f != Family::D)
    throw std::invalid_argument(rs.name() + " has no signed-permutation realization");
  return f;
}

}  // namespace

SignedPermutation::SignedPermutation(std::size_t n) : images_(n) {
  for (std::size_t i = 0; i < n; ++i) images_[i] = static_cast<int>(i + 1);
}

SignedPermutation SignedPermutation::from_images(std::vector<int> images) {
  std::vector<bool> hit(images.size(), false);
  for (int v : images) {
    const auto p = point_of(v);
    if (p < 1 || p > images.size() || hit[p - 1]) throw std::invalid_argument("signed images are not a bijection");
    hit[p - 1] = true;
  }
  SignedPermutation sp;
  sp.images_ = std::move(images);
  return sp;
}

bool SignedPermutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("compose: degrees differ");
  std::vector<int> out(a.degree());
  for (std::size_t i = 1; i <= a.degree(); ++i) {
    const int v = a.image(i);
    out[i - 1] = sign_of(v) * b.image(point_of(v));
  }
  return SignedPermutation::from_images(std::move(out));
}

SignedPermutation invert(const SignedPermutation& a) {
  std::vector<int> out(a.degree());
  for (std::size_t i = 1; i <= a.degree(); ++i) {
    const int v = a.image(i);
    out[point_of(v) - 1] = sign_of(v) * static_cast<int>(i);
  }
  return SignedPermutation::from_images(std::move(out));
}

bool is_involution(const SignedPermutation& a) { return compose(a, a).is_identity(); }

SignedPermutation conjugate(const SignedPermutation& w, const SignedPermutation& x) {
  return compose(compose(invert(x), w), x);
}

bool SignedCycle::negative_type() const {
  return std::count(signs.begin(), signs.end(), -1) % 2 == 1;
}

bool SignedCycle::all_positive() const {
  return std::all_of(signs.begin(), signs.end(), [](int s) { return s > 0; });
}

SignedPermutation parse_signed_permutation(std::string_view text, std::size_t degree) {
  std::vector<int> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<int>(i + 1);
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    return ParseError("cannot parse '" + std::string(text) + "' at offset " + std::to_string(pos) + ": " + why);
  };

  skip_space();
  if (pos == text.size()) return SignedPermutation(degree);
  if (text.substr(pos) == "()") return SignedPermutation(degree);

  while (true) {
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<std::pair<int, std::size_t>> cycle;  // (sign, point)
    while (true) {
      skip_space();
      if (pos >= text.size()) throw fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] != '+' && text[pos] != '-') throw fail("expected '+' or '-'");
      const int sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw fail("expected a point number");
      const auto point = std::stoul(std::string(text.substr(start, pos - start)));
      if (point < 1 || point > degree) throw fail("point " + std::to_string(point) + " out of range 1.." +
                                                  std::to_string(degree));
      if (used[point - 1]) throw fail("point " + std::to_string(point) + " repeated");
      used[point - 1] = true;
      cycle.emplace_back(sign, point);
      if (pos < text.size() && text[pos] != ' ' && text[pos] != ')') throw fail("expected ' ' or ')'");
    }
    if (cycle.empty()) throw fail("empty cycle");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto& [sign, point] = cycle[i];
      images[point - 1] = sign * static_cast<int>(cycle[(i + 1) % cycle.size()].second);
    }
  }
  return SignedPermutation::from_images(std::move(images));
}

namespace {

CycleDecomposition decompose(const SignedPermutation& sp, bool keep_fixed) {
  CycleDecomposition cd;
  cd.degree = sp.degree();
  std::vector<bool> seen(sp.degree() + 1, false);
  for (std::size_t start = 1; start <= sp.degree(); ++start) {
    if (seen[start]) continue;
    SignedCycle c;
    std::size_t p = start;
    do {
      seen[p] = true;
      const int v = sp.image(p);
      c.points.push_back(p);
      c.signs.push_back(sign_of(v));
      p = point_of(v);
    } while (p != start);
    if (c.size() == 1 && c.signs[0] > 0 && !keep_fixed) continue;
    cd.cycles.push_back(std::move(c));
  }
  return cd;
}

}  // namespace

CycleDecomposition cycle_decomposition(const SignedPermutation& sp) { return decompose(sp, false); }
CycleDecomposition full_cycle_decomposition(const SignedPermutation& sp) { return decompose(sp, true); }

std::string format(const SignedPermutation& sp) {
  const auto cd = cycle_decomposition(sp);
  if (cd.cycles.empty()) return "()";
  std::string out;
  for (const auto& c : cd.cycles) {
    out += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += " ";
      out += c.signs[i] < 0 ? "-" : "+";
      out += std::to_string(c.points[i]);
    }
    out += ")";
  }
  return out;
}

SignedPermutation cycle_element(const SignedCycle& cycle, std::size_t degree) {
  CycleDecomposition cd{degree, {cycle}};
  return from_cycles(cd);
}

SignedPermutation from_cycles(const CycleDecomposition& cd) {
  std::vector<int> images(cd.degree);
  for (std::size_t i = 0; i < cd.degree; ++i) images[i] = static_cast<int>(i + 1);
  for (const auto& c : cd.cycles)
    for (std::size_t i = 0; i < c.size(); ++i)
      images[c.points[i] - 1] = c.signs[i] * static_cast<int>(c.points[(i + 1) % c.size()]);
  return SignedPermutation::from_images(std::move(images));
}

bool is_positive(const SignedPermutation& sp) {
  return std::count_if(sp.images().begin(), sp.images().end(), [](int v) { return v < 0; }) % 2 == 0;
}

std::vector<std::size_t> positive_support(const SignedPermutation& sp) {
  std::vector<std::size_t> out;
  for (std::size_t a = 1; a <= sp.degree(); ++a)
    if (sp.image(a) != static_cast<int>(a)) out.push_back(a);
  return out;
}

GroupElement to_root_perm(const SignedPermutation& sp, const RootSystem& rs) {
  const Family f = abd_family(rs);
  if (sp.degree() != degree(rs))
    throw std::invalid_argument("degree " + std::to_string(sp.degree()) + " does not match " + rs.name());
  if (f == Family::A && std::any_of(sp.images().begin(), sp.images().end(), [](int v) { return v < 0; }))
    throw std::invalid_argument(format(sp) + " carries signs and is not in W(" + rs.name() + ")");
  if (f == Family::D && !is_positive(sp)) throw std::invalid_argument(format(sp) + " is not in W(" + rs.name() + ")");

  const auto& real = std::get<ExactRealization>(rs.realization());
  std::vector<SignedRoot> images;
  images.reserve(real.roots.size());
  for (const auto& v : real.roots) {
    Vector<Rational> u(v.size(), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == Rational(0)) continue;
      const int img = sp.image(i + 1);
      u[point_of(img) - 1] = v[i] * sign_of(img);
    }
    const auto found = rs.find_root(u);
    if (!found) throw InternalError("signed permutation does not preserve the root system");
    images.push_back(*found);
  }
  return GroupElement(std::move(images));
}

SignedPermutation from_root_perm(const GroupElement& w, const RootSystem& rs) {
  abd_family(rs);
  const auto m = element_matrix<Rational>(rs, w);
  std::vector<int> images(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    int found = 0;
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (m[i][j] == Rational(0)) continue;
      if (found != 0 || (m[i][j] != Rational(1) && m[i][j] != Rational(-1)))
        throw InternalError("element matrix is not a signed permutation");
      found = static_cast<int>(j + 1) * (m[i][j] < Rational(0) ? -1 : 1);
    }
    if (found == 0) throw InternalError("element matrix is singular");
    images[i] = found;
  }
  return SignedPermutation::from_images(std::move(images));
}

namespace {

SignedPermutation sign_change(const std::vector<std::size_t>& points, std::size_t n) {
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<int>(i + 1);
  for (auto p : points) images[p - 1] = -images[p - 1];
  return SignedPermutation::from_images(std::move(images));
}

// Involution exchanging two w-cycles of equal length and sign type while
// commuting with w: a_i <-> s_i b_i with s_{i+1} = s_i e_i d_i.
SignedPermutation block_swap(const SignedCycle& a, const SignedCycle& b, std::size_t n) {
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<int>(i + 1);
  int s = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    images[a.points[i] - 1] = s * static_cast<int>(b.points[i]);
    images[b.points[i] - 1] = s * static_cast<int>(a.points[i]);
    s *= a.signs[i] * b.signs[i];
  }
  return SignedPermutation::from_images(std::move(images));
}

}  // namespace

std::vector<SignedPermutation> centralizer_generators(const SignedPermutation& sp, Ambient ambient) {
  const std::size_t n = sp.degree();
  const auto cd = full_cycle_decomposition(sp);
  std::vector<SignedPermutation> gens;
  for (const auto& c : cd.cycles) {
    const auto g = cycle_element(c, n);
    if (!g.is_identity()) gens.push_back(g);
    gens.push_back(sign_change(c.points, n));
  }
  for (std::size_t i = 0; i < cd.cycles.size(); ++i) {
    // Swap with the next cycle of the same length and sign type.
    for (std::size_t j = i + 1; j < cd.cycles.size(); ++j) {
      const auto& a = cd.cycles[i];
      const auto& b = cd.cycles[j];
      if (a.size() == b.size() && a.negative_type() == b.negative_type()) {
        gens.push_back(block_swap(a, b, n));
        break;
      }
    }
  }
  if (ambient == Ambient::D) {
    // Schreier generators of the index <= 2 subgroup of positive elements.
    const auto t = std::find_if(gens.begin(), gens.end(), [](const auto& g) { return !is_positive(g); });
    if (t != gens.end()) {
      const SignedPermutation rep = *t;
      const SignedPermutation rep_inv = invert(rep);
      std::vector<SignedPermutation> schreier;
      for (const auto& s : gens) {
        if (is_positive(s)) {
          schreier.push_back(s);
          schreier.push_back(compose(compose(rep, s), rep_inv));
        } else {
          schreier.push_back(compose(s, rep_inv));
          schreier.push_back(compose(rep, s));
        }
      }
      gens = std::move(schreier);
    }
  }
  std::vector<SignedPermutation> unique;
  for (auto& g : gens)
    if (!g.is_identity() && std::find(unique.begin(), unique.end(), g) == unique.end()) unique.push_back(std::move(g));
  return unique;
}

std::vector<SignedPermutation> centralizer_elements(const SignedPermutation& sp, Ambient ambient, std::size_t guard) {
  const auto gens = centralizer_generators(sp, ambient);
  std::vector<SignedPermutation> elements{SignedPermutation(sp.degree())};
  std::unordered_set<SignedPermutation> seen(elements.begin(), elements.end());
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const auto& g : gens) {
      auto next = compose(elements[k], g);
      if (seen.contains(next)) continue;
      if (elements.size() >= guard)
        throw GuardExceeded("centralizer of " + format(sp) + " exceeds the guard of " + std::to_string(guard));
      seen.insert(next);
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

SignedPermutation constructive_inverter(const CycleDecomposition& cd) {
  std::vector<int> images(cd.degree);
  for (std::size_t i = 0; i < cd.degree; ++i) images[i] = static_cast<int>(i + 1);
  for (const auto& c : cd.cycles) {
    // Reflect the cycle about its first point: a_i -> s_i a_{-i}, where the
    // signs satisfy s_0 = +, s_{i+1} = s_i e_i e_{-i-1}.
    const std::size_t m = c.size();
    int s = 1;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t mirror = (m - i) % m;
      images[c.points[i] - 1] = s * static_cast<int>(c.points[mirror]);
      s *= c.signs[i] * c.signs[(2 * m - i - 1) % m];
    }
  }
  return SignedPermutation::from_images(std::move(images));
}

}  // namespace coxex

std::size_t std::hash<coxex::SignedPermutation>::operator()(const coxex::SignedPermutation& sp) const noexcept {
  return boost::hash_range(sp.images().begin(), sp.images().end());
}
